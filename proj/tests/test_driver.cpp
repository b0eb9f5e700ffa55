#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>

#include "doctest.h"
#include "orw/parse.hpp"
#include "orw/suite.hpp"

using namespace orw;

namespace {

const AlgebraPresentation& vir() {
    static AlgebraPresentation a = catalog_build("vir", {});
    return a;
}

const AlgebraPresentation& ns() {
    static AlgebraPresentation a = catalog_build("ns", {});
    return a;
}

std::string offset_of(const AlgebraPresentation& alg, const std::string& text) {
    try {
        parse_element(alg, text);
    } catch (const ParseError& e) {
        return std::to_string(e.offset());
    }
    return "no error";
}

}  // namespace

TEST_CASE("elements parse to their printed form") {
    auto roundtrip = [](const AlgebraPresentation& alg, const std::string& text) {
        return env_str(alg, parse_element(alg, text));
    };
    CHECK(roundtrip(vir(), "1 * L[0] L[1] + -1 * L[1]") == "1 * L[0] L[1] + -1 * L[1]");
    CHECK(roundtrip(ns(), "1 * G[3/2] L[2]") == "1 * G[3/2] L[2]");
    CHECK(roundtrip(vir(), "-1/2 * L[0] + L[1]") == "-1/2 * L[0] + 1 * L[1]");
    CHECK(roundtrip(vir(), "L[2]") == "1 * L[2]");
    CHECK(roundtrip(vir(), "C") == "1 * C");
    CHECK(roundtrip(vir(), "3 * 1") == "3 * 1");
    CHECK(roundtrip(vir(), "0") == "0");
    // whitespace is free between tokens; words may pack generators tight
    CHECK(roundtrip(vir(), "  2/3*L[1]L[-1]  ") == "2/3 * L[1] L[-1]");
    // repeated words merge, cancelling terms vanish
    CHECK(roundtrip(vir(), "L[0] + L[0]") == "2 * L[0]");
    CHECK(roundtrip(vir(), "L[0] + -1 * L[0]") == "0");
}

TEST_CASE("parse inverts printing on straightened elements") {
    const AlgebraPresentation& alg = ns();
    EnvElement prod = env_mul(alg, env_mul(alg, parse_element(alg, "G[1/2]"), parse_element(alg, "G[3/2]")),
                              parse_element(alg, "L[-1]"));
    EnvElement nf = normal_form(alg, prod);
    CHECK_FALSE(nf.is_zero());
    CHECK(parse_element(alg, env_str(alg, nf)) == nf);

    EnvElement sq = normal_form(alg, parse_element(alg, "G[-1/2] G[-1/2] G[1/2]"));
    CHECK(parse_element(alg, env_str(alg, sq)) == sq);
}

TEST_CASE("parse errors carry byte offsets") {
    CHECK(offset_of(ns(), "G[1/3]") == "2");
    CHECK(offset_of(vir(), "X[0]") == "0");
    CHECK(offset_of(vir(), "L[1/2]") == "2");
    CHECK(offset_of(vir(), "L") == "1");
    CHECK(offset_of(vir(), "2 L[0]") == "2");
    CHECK(offset_of(vir(), "1 * ") == "4");
    CHECK(offset_of(vir(), "L[0] L[1") == "8");
    CHECK(offset_of(vir(), "L[0] + + L[1]") == "7");
    CHECK(offset_of(vir(), "L[0] - L[1]") == "5");
    CHECK(offset_of(vir(), "0 + L[0]") == "2");
    CHECK(offset_of(vir(), "   ") == "3");
    CHECK(offset_of(vir(), "1/0 * L[0]") == "0");

    try {
        parse_element(vir(), "L[0] X[1]");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.offset() == 5);
        CHECK(std::string(e.what()) == "byte 5: unknown family 'X' in algebra 'vir'");
    }
}

TEST_CASE("status names and report serialization") {
    CHECK(to_string(CheckStatus::pass) == "pass");
    CHECK(to_string(CheckStatus::fail) == "fail");
    CHECK(to_string(CheckStatus::skipped_margin_limited) == "skipped-margin-limited");

    std::vector<CheckResult> rs;
    rs.push_back({"beta", "one", CheckStatus::fail, "residual \"x\"\nline two", 12.5});
    rs.push_back({"alpha", "two", CheckStatus::pass, "", 3.25});
    std::string j = report_json(rs);
    CHECK(j.find("\"schema\": \"orw-report/1\"") != std::string::npos);
    CHECK(j.find("\"pass\": 1") != std::string::npos);
    CHECK(j.find("\"fail\": 1") != std::string::npos);
    CHECK(j.find("residual \\\"x\\\"\\nline two") != std::string::npos);
    CHECK(j.find("wall") == std::string::npos);  // timings never serialize
    CHECK(j == report_json(rs));
    CHECK(j.back() == '\n');
}

TEST_CASE("suite names and config validation") {
    CHECK(is_suite("jacobi"));
    CHECK(is_suite("all"));
    CHECK_FALSE(is_suite("everything"));
    CHECK(suite_names().back() == "all");

    SuiteConfig cfg = default_config();
    CHECK_NOTHROW(validate(cfg));
    CHECK(cfg.lambda_sweep.size() == 4);
    CHECK(cfg.epsilon_sweep.size() == 2);

    SuiteConfig bad = cfg;
    bad.algebra_lo2 = 9;
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
    bad = cfg;
    bad.epsilon_sweep = {make_rational(1, 3)};
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
    bad = cfg;
    bad.lambda_sweep.clear();
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
    bad = cfg;
    bad.scan_margin2 = 30;
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);

    CHECK_THROWS_AS(run_suite("everything", cfg), std::invalid_argument);
}

namespace {

// Small windows keep the unit test quick; acceptance runs the full scale.
SuiteConfig small_config() {
    SuiteConfig cfg = default_config();
    cfg.algebra_lo2 = -4;
    cfg.algebra_hi2 = 4;
    cfg.module_lo2 = -4;
    cfg.module_hi2 = 4;
    cfg.identity_span2 = 4;
    cfg.identity_max_m = 2;
    cfg.scan_lo2 = -12;
    cfg.scan_hi2 = 12;
    cfg.lambda_sweep = {make_rational(-1, 2)};
    cfg.epsilon_sweep = {make_rational(1, 2)};
    return cfg;
}

const CheckResult* find(const std::vector<CheckResult>& rs, const std::string& check) {
    for (const CheckResult& r : rs)
        if (r.check == check)
            return &r;
    return nullptr;
}

}  // namespace

TEST_CASE("suite results are sorted, non-passes carry payloads") {
    SuiteConfig cfg = small_config();
    for (const char* name : {"jacobi", "lemma21", "lemma33"}) {
        std::vector<CheckResult> rs = run_suite(name, cfg);
        REQUIRE(!rs.empty());
        for (std::size_t i = 1; i < rs.size(); ++i)
            CHECK(std::pair(rs[i - 1].suite, rs[i - 1].check) < std::pair(rs[i].suite, rs[i].check));
        for (const CheckResult& r : rs) {
            CHECK(r.suite == name);
            if (r.status != CheckStatus::pass) {
                INFO(r.check);
                CHECK(!r.payload.empty());
            }
        }
    }
}

TEST_CASE("jacobi suite flags the inconsistent printed table and nothing else") {
    std::vector<CheckResult> rs = run_suite("jacobi", small_config());
    int fails = 0;
    for (const CheckResult& r : rs)
        if (r.status == CheckStatus::fail)
            ++fails;
    CHECK(fails == 1);
    const CheckResult* sw = find(rs, "sw22/jacobi");
    REQUIRE(sw != nullptr);
    CHECK(sw->status == CheckStatus::fail);
    CHECK(sw->payload.find("jacobi(") != std::string::npos);
    CHECK(sw->payload.find("more)") != std::string::npos);
    const CheckResult* anti = find(rs, "sw22/antisymmetry");
    REQUIRE(anti != nullptr);
    CHECK(anti->status == CheckStatus::pass);
}

TEST_CASE("lemma batteries report the expected orders") {
    SuiteConfig cfg = small_config();
    std::vector<CheckResult> rs = run_suite("lemma21", cfg);
    CHECK(all_passed(rs));
    const CheckResult* min_m = find(rs, "Aab/LL/min-m");
    REQUIRE(min_m != nullptr);
    CHECK(min_m->payload == "smallest annihilating order is 3");
    const CheckResult* res = find(rs, "Aab/LL/order-2-residual");
    REQUIRE(res != nullptr);
    CHECK(res->payload.find("-2*b^2 + 2*b") != std::string::npos);

    rs = run_suite("lemma31", cfg);
    CHECK(all_passed(rs));
    CHECK(find(rs, "HalfS[epsilon=1/2]/GG/min-m") != nullptr);
    CHECK(rs.size() == 4);
}

TEST_CASE("order-1 exterior reduction swallows every pair; order 2 does not") {
    std::vector<CheckResult> rs = run_suite("lemma33", small_config());
    const CheckResult* m1 = find(rs, "sharpness[m=1]");
    REQUIRE(m1 != nullptr);
    CHECK(m1->status == CheckStatus::fail);
    CHECK(m1->payload.find("reduce to zero at order 1") != std::string::npos);
    const CheckResult* m2 = find(rs, "sharpness[m=2]");
    REQUIRE(m2 != nullptr);
    CHECK(m2->status == CheckStatus::pass);
    CHECK(m2->payload.find("survive order-2 reduction") != std::string::npos);
    const CheckResult* certs = find(rs, "certificates[m=1]");
    REQUIRE(certs != nullptr);
    CHECK(certs->status == CheckStatus::pass);
    for (const CheckResult& r : rs)
        if (r.check.rfind("grid[", 0) == 0)
            CHECK(r.status == CheckStatus::pass);
}

TEST_CASE("module and scan batteries pass on the small configuration") {
    SuiteConfig cfg = small_config();
    std::vector<CheckResult> rs = run_suite("modules", cfg);
    CHECK(all_passed(rs));
    const CheckResult* pin = find(rs, "Sab/ns/pin");
    REQUIRE(pin != nullptr);
    CHECK(pin->payload.find("pinned=flip-gy") != std::string::npos);
    const CheckResult* pin22 = find(rs, "Sab/sw22/pin");
    REQUIRE(pin22 != nullptr);
    CHECK(pin22->payload.find("pinned=flip-even") != std::string::npos);

    rs = run_suite("thm34", cfg);
    CHECK(all_passed(rs));
    const CheckResult* tail = find(rs, "HalfS[epsilon=1/2]/odd-tail[a=1/2,b=1/3]");
    REQUIRE(tail != nullptr);
    CHECK(tail->payload.find("proper subspace") != std::string::npos);

    rs = run_suite("section5", cfg);
    CHECK(all_passed(rs));
    const CheckResult* w = find(rs, "Aab[a=0,b=0]/witness");
    REQUIRE(w != nullptr);
    CHECK(w->payload.find("span{v[0]}") != std::string::npos);
    CHECK(find(rs, "Sab[a=0,b=1/2]/no-witness")->status == CheckStatus::pass);
}

TEST_CASE("reports for a fixed battery are byte-identical across runs") {
    SuiteConfig cfg = small_config();
    std::string a = report_json(run_suite("lemma31", cfg));
    std::string b = report_json(run_suite("lemma31", cfg));
    CHECK(a == b);
    CHECK(a.find("\"skipped\": 0") != std::string::npos);
}

TEST_CASE("the full battery honors the configured sweeps") {
    SuiteConfig cfg = small_config();
    std::vector<CheckResult> rs = run_suite("all", cfg);
    bool saw_jacobi = false, saw_section5 = false;
    for (const CheckResult& r : rs) {
        saw_jacobi = saw_jacobi || r.suite == "jacobi";
        saw_section5 = saw_section5 || r.suite == "section5";
        CHECK(r.check.find("lambda=0") == std::string::npos);  // only the configured slice
    }
    CHECK(saw_jacobi);
    CHECK(saw_section5);
    CHECK_FALSE(all_passed(rs));  // sw22 table + order-1 sharpness stay red
}
