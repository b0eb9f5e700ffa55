// Command-line front end: bracket-table checks, module axiom checks with
// sign-convention pinning, annihilation-order scans, normal-form comparison,
// exterior-algebra reduction certificates, and the full verification suite.
// Exit codes: 0 all checks passed, 1 at least one check failed, 2 bad usage
// or configuration.
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "orw/grassmann.hpp"
#include "orw/parse.hpp"
#include "orw/suite.hpp"
#include "orw/weightmod.hpp"

using nlohmann::ordered_json;
using namespace orw;

namespace {

// Configuration or command-line problems; mapped to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational parse_rat(const std::string& text, const std::string& what) {
    std::optional<Rational> q = rational_from_string(text);
    if (!q)
        throw UsageError("bad rational for " + what + ": '" + text + "'");
    return *q;
}

// "lo..hi" with integer or half-integer endpoints, returned doubled.
std::pair<int, int> parse_window(const std::string& text) {
    std::size_t dots = text.find("..");
    if (dots == std::string::npos)
        throw UsageError("window must look like '-4..4' or '-7/2..7/2', got '" + text + "'");
    std::optional<HalfInt> lo = halfint_from_string(text.substr(0, dots));
    std::optional<HalfInt> hi = halfint_from_string(text.substr(dots + 2));
    if (!lo || !hi)
        throw UsageError("window endpoints must be integers or half-integers, got '" + text + "'");
    if (lo->doubled() > hi->doubled())
        throw UsageError("window is inverted: '" + text + "'");
    return {static_cast<int>(lo->doubled()), static_cast<int>(hi->doubled())};
}

ordered_json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open '" + path + "'");
    try {
        return ordered_json::parse(in);
    } catch (const ordered_json::parse_error& e) {
        throw UsageError("bad JSON in '" + path + "': " + e.what());
    }
}

std::string json_str(const ordered_json& j, const std::string& what) {
    if (!j.is_string())
        throw UsageError(what + " must be a JSON string");
    return j.get<std::string>();
}

void write_output(const std::string& path, const std::string& bytes) {
    if (path.empty()) {
        std::cout << bytes;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw UsageError("cannot write '" + path + "'");
    out << bytes;
}

// ------------------------------------------------------------ custom tables

AlgebraPresentation custom_from_json(const ordered_json& j) {
    std::string name = j.value("name", std::string("custom"));
    if (!j.contains("families") || !j["families"].is_array() || j["families"].empty())
        throw UsageError("custom table needs a nonempty 'families' array");
    std::vector<FamilySpec> families;
    for (const ordered_json& f : j["families"]) {
        FamilySpec fs;
        fs.symbol = json_str(f.at("symbol"), "family symbol");
        std::string parity = f.value("parity", std::string("even"));
        if (parity == "even")
            fs.parity = Parity::even;
        else if (parity == "odd")
            fs.parity = Parity::odd;
        else
            throw UsageError("family parity must be 'even' or 'odd', got '" + parity + "'");
        std::string lattice = f.value("lattice", std::string("Z"));
        if (lattice == "Z")
            fs.lattice.twice_offset = 0;
        else if (lattice == "Z+1/2")
            fs.lattice.twice_offset = 1;
        else
            throw UsageError("family lattice must be 'Z' or 'Z+1/2', got '" + lattice + "'");
        fs.central = f.value("central", false);
        families.push_back(std::move(fs));
    }

    // Resolve generator names against a bracketless copy of the families.
    AlgebraPresentation probe = custom_build(name, families, {});
    auto gen = [&](const ordered_json& g, const char* slot) {
        std::optional<GeneratorRef> ref = probe.gen_from_string(json_str(g, slot));
        if (!ref)
            throw UsageError(std::string(slot) + " '" + json_str(g, slot) + "' names no valid generator");
        return *ref;
    };

    std::vector<std::pair<std::pair<GeneratorRef, GeneratorRef>, std::vector<BracketTerm>>> table;
    for (const ordered_json& e : j.value("brackets", ordered_json::array())) {
        GeneratorRef x = gen(e.at("x"), "bracket x");
        GeneratorRef y = gen(e.at("y"), "bracket y");
        std::map<GeneratorRef, Rational> acc;
        for (const ordered_json& t : e.at("result")) {
            if (!t.is_array() || t.size() != 2)
                throw UsageError("bracket result entries must be [coefficient, generator] pairs");
            Rational c = parse_rat(json_str(t[0], "bracket coefficient"), "bracket coefficient");
            acc[gen(t[1], "bracket target")] += c;
        }
        std::vector<BracketTerm> terms;
        for (const auto& [target, coeff] : acc)
            if (coeff != make_rational(0))
                terms.push_back(BracketTerm{coeff, target});
        table.push_back({{x, y}, std::move(terms)});
    }
    return custom_build(name, families, std::move(table));
}

// --------------------------------------------------------- shared arguments

struct AlgebraArgs {
    std::string algebra;
    std::string lambda;   // rational text; empty = default
    std::string epsilon;  // rational text; empty = default
    std::string table;    // custom table path
    std::string window = "-4..4";
    std::string config;

    void add_flags(CLI::App* cmd) {
        cmd->add_option("--algebra", algebra, "catalog name: vir, witt, orw, q, bms3, sw22, ns");
        cmd->add_option("--lambda", lambda, "two-parameter family slice (orw only)");
        cmd->add_option("--epsilon", epsilon, "odd-lattice offset, 0 or 1/2 (orw only)");
        cmd->add_option("--table", table, "JSON file with a custom bracket table");
        cmd->add_option("--window", window, "index window 'lo..hi' (half-integers allowed)");
        cmd->add_option("--config", config, "JSON file whose keys override these flags");
    }

    void apply_config() {
        if (config.empty())
            return;
        ordered_json j = load_json(config);
        if (j.contains("algebra"))
            algebra = json_str(j["algebra"], "algebra");
        if (j.contains("lambda"))
            lambda = json_str(j["lambda"], "lambda");
        if (j.contains("epsilon"))
            epsilon = json_str(j["epsilon"], "epsilon");
        if (j.contains("table"))
            table = json_str(j["table"], "table");
        if (j.contains("window"))
            window = json_str(j["window"], "window");
    }

    AlgebraPresentation resolve(const std::string& fallback = "") const {
        if (!table.empty())
            return custom_from_json(load_json(table));
        std::string name = algebra.empty() ? fallback : algebra;
        if (name.empty())
            throw UsageError("no algebra selected: pass --algebra or --table");
        std::map<std::string, Rational> params;
        if (name == "orw") {
            params["lambda"] = parse_rat(lambda.empty() ? "-1/2" : lambda, "--lambda");
            params["epsilon"] = parse_rat(epsilon.empty() ? "1/2" : epsilon, "--epsilon");
        } else if (!lambda.empty() || !epsilon.empty()) {
            throw UsageError("--lambda/--epsilon only apply to the 'orw' family");
        }
        try {
            return catalog_build(name, params);
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
    }
};

struct ModuleArgs {
    AlgebraArgs host;
    std::string module;
    std::string a = "sym", b = "sym", c = "sym", mod_lambda = "sym";
    std::string spec_path;

    void add_flags(CLI::App* cmd) {
        cmd->add_option("--module", module, "Aab, Flambda, Aabc, Sab, PiSab, Aab_trivial_ext, HalfS");
        cmd->add_option("--a", a, "weight offset: rational or 'sym'");
        cmd->add_option("--b", b, "slope parameter: rational or 'sym'");
        cmd->add_option("--c", c, "central value: rational or 'sym'");
        cmd->add_option("--mod-lambda", mod_lambda, "density parameter of Flambda: rational or 'sym'");
        cmd->add_option("--spec", spec_path, "JSON module spec file");
        host.add_flags(cmd);
    }

    void apply_config() {
        host.apply_config();
        if (!host.config.empty()) {
            ordered_json j = load_json(host.config);
            if (j.contains("module"))
                module = json_str(j["module"], "module");
            for (auto [key, slot] : {std::pair<const char*, std::string*>{"a", &a}, {"b", &b}, {"c", &c},
                                     {"mod-lambda", &mod_lambda}, {"spec", &spec_path}})
                if (j.contains(key))
                    *slot = json_str(j[key], key);
        }
        if (!spec_path.empty()) {
            ordered_json j = load_json(spec_path);
            if (!j.contains("module"))
                throw UsageError("module spec file needs a 'module' key");
            module = json_str(j["module"], "module");
            for (auto [key, slot] : {std::pair<const char*, std::string*>{"a", &a}, {"b", &b}, {"c", &c},
                                     {"mod-lambda", &mod_lambda}, {"algebra", &host.algebra},
                                     {"lambda", &host.lambda}, {"epsilon", &host.epsilon}, {"table", &host.table}})
                if (j.contains(key))
                    *slot = json_str(j[key], key);
            if (j.contains("window")) {
                const ordered_json& w = j["window"];
                if (!w.is_array() || w.size() != 2 || !w[0].is_number_integer() || !w[1].is_number_integer())
                    throw UsageError("module spec 'window' must be [lo2, hi2] with doubled integer indices");
                host.window = to_string(HalfInt::from_doubled(w[0].get<int>())) + ".." +
                              to_string(HalfInt::from_doubled(w[1].get<int>()));
            }
        }
    }

    static std::string default_host(const std::string& module) {
        if (module == "Aab")
            return "vir";
        if (module == "Flambda")
            return "witt";
        if (module == "Aabc")
            return "q";
        if (module == "Sab" || module == "PiSab")
            return "ns";
        if (module == "Aab_trivial_ext" || module == "HalfS")
            return "orw";
        return "";
    }

    WeightModuleSpec resolve() const {
        if (module.empty())
            throw UsageError("no module selected: pass --module or --spec");
        AlgebraPresentation alg = host.resolve(default_host(module));
        std::map<std::string, PolyScalar> params;
        for (auto [key, text] : {std::pair<const char*, const std::string*>{"a", &a}, {"b", &b}, {"c", &c},
                                 {"lambda", &mod_lambda}})
            if (*text != "sym")
                params[key] = PolyScalar(parse_rat(*text, key));
        try {
            return module_build(module, alg, params);
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
    }
};

bool needs_pin(const std::string& module) { return module == "Sab" || module == "PiSab"; }

void print_violations(const std::vector<std::string>& violations, std::size_t keep = 10) {
    for (std::size_t i = 0; i < violations.size() && i < keep; ++i)
        std::cout << "  " << violations[i] << "\n";
    if (violations.size() > keep)
        std::cout << "  ... and " << violations.size() - keep << " more\n";
}

// ------------------------------------------------------------- subcommands

int run_algebra_check(AlgebraArgs& args) {
    args.apply_config();
    AlgebraPresentation alg = args.resolve();
    auto [lo2, hi2] = parse_window(args.window);
    std::cout << "algebra " << alg.name() << ", window " << to_string(HalfInt::from_doubled(lo2)) << ".."
              << to_string(HalfInt::from_doubled(hi2)) << "\n";
    for (const std::string& note : alg.notes())
        std::cout << "note: " << note << "\n";

    AlgebraCheckReport anti = check_antisymmetry(alg, lo2, hi2);
    std::cout << "antisymmetry: " << (anti.passed() ? "pass" : "FAIL") << " (" << anti.cases << " pairs)\n";
    print_violations(anti.violations);
    AlgebraCheckReport jac = check_super_jacobi(alg, lo2, hi2);
    std::cout << "graded Jacobi: " << (jac.passed() ? "pass" : "FAIL") << " (" << jac.cases << " triples)\n";
    print_violations(jac.violations);
    return anti.passed() && jac.passed() ? 0 : 1;
}

int run_module_check(ModuleArgs& args) {
    args.apply_config();
    WeightModuleSpec spec = args.resolve();
    auto [lo2, hi2] = parse_window(args.host.window);
    std::cout << "module " << spec.name() << " over " << spec.algebra().name() << ", window "
              << to_string(HalfInt::from_doubled(lo2)) << ".." << to_string(HalfInt::from_doubled(hi2)) << "\n";

    if (needs_pin(spec.name())) {
        auto [pinned, pin] = pin_sign_convention(spec, lo2, hi2);
        for (const std::string& note : pin.notes)
            std::cout << "note: " << note << "\n";
        if (!pin.any_pass()) {
            std::cout << "sign pinning: FAIL (no convention reconciles the tables)\n";
            return 1;
        }
        std::cout << "sign pinning: pinned '" << pin.pinned << "' of {";
        for (std::size_t i = 0; i < pin.passing.size(); ++i)
            std::cout << (i ? ", " : "") << pin.passing[i];
        std::cout << "}\n";
        spec = pinned;
    }
    for (const std::string& note : spec.notes())
        std::cout << "note: " << note << "\n";

    ModuleCheckReport rep = axiom_check(spec, lo2, hi2);
    std::cout << "module axioms: " << (rep.passed() ? "pass" : "FAIL") << " (" << rep.cases << " identities)\n";
    print_violations(rep.violations);
    return rep.passed() ? 0 : 1;
}

int run_omega_scan(ModuleArgs& args, const std::string& kind_text, long max_m) {
    args.apply_config();
    if (max_m < 0)
        throw UsageError("--max-m must be nonnegative");
    OmegaKind kind;
    if (kind_text == "LL")
        kind = OmegaKind::LL;
    else if (kind_text == "GL")
        kind = OmegaKind::GL;
    else if (kind_text == "GG")
        kind = OmegaKind::GG;
    else
        throw UsageError("--kind must be LL, GL, or GG");

    WeightModuleSpec spec = args.resolve();
    if (needs_pin(spec.name())) {
        auto [lo2, hi2] = parse_window(args.host.window);
        auto [pinned, pin] = pin_sign_convention(spec, lo2, hi2);
        if (!pin.any_pass())
            throw UsageError("module '" + spec.name() + "' fails its axioms under every sign convention");
        spec = pinned;
    }
    std::cout << "module " << spec.name() << " over " << spec.algebra().name() << ", operators " << kind_text
              << "\n";
    std::optional<long> found;
    for (long m = 0; m <= max_m; ++m) {
        OmegaScanResult res = omega_scan(spec, kind, m);
        if (res.annihilates) {
            std::cout << "m=" << m << ": annihilates (" << res.grid_cases << " grid cases)\n";
            if (!found)
                found = m;
        } else {
            std::cout << "m=" << m << ":";
            if (res.residuals.empty()) {
                std::cout << " grid failures: " << res.grid_failures.size() << "\n";
            } else {
                for (std::size_t i = 0; i < res.residuals.size(); ++i)
                    std::cout << (i ? ";" : "") << " residual[" << res.residuals[i].first
                              << "] = " << res.residuals[i].second;
                std::cout << "\n";
            }
        }
    }
    if (found)
        std::cout << "smallest annihilating order: " << *found << "\n";
    else
        std::cout << "no annihilating order <= " << max_m << "\n";
    return found ? 0 : 1;
}

int run_pbw_eq(AlgebraArgs& args, const std::string& lhs_text, const std::string& rhs_text) {
    args.apply_config();
    AlgebraPresentation alg = args.resolve("orw");
    auto parse_side = [&](const std::string& text, const char* side) {
        try {
            return parse_element(alg, text);
        } catch (const ParseError& e) {
            throw UsageError(std::string(side) + ": " + e.what() + " in '" + text + "'");
        }
    };
    EnvElement lhs = parse_side(lhs_text, "--lhs");
    EnvElement rhs = parse_side(rhs_text, "--rhs");
    std::cout << "lhs normal form: " << env_str(alg, normal_form(alg, lhs)) << "\n";
    std::cout << "rhs normal form: " << env_str(alg, normal_form(alg, rhs)) << "\n";
    bool equal = element_equal(alg, lhs, rhs);
    std::cout << (equal ? "equal" : "different") << "\n";
    return equal ? 0 : 1;
}

std::string mono_str(const ExtMonomial& m) {
    if (m.empty())
        return "1";
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i)
        out += (i ? "^" : "") + ("G[" + to_string(m[i]) + "]");
    return out;
}

int run_lemma33(long m, long k, const std::string& s_text, int left_margin2, int right_margin2,
                bool with_certificates, const std::string& out_path) {
    std::optional<HalfInt> s = halfint_from_string(s_text);
    if (!s)
        throw UsageError("--s must be an integer or half-integer, got '" + s_text + "'");
    Lemma33Report rep;
    try {
        rep = verify_lemma33(m, k, *s, left_margin2, right_margin2);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }

    ordered_json j;
    j["schema"] = "orw-lemma33/1";
    j["m"] = rep.m;
    j["k"] = rep.k;
    j["s"] = to_string(rep.s);
    j["window"] = {rep.window.lo2, rep.window.hi2};
    j["checked"] = rep.checked;
    CheckStatus status = rep.passed() ? CheckStatus::pass
                         : rep.margin_limited ? CheckStatus::skipped_margin_limited
                                              : CheckStatus::fail;
    j["status"] = to_string(status);
    j["failures"] = rep.failures;

    if (with_certificates) {
        IdealBasis ideal = ideal_build(rep.window, rep.m, static_cast<int>(rep.m) + 2);
        ordered_json certs = ordered_json::array();
        std::vector<HalfInt> run;
        for (long i = 0; i <= rep.m + rep.k; ++i)
            run.push_back(*s + HalfInt::from_doubled(2 * i));
        std::vector<HalfInt> chosen;
        auto emit = [&](const ExtMonomial& mono) {
            ExtElement x;
            x.add(mono, make_rational(1));
            MemberResult res = member(x, ideal);
            ordered_json entry;
            entry["target"] = mono_str(mono);
            entry["member"] = res.member;
            if (res.member) {
                ordered_json terms = ordered_json::array();
                for (const CertificateTerm& t : res.certificate)
                    terms.push_back({{"coeff", to_string(t.coeff)},
                                     {"left", mono_str(t.left)},
                                     {"r", to_string(t.r)},
                                     {"s", to_string(t.s)},
                                     {"m", t.m},
                                     {"right", mono_str(t.right)}});
                entry["terms"] = std::move(terms);
            } else {
                entry["remainder"] = ext_str(res.remainder);
            }
            certs.push_back(std::move(entry));
        };
        auto rec = [&](auto&& self, std::size_t from, long need) -> void {
            if (need == 0) {
                emit(chosen);
                return;
            }
            for (std::size_t i = from; i < run.size() && run.size() - i >= static_cast<std::size_t>(need); ++i) {
                chosen.push_back(run[i]);
                self(self, i + 1, need - 1);
                chosen.pop_back();
            }
        };
        rec(rec, 0, rep.m + 2);
        j["certificates"] = std::move(certs);
    }

    write_output(out_path, j.dump(2) + "\n");
    return status == CheckStatus::pass ? 0 : 1;
}

SuiteConfig suite_config_from_json(const ordered_json& j, std::string& out_path) {
    SuiteConfig cfg = default_config();
    auto window = [&](const char* key, int& lo2, int& hi2) {
        if (!j.contains(key))
            return;
        const ordered_json& w = j[key];
        if (!w.is_array() || w.size() != 2 || !w[0].is_number_integer() || !w[1].is_number_integer())
            throw UsageError(std::string(key) + " must be [lo2, hi2] with doubled integer indices");
        lo2 = w[0].get<int>();
        hi2 = w[1].get<int>();
    };
    window("algebra_window", cfg.algebra_lo2, cfg.algebra_hi2);
    window("module_window", cfg.module_lo2, cfg.module_hi2);
    window("scan_window", cfg.scan_lo2, cfg.scan_hi2);
    if (j.contains("max_m"))
        cfg.max_m = j["max_m"].get<long>();
    if (j.contains("identity_span2"))
        cfg.identity_span2 = j["identity_span2"].get<int>();
    if (j.contains("identity_max_m"))
        cfg.identity_max_m = j["identity_max_m"].get<long>();
    if (j.contains("scan_margin2"))
        cfg.scan_margin2 = j["scan_margin2"].get<int>();
    auto sweep = [&](const char* key, std::vector<Rational>& slot) {
        if (!j.contains(key))
            return;
        slot.clear();
        for (const ordered_json& v : j[key])
            slot.push_back(parse_rat(json_str(v, key), key));
    };
    sweep("lambda_sweep", cfg.lambda_sweep);
    sweep("epsilon_sweep", cfg.epsilon_sweep);
    if (j.contains("out"))
        out_path = json_str(j["out"], "out");
    return cfg;
}

int run_suite_cmd(const std::string& name, std::string out_path, const std::string& config_path) {
    if (!is_suite(name)) {
        std::string names;
        for (const std::string& n : suite_names())
            names += (names.empty() ? "" : ", ") + n;
        throw UsageError("unknown suite '" + name + "'; expected one of: " + names);
    }
    SuiteConfig cfg = default_config();
    if (!config_path.empty())
        cfg = suite_config_from_json(load_json(config_path), out_path);
    std::vector<CheckResult> results;
    try {
        results = run_suite(name, cfg);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    write_output(out_path, report_json(results));

    long pass = 0;
    double total_ms = 0;
    for (const CheckResult& r : results) {
        total_ms += r.wall_ms;
        if (r.status == CheckStatus::pass)
            ++pass;
        else
            std::cerr << "[" << to_string(r.status) << "] " << r.suite << "/" << r.check << ": " << r.payload
                      << "\n";
    }
    std::cerr << "suite " << name << ": " << pass << "/" << results.size() << " checks passed in "
              << static_cast<long>(total_ms) << " ms\n";
    return all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verifier for graded bracket tables, weight modules, and alternating-sum annihilators"};
    app.require_subcommand(1);

    CLI::App* algebra = app.add_subcommand("algebra", "bracket-table identities");
    AlgebraArgs alg_args;
    CLI::App* algebra_check = algebra->add_subcommand("check", "antisymmetry and graded Jacobi on a window");
    alg_args.add_flags(algebra_check);
    algebra->require_subcommand(1);

    CLI::App* module = app.add_subcommand("module", "weight-module action tables");
    ModuleArgs mod_args;
    CLI::App* module_check = module->add_subcommand("check", "symbolic module axioms, pinning signs if needed");
    mod_args.add_flags(module_check);
    module->require_subcommand(1);

    CLI::App* omega = app.add_subcommand("omega", "alternating binomial annihilation operators");
    ModuleArgs omega_args;
    std::string omega_kind = "LL";
    long omega_max_m = 6;
    CLI::App* omega_scan_cmd = omega->add_subcommand("scan", "smallest annihilating order on a module");
    omega_scan_cmd->add_option("--kind", omega_kind, "operator letters: LL, GL, or GG");
    omega_scan_cmd->add_option("--max-m", omega_max_m, "largest order to try");
    omega_args.add_flags(omega_scan_cmd);
    omega->require_subcommand(1);

    CLI::App* pbw = app.add_subcommand("pbw", "normal forms in the enveloping algebra");
    AlgebraArgs pbw_args;
    std::string lhs_text, rhs_text;
    CLI::App* pbw_eq = pbw->add_subcommand("eq", "straighten two elements and compare");
    pbw_eq->add_option("--lhs", lhs_text, "element text, e.g. '1 * G[3/2] L[2]'")->required();
    pbw_eq->add_option("--rhs", rhs_text, "element text")->required();
    pbw_args.add_flags(pbw_eq);
    pbw->require_subcommand(1);

    CLI::App* grassmann = app.add_subcommand("grassmann", "exterior-algebra reduction certificates");
    long g_m = 1, g_k = 1;
    std::string g_s = "1/2", g_out;
    int g_left = -1, g_right = -1;
    bool g_certs = false;
    CLI::App* lemma33 = grassmann->add_subcommand("lemma33", "top-degree monomial reduction on a window");
    lemma33->add_option("--m", g_m, "relation order (0..2)");
    lemma33->add_option("--k", g_k, "run length beyond the order (1..4)");
    lemma33->add_option("--s", g_s, "first index of the run");
    lemma33->add_option("--left-margin2", g_left, "doubled margin left of the run (-1 = default)");
    lemma33->add_option("--right-margin2", g_right, "doubled margin right of the run (-1 = default)");
    lemma33->add_flag("--certificates", g_certs, "emit a membership certificate per monomial");
    lemma33->add_option("--out", g_out, "write the JSON report here instead of stdout");
    grassmann->require_subcommand(1);

    CLI::App* suite = app.add_subcommand("suite", "named verification batteries");
    std::string suite_name, suite_out, suite_config;
    suite->add_option("name", suite_name, "battery name or 'all'")->required();
    suite->add_option("--out", suite_out, "write the JSON report here instead of stdout");
    suite->add_option("--config", suite_config, "JSON file overriding the default configuration");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (algebra_check->parsed())
            return run_algebra_check(alg_args);
        if (module_check->parsed())
            return run_module_check(mod_args);
        if (omega_scan_cmd->parsed())
            return run_omega_scan(omega_args, omega_kind, omega_max_m);
        if (pbw_eq->parsed())
            return run_pbw_eq(pbw_args, lhs_text, rhs_text);
        if (lemma33->parsed())
            return run_lemma33(g_m, g_k, g_s, g_left, g_right, g_certs, g_out);
        if (suite->parsed())
            return run_suite_cmd(suite_name, suite_out, suite_config);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
