#include "orw/weightmod.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace orw {

namespace {

Rational rat_of(HalfInt h) { return make_rational(h.doubled(), 2); }

PolyScalar jvar() { return PolyScalar::variable("j"); }
PolyScalar nvar() { return PolyScalar::variable("n"); }

std::string offset_str(HalfInt off) {
    if (off.doubled() == 0)
        return "j";
    if (off.doubled() > 0)
        return "j+" + to_string(off);
    return "j-" + to_string(-off);
}

}  // namespace

int WeightModuleSpec::sector_index(const std::string& name) const {
    for (std::size_t i = 0; i < sectors_.size(); ++i)
        if (sectors_[i].name == name)
            return static_cast<int>(i);
    return -1;
}

bool WeightModuleSpec::has_rule(int family, int sector) const {
    return rules_.count({family, sector}) != 0;
}

const ActionRule& WeightModuleSpec::rule(int family, int sector) const {
    auto it = rules_.find({family, sector});
    if (it == rules_.end())
        throw std::logic_error("module '" + name_ + "': no action rule for family " +
                               algebra_.family(family).symbol + " on sector " +
                               sectors_.at(static_cast<std::size_t>(sector)).name);
    return it->second;
}

WeightModuleSpec WeightModuleSpec::specialize(const std::map<std::string, Rational>& values) const {
    WeightModuleSpec out = *this;
    std::map<std::string, PolyScalar> bindings;
    for (const auto& [name, value] : values) {
        bindings.emplace(name, PolyScalar(value));
        out.params_.erase(name);
    }
    for (auto& [key, r] : out.rules_)
        if (!r.zero())
            r.coeff = r.coeff.substitute_partial(bindings);
    return out;
}

WeightModuleSpec WeightModuleSpec::with_negated_rules(bool even_families, bool odd_on_y) const {
    WeightModuleSpec out = *this;
    for (auto& [key, r] : out.rules_) {
        if (r.zero())
            continue;
        const FamilySpec& fam = algebra_.family(key.first);
        bool negate = false;
        if (even_families && fam.parity == Parity::even && !fam.central)
            negate = true;
        if (odd_on_y && fam.parity == Parity::odd &&
            sectors_.at(static_cast<std::size_t>(key.second)).name == "y")
            negate = !negate;
        if (negate)
            r.coeff = -r.coeff;
    }
    if (even_families)
        out.notes_.push_back("negated every even-family action coefficient");
    if (odd_on_y)
        out.notes_.push_back("negated the odd-family action on sector y");
    return out;
}

WeightModuleSpec WeightModuleSpec::with_algebra(AlgebraPresentation twisted) const {
    if (twisted.families().size() != algebra_.families().size())
        throw std::invalid_argument("with_algebra: family structure mismatch");
    for (std::size_t i = 0; i < twisted.families().size(); ++i)
        if (twisted.families()[i].symbol != algebra_.families()[i].symbol)
            throw std::invalid_argument("with_algebra: family structure mismatch");
    WeightModuleSpec out = *this;
    out.notes_.push_back("bracket table replaced by " + twisted.name());
    out.algebra_ = std::move(twisted);
    return out;
}

namespace {

// Resolves one parameter: caller-supplied value or a fresh symbol; every
// variable of the value joins the spec's symbolic-parameter set.
PolyScalar bind_param(const std::map<std::string, PolyScalar>& given, const std::string& key,
                      std::set<std::string>& params_out) {
    PolyScalar v = given.count(key) ? given.at(key) : PolyScalar::variable(key);
    for (const auto& var : v.variables())
        params_out.insert(var);
    return v;
}

}  // namespace

WeightModuleSpec module_build(const std::string& name, const AlgebraPresentation& algebra,
                              const std::map<std::string, PolyScalar>& params) {
    WeightModuleSpec spec;
    spec.name_ = name;
    spec.algebra_ = algebra;

    auto add_sector = [&](const std::string& s, Parity p, IndexLattice lat) {
        spec.sectors_.push_back({s, p, lat});
    };
    auto set_rule = [&](const std::string& fam, const std::string& from, PolyScalar coeff,
                        const std::string& to) {
        int f = algebra.family_index(fam);
        int src = spec.sector_index(from), dst = spec.sector_index(to);
        if (f < 0 || src < 0 || dst < 0)
            throw std::logic_error("module_build: bad rule wiring");
        Parity expect = (algebra.family(f).parity == Parity::odd)
                            ? (spec.sectors_[static_cast<std::size_t>(src)].parity == Parity::even
                                   ? Parity::odd
                                   : Parity::even)
                            : spec.sectors_[static_cast<std::size_t>(src)].parity;
        if (spec.sectors_[static_cast<std::size_t>(dst)].parity != expect)
            throw std::logic_error("module_build: rule breaks sector parity bookkeeping");
        int shift = (spec.sectors_[static_cast<std::size_t>(src)].lattice.twice_offset +
                     algebra.family(f).lattice.twice_offset) % 2;
        if (!algebra.family(f).central &&
            spec.sectors_[static_cast<std::size_t>(dst)].lattice.twice_offset != shift)
            throw std::logic_error("module_build: rule breaks sector lattice bookkeeping");
        spec.rules_[{f, src}] = ActionRule{std::move(coeff), dst};
    };
    auto zero_rule = [&](const std::string& fam, const std::string& from) {
        int f = algebra.family_index(fam);
        int src = spec.sector_index(from);
        if (f < 0 || src < 0)
            throw std::logic_error("module_build: bad rule wiring");
        spec.rules_[{f, src}] = ActionRule{};
    };
    auto zero_rest = [&]() {
        // any family without an explicit rule on a sector acts as zero
        for (int f = 0; f < static_cast<int>(algebra.families().size()); ++f)
            for (int s = 0; s < static_cast<int>(spec.sectors_.size()); ++s)
                if (!spec.rules_.count({f, s}))
                    spec.rules_[{f, s}] = ActionRule{};
    };

    IndexLattice whole{0};
    PolyScalar j = jvar(), n = nvar();

    if (name == "Aab") {
        if (algebra.id() != CatalogId::vir && algebra.id() != CatalogId::witt)
            throw std::invalid_argument("Aab lives over the vir/witt catalog entries");
        PolyScalar a = bind_param(params, "a", spec.params_);
        PolyScalar b = bind_param(params, "b", spec.params_);
        add_sector("v", Parity::even, whole);
        set_rule("L", "v", a + j + b * n, "v");
        zero_rest();
    } else if (name == "Flambda") {
        if (algebra.id() != CatalogId::witt && algebra.id() != CatalogId::vir)
            throw std::invalid_argument("Flambda lives over the witt/vir catalog entries");
        PolyScalar lam = bind_param(params, "lambda", spec.params_);
        add_sector("v", Parity::even, whole);
        set_rule("L", "v", j + lam * n, "v");
        zero_rest();
    } else if (name == "Aabc") {
        if (algebra.id() != CatalogId::q)
            throw std::invalid_argument("Aabc lives over the q catalog entry");
        PolyScalar a = bind_param(params, "a", spec.params_);
        PolyScalar b = bind_param(params, "b", spec.params_);
        PolyScalar c = bind_param(params, "c", spec.params_);
        add_sector("v", Parity::even, whole);
        set_rule("L", "v", a + j + b * n, "v");
        set_rule("H", "v", c, "v");
        zero_rest();
    } else if (name == "Sab" || name == "PiSab") {
        if (algebra.id() != CatalogId::ns && algebra.id() != CatalogId::sw22)
            throw std::invalid_argument(name + " lives over the ns/sw22 catalog entries");
        PolyScalar a = bind_param(params, "a", spec.params_);
        PolyScalar b = bind_param(params, "b", spec.params_);
        bool pi = (name == "PiSab");
        spec.parity_shift_ = pi;
        IndexLattice odd_lat = algebra.family(algebra.family_index("G")).lattice;
        add_sector("x", pi ? Parity::odd : Parity::even, whole);
        add_sector("y", pi ? Parity::even : Parity::odd, odd_lat);
        set_rule("L", "x", a + b * n + j, "x");
        set_rule("L", "y", a + (b + PolyScalar(make_rational(1, 2))) * n + j, "y");
        set_rule("G", "x", a + j + PolyScalar(2) * b * n, "y");
        set_rule("G", "y", PolyScalar(-1), "x");
        if (algebra.id() == CatalogId::sw22)
            spec.notes_.push_back("the extra families I, Q act as zero");
        zero_rest();
    } else if (name == "Aab_trivial_ext") {
        if (algebra.id() != CatalogId::orw && algebra.id() != CatalogId::bms3)
            throw std::invalid_argument("Aab_trivial_ext lives over the orw/bms3 catalog entries");
        PolyScalar a = bind_param(params, "a", spec.params_);
        PolyScalar b = bind_param(params, "b", spec.params_);
        add_sector("v", Parity::even, whole);
        PolyScalar coeff = a + j + b * n;
        if (algebra.id() == CatalogId::bms3) {
            // the host bracket uses the (m-n) orientation, so the even action
            // needs the opposite sign to satisfy the same commutators
            coeff = -coeff;
            spec.notes_.push_back("even coefficient negated to match the (m-n) bracket orientation");
        }
        set_rule("L", "v", coeff, "v");
        zero_rest();
    } else if (name == "HalfS") {
        bool ok = algebra.id() == CatalogId::orw && algebra.params().count("lambda") &&
                  algebra.params().at("lambda") == make_rational(-1, 2);
        if (!ok)
            throw std::invalid_argument("HalfS lives over the lambda = -1/2 orw catalog entries");
        PolyScalar a = bind_param(params, "a", spec.params_);
        PolyScalar b = bind_param(params, "b", spec.params_);
        IndexLattice odd_lat = algebra.family(algebra.family_index("G")).lattice;
        add_sector("x", Parity::even, whole);
        add_sector("y", Parity::odd, odd_lat);
        set_rule("L", "x", a + b * n + j, "x");
        set_rule("L", "y", a + (b + PolyScalar(make_rational(1, 2))) * n + j, "y");
        set_rule("G", "x", a + j + PolyScalar(2) * b * n, "y");
        zero_rule("G", "y");
        spec.notes_.push_back("constructed length-2 module: odd action on y is zero by fiat");
        zero_rest();
        auto gate = axiom_check(spec, -4, 4);
        if (!gate.passed())
            throw std::logic_error("HalfS failed its build-time axiom check: " + gate.violations.front());
    } else {
        throw std::invalid_argument("unknown module '" + name + "'");
    }
    return spec;
}

void SymbolicVector::add(int sector, HalfInt offset, const PolyScalar& coeff) {
    if (coeff.is_zero())
        return;
    auto key = std::make_pair(sector, offset);
    auto [it, inserted] = entries_.emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            entries_.erase(it);
    }
}

SymbolicVector symbolic_act(const WeightModuleSpec& spec, const EnvElement& e, int sector) {
    if (!e.algebra().empty() && e.algebra() != spec.algebra().name())
        throw std::invalid_argument("symbolic_act: element over '" + e.algebra() + "', module over '" +
                                    spec.algebra().name() + "'");
    if (sector < 0 || sector >= static_cast<int>(spec.sectors().size()))
        throw std::invalid_argument("symbolic_act: no such sector");
    SymbolicVector out;
    PolyScalar j = jvar();
    for (const auto& [word, coeff] : e.terms()) {
        int sec = sector;
        HalfInt off;
        PolyScalar c(1);
        bool alive = true;
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            const ActionRule& r = spec.rule(it->family, sec);
            if (r.zero()) {
                alive = false;
                break;
            }
            c *= r.coeff.substitute_partial(
                {{"n", PolyScalar(rat_of(it->index))}, {"j", j + PolyScalar(rat_of(off))}});
            if (c.is_zero()) {
                alive = false;
                break;
            }
            off = off + it->index;
            sec = r.target;
        }
        if (alive)
            out.add(sec, off, c * coeff);
    }
    return out;
}

std::string symbolic_vector_str(const WeightModuleSpec& spec, const SymbolicVector& v) {
    if (v.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, coeff] : v.entries()) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << coeff.str() << ") * "
           << spec.sectors().at(static_cast<std::size_t>(key.first)).name << "[" << offset_str(key.second)
           << "]";
    }
    return os.str();
}

namespace {

SymbolicVector sym_sub(const SymbolicVector& a, const SymbolicVector& b) {
    SymbolicVector out = a;
    for (const auto& [key, coeff] : b.entries())
        out.add(key.first, key.second, -coeff);
    return out;
}

}  // namespace

ModuleCheckReport axiom_check(const WeightModuleSpec& spec, int lo2, int hi2) {
    ModuleCheckReport rep;
    const AlgebraPresentation& alg = spec.algebra();
    auto gens = generators_in_window(alg, lo2, hi2);
    for (GeneratorRef x : gens) {
        for (GeneratorRef y : gens) {
            EnvElement lhs = env_make(alg, Word{x, y});
            lhs = env_add(lhs, env_make(alg, Word{y, x}, PolyScalar(make_rational(-alg.koszul_sign(x, y)))));
            EnvElement rhs(alg.name());
            for (const auto& t : alg.bracket(x, y).terms)
                rhs = env_add(rhs, env_make(alg, Word{t.target}, PolyScalar(t.coeff)));
            for (int sec = 0; sec < static_cast<int>(spec.sectors().size()); ++sec) {
                ++rep.cases;
                SymbolicVector residual = sym_sub(symbolic_act(spec, lhs, sec), symbolic_act(spec, rhs, sec));
                if (!residual.is_zero()) {
                    rep.violations.push_back(
                        "axiom(" + alg.gen_str(x) + ", " + alg.gen_str(y) + "; sector " +
                        spec.sectors().at(static_cast<std::size_t>(sec)).name +
                        "): residual " + symbolic_vector_str(spec, residual));
                }
            }
        }
    }
    return rep;
}

namespace {

struct PinAxis {
    std::string name;
    bool module_side;
};

WeightModuleSpec apply_twists(const WeightModuleSpec& spec, bool gy, bool gg, bool lg, bool even) {
    WeightModuleSpec out = spec;
    if (even || gy)
        out = out.with_negated_rules(even, gy);
    if (gg || lg)
        out = out.with_algebra(spec.algebra().with_sign_twists(gg, lg));
    return out;
}

}  // namespace

std::pair<WeightModuleSpec, PinReport> pin_sign_convention(const WeightModuleSpec& spec, int lo2, int hi2) {
    const AlgebraPresentation& alg = spec.algebra();
    bool has_odd_family = false;
    for (const auto& f : alg.families())
        if (f.parity == Parity::odd)
            has_odd_family = true;
    bool has_gy_rule = false, has_even_rule = false;
    for (int f = 0; f < static_cast<int>(alg.families().size()); ++f) {
        for (int s = 0; s < static_cast<int>(spec.sectors().size()); ++s) {
            if (!spec.has_rule(f, s) || spec.rule(f, s).zero())
                continue;
            if (alg.family(f).parity == Parity::odd &&
                spec.sectors().at(static_cast<std::size_t>(s)).name == "y")
                has_gy_rule = true;
            if (alg.family(f).parity == Parity::even && !alg.family(f).central)
                has_even_rule = true;
        }
    }

    // axes that cannot change any axiom outcome are dropped up front
    std::vector<std::pair<std::string, int>> axes;  // (name, bit)
    if (has_gy_rule)
        axes.push_back({"flip-gy", 0});
    if (has_odd_family)
        axes.push_back({"flip-gg", 1});
    if (has_odd_family)
        axes.push_back({"flip-lg", 2});
    if (has_even_rule)
        axes.push_back({"flip-even", 3});

    struct Candidate {
        std::string name;
        bool gy = false, gg = false, lg = false, even = false;
        int flips = 0;
        bool algebra_side = false;
    };
    std::vector<Candidate> passing;
    PinReport report;

    std::vector<std::string> first_residuals;
    for (unsigned mask = 0; mask < (1u << axes.size()); ++mask) {
        Candidate c;
        std::vector<std::string> parts;
        for (std::size_t i = 0; i < axes.size(); ++i) {
            if (!(mask & (1u << i)))
                continue;
            parts.push_back(axes[i].first);
            ++c.flips;
            switch (axes[i].second) {
                case 0: c.gy = true; break;
                case 1: c.gg = true, c.algebra_side = true; break;
                case 2: c.lg = true, c.algebra_side = true; break;
                case 3: c.even = true; break;
            }
        }
        c.name = parts.empty() ? "identity" : [&] {
            std::string s = parts.front();
            for (std::size_t i = 1; i < parts.size(); ++i)
                s += "+" + parts[i];
            return s;
        }();
        auto rep = axiom_check(apply_twists(spec, c.gy, c.gg, c.lg, c.even), lo2, hi2);
        if (rep.passed()) {
            passing.push_back(c);
        } else if (mask == 0) {
            for (std::size_t i = 0; i < rep.violations.size() && i < 3; ++i)
                first_residuals.push_back(rep.violations[i]);
        }
    }

    for (const auto& c : passing)
        report.passing.push_back(c.name);
    if (passing.empty()) {
        report.pinned.clear();
        report.notes.push_back("inconsistent as printed: no sign twist passes");
        for (auto& r : first_residuals)
            report.notes.push_back(r);
        return {spec, report};
    }
    // prefer module-side-only twists, then fewer flips, then name
    auto best = std::min_element(passing.begin(), passing.end(), [](const Candidate& a, const Candidate& b) {
        if (a.algebra_side != b.algebra_side)
            return !a.algebra_side;
        if (a.flips != b.flips)
            return a.flips < b.flips;
        return a.name < b.name;
    });
    report.pinned = best->name;
    report.unique = passing.size() == 1;
    if (!report.unique)
        report.notes.push_back("multiple sign conventions reconcile the tables; pinned the preferred one");
    if (best->even)
        report.notes.push_back(
            "the even-action sign had to flip: the printed even bracket orientation is opposite to the "
            "module table's, which no odd-sector twist can absorb");

    WeightModuleSpec pinned = apply_twists(spec, best->gy, best->gg, best->lg, best->even);
    return {std::move(pinned), report};
}

PolyScalar omega_coefficient_poly(const WeightModuleSpec& spec, OmegaKind kind, int sector) {
    const AlgebraPresentation& alg = spec.algebra();
    const char* fx = (kind == OmegaKind::LL) ? "L" : "G";
    const char* fy = (kind == OmegaKind::GG) ? "G" : "L";
    int famx = alg.family_index(fx), famy = alg.family_index(fy);
    if (famx < 0 || famy < 0)
        throw std::invalid_argument("omega_coefficient_poly: presentation lacks required families");
    PolyScalar i = PolyScalar::variable("i"), j = jvar(), k = PolyScalar::variable("k"),
               s = PolyScalar::variable("s");
    const ActionRule& ry = spec.rule(famy, sector);
    if (ry.zero())
        return {};
    PolyScalar cy = ry.coeff.substitute_partial({{"n", s + i}});
    const ActionRule& rx = spec.rule(famx, ry.target);
    if (rx.zero())
        return {};
    PolyScalar cx = rx.coeff.substitute_partial({{"n", k - i}, {"j", j + s + i}});
    return cy * cx;
}

OmegaScanResult omega_scan(const WeightModuleSpec& spec, OmegaKind kind, long m, int grid_lo2, int grid_hi2) {
    OmegaScanResult res;
    const AlgebraPresentation& alg = spec.algebra();
    const char* fx = (kind == OmegaKind::LL) ? "L" : "G";
    const char* fy = (kind == OmegaKind::GG) ? "G" : "L";
    int famx = alg.family_index(fx), famy = alg.family_index(fy);
    if (famx < 0 || famy < 0)
        throw std::invalid_argument("omega_scan: presentation lacks required families");
    int px = ((alg.family(famx).lattice.twice_offset % 2) + 2) % 2;
    int py = ((alg.family(famy).lattice.twice_offset % 2) + 2) % 2;

    for (int k2 = grid_lo2; k2 <= grid_hi2; ++k2) {
        if ((((k2 % 2) + 2) % 2) != px)
            continue;
        for (int s2 = grid_lo2; s2 <= grid_hi2; ++s2) {
            if ((((s2 % 2) + 2) % 2) != py)
                continue;
            EnvElement om = build_omega(alg, kind, HalfInt::from_doubled(k2), HalfInt::from_doubled(s2), m);
            for (int sec = 0; sec < static_cast<int>(spec.sectors().size()); ++sec) {
                ++res.grid_cases;
                SymbolicVector image = symbolic_act(spec, om, sec);
                if (!image.is_zero()) {
                    res.grid_failures.push_back(
                        "omega(m=" + std::to_string(m) + ", first=" + to_string(HalfInt::from_doubled(k2)) +
                        ", s=" + to_string(HalfInt::from_doubled(s2)) + ") on sector " +
                        spec.sectors().at(static_cast<std::size_t>(sec)).name + ": " +
                        symbolic_vector_str(spec, image));
                }
            }
        }
    }

    // full-symbolic confirmation: k and s as polynomial variables
    bool symbolic_zero = true;
    for (int sec = 0; sec < static_cast<int>(spec.sectors().size()); ++sec) {
        PolyScalar c = omega_coefficient_poly(spec, kind, sec);
        PolyScalar total;
        for (long i = 0; i <= m; ++i) {
            Rational w = make_rational(binomial(m, i), Integer(1));
            if (i % 2 != 0)
                w = -w;
            total += c.substitute_partial({{"i", PolyScalar(make_rational(i))}}) * w;
        }
        if (!total.is_zero()) {
            symbolic_zero = false;
            res.residuals.emplace_back(spec.sectors().at(static_cast<std::size_t>(sec)).name, total.str());
        }
    }
    res.annihilates = res.grid_failures.empty() && symbolic_zero;
    return res;
}

std::optional<long> omega_min_m(const WeightModuleSpec& spec, OmegaKind kind, long max_m) {
    for (long m = 0; m <= max_m; ++m)
        if (omega_scan(spec, kind, m).annihilates)
            return m;
    return std::nullopt;
}

bool g_trivial(const WeightModuleSpec& spec) {
    const AlgebraPresentation& alg = spec.algebra();
    for (int f = 0; f < static_cast<int>(alg.families().size()); ++f) {
        if (alg.family(f).parity != Parity::odd)
            continue;
        for (int s = 0; s < static_cast<int>(spec.sectors().size()); ++s) {
            if (!spec.has_rule(f, s))
                continue;
            const ActionRule& r = spec.rule(f, s);
            if (!r.zero() && !r.coeff.is_zero())
                return false;
        }
    }
    return true;
}

WindowModule::WindowModule(WeightModuleSpec spec, int lo2, int hi2)
    : spec_(std::move(spec)), lo2_(lo2), hi2_(hi2) {
    if (!spec_.params().empty())
        throw std::invalid_argument("WindowModule: parameters must all be specialized");
    if (lo2 > hi2)
        throw std::invalid_argument("WindowModule: empty window");
    for (int sec = 0; sec < static_cast<int>(spec_.sectors().size()); ++sec) {
        const SectorSpec& s = spec_.sectors()[static_cast<std::size_t>(sec)];
        int parity = ((s.lattice.twice_offset % 2) + 2) % 2;
        for (int d = lo2; d <= hi2; ++d) {
            if ((((d % 2) + 2) % 2) != parity)
                continue;
            lookup_.emplace(std::make_pair(sec, HalfInt::from_doubled(d)), basis_.size());
            basis_.emplace_back(sec, HalfInt::from_doubled(d));
        }
    }
}

std::optional<std::size_t> WindowModule::basis_index(int sector, HalfInt index) const {
    auto it = lookup_.find({sector, index});
    if (it == lookup_.end())
        return std::nullopt;
    return it->second;
}

std::string WindowModule::basis_str(std::size_t id) const {
    const auto& [sec, idx] = basis_.at(id);
    return spec_.sectors().at(static_cast<std::size_t>(sec)).name + "[" + to_string(idx) + "]";
}

std::optional<WindowModule::Image> WindowModule::act(GeneratorRef g, std::size_t id) const {
    const auto& [sec, idx] = basis_.at(id);
    const ActionRule& r = spec_.rule(g.family, sec);
    if (r.zero())
        return std::nullopt;
    PolyScalar value = r.coeff.substitute_partial(
        {{"n", PolyScalar(rat_of(g.index))}, {"j", PolyScalar(rat_of(idx))}});
    if (!value.is_constant())
        throw std::logic_error("WindowModule::act: coefficient did not specialize");
    Rational c = value.constant_value();
    if (c == 0)
        return std::nullopt;
    auto target = basis_index(r.target, idx + g.index);
    if (!target)
        return Image{true, 0, c};
    return Image{false, *target, c};
}

std::vector<SubmoduleWitness> submodule_scan(const WindowModule& wm, int margin2) {
    if (margin2 <= 0)
        throw std::invalid_argument("submodule_scan: margin must be positive");
    int ilo = wm.lo2() + margin2, ihi = wm.hi2() - margin2;
    if (ilo > ihi)
        throw std::invalid_argument("submodule_scan: window smaller than twice the margin");
    const AlgebraPresentation& alg = wm.spec().algebra();
    auto gens = generators_in_window(alg, -margin2, margin2);

    auto inner = [&](std::size_t id) {
        int d = static_cast<int>(wm.basis()[id].second.doubled());
        return ilo <= d && d <= ihi;
    };
    std::vector<std::size_t> inner_ids;
    for (std::size_t id = 0; id < wm.basis().size(); ++id)
        if (inner(id))
            inner_ids.push_back(id);

    std::vector<SubmoduleWitness> witnesses;
    std::set<std::vector<std::size_t>> seen;
    for (std::size_t start : inner_ids) {
        std::set<std::size_t> reach{start};
        std::vector<std::size_t> frontier{start};
        while (!frontier.empty()) {
            std::size_t v = frontier.back();
            frontier.pop_back();
            if (!inner(v))
                continue;  // images of rim vectors are not testable in-window
            for (GeneratorRef g : gens) {
                auto img = wm.act(g, v);
                if (!img || img->escapes)
                    continue;
                if (reach.insert(img->target).second)
                    frontier.push_back(img->target);
            }
        }
        std::vector<std::size_t> missing;
        for (std::size_t id : inner_ids)
            if (!reach.count(id))
                missing.push_back(id);
        if (missing.empty())
            continue;
        std::vector<std::size_t> support(reach.begin(), reach.end());
        if (!seen.insert(support).second)
            continue;

        auto list = [&](const std::vector<std::size_t>& ids) {
            std::string out = "{";
            for (std::size_t i = 0; i < ids.size(); ++i)
                out += (i ? ", " : "") + wm.basis_str(ids[i]);
            return out + "}";
        };
        std::string desc = "closure(" + wm.basis_str(start) + ") = ";
        if (support.size() <= 6)
            desc += "span" + list(support);
        else if (missing.size() <= 6)
            desc += "everything except " + list(missing);
        else
            desc += "a proper subspace reaching " + std::to_string(support.size()) + " of " +
                    std::to_string(wm.basis().size()) + " basis vectors";
        witnesses.push_back({std::move(support), std::move(desc)});
    }
    return witnesses;
}

}  // namespace orw
