#include "orw/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string_view>

namespace orw {

namespace {

Rational rational_of(HalfInt h) { return make_rational(h.doubled(), 2); }

void push_term(std::vector<BracketTerm>& terms, const Rational& c, int family, HalfInt index) {
    if (c != 0)
        terms.push_back({c, GeneratorRef{family, index}});
}

void sort_terms(std::vector<BracketTerm>& terms) {
    std::sort(terms.begin(), terms.end(),
              [](const BracketTerm& a, const BracketTerm& b) { return a.target < b.target; });
}

// (1/12)(n^3 - n) for integral n.
Rational vir_central(std::int64_t n) { return make_rational(n * n * n - n, 12); }

// (1/3)(r^2 - 1/4) for r in Z + 1/2 with doubled index d: (d^2 - 1)/12.
Rational ns_central(HalfInt r) {
    std::int64_t d = r.doubled();
    return make_rational(d * d - 1, 12);
}

}  // namespace

BracketResult combine(const BracketResult& a, const BracketResult& b, const Rational& b_scale) {
    BracketResult out;
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
        if (j == b.terms.size() || (i < a.terms.size() && a.terms[i].target < b.terms[j].target)) {
            out.terms.push_back(a.terms[i++]);
        } else if (i == a.terms.size() || b.terms[j].target < a.terms[i].target) {
            Rational c = b.terms[j].coeff * b_scale;
            if (c != 0)
                out.terms.push_back({c, b.terms[j].target});
            ++j;
        } else {
            Rational c = a.terms[i].coeff + b.terms[j].coeff * b_scale;
            if (c != 0)
                out.terms.push_back({c, a.terms[i].target});
            ++i;
            ++j;
        }
    }
    return out;
}

int AlgebraPresentation::family_index(const std::string& symbol) const {
    for (std::size_t i = 0; i < families_.size(); ++i)
        if (families_[i].symbol == symbol)
            return static_cast<int>(i);
    return -1;
}

bool AlgebraPresentation::valid(GeneratorRef g) const {
    if (g.family < 0 || g.family >= static_cast<int>(families_.size()))
        return false;
    const FamilySpec& f = family(g.family);
    if (f.central)
        return g.index == HalfInt();
    return f.lattice.contains(g.index);
}

int AlgebraPresentation::koszul_sign(GeneratorRef x, GeneratorRef y) const {
    return (parity(x) == Parity::odd && parity(y) == Parity::odd) ? -1 : 1;
}

bool AlgebraPresentation::letter_less(GeneratorRef a, GeneratorRef b) const {
    int ra = pbw_rank_[static_cast<std::size_t>(a.family)];
    int rb = pbw_rank_[static_cast<std::size_t>(b.family)];
    if (ra != rb)
        return ra < rb;
    return a.index < b.index;
}

std::string AlgebraPresentation::gen_str(GeneratorRef g) const {
    const FamilySpec& f = family(g.family);
    if (f.central)
        return f.symbol;
    return f.symbol + "[" + to_string(g.index) + "]";
}

std::optional<GeneratorRef> AlgebraPresentation::gen_from_string(const std::string& text) const {
    std::string sym = text;
    std::optional<HalfInt> idx;
    auto open = text.find('[');
    if (open != std::string::npos) {
        if (text.back() != ']')
            return std::nullopt;
        sym = text.substr(0, open);
        idx = halfint_from_string(text.substr(open + 1, text.size() - open - 2));
        if (!idx)
            return std::nullopt;
    }
    int fam = family_index(sym);
    if (fam < 0)
        return std::nullopt;
    GeneratorRef g{fam, idx.value_or(HalfInt())};
    if (!valid(g))
        return std::nullopt;
    return g;
}

AlgebraPresentation AlgebraPresentation::with_sign_twists(bool flip_odd_odd, bool flip_even_odd) const {
    AlgebraPresentation copy = *this;
    copy.flip_odd_odd_ = flip_odd_odd_ != flip_odd_odd;
    copy.flip_even_odd_ = flip_even_odd_ != flip_even_odd;
    std::string base = name_;
    for (std::string_view suffix : {"~eo", "~oo"})
        if (base.size() > 3 && base.substr(base.size() - 3) == suffix)
            base.resize(base.size() - 3);
    copy.name_ = base;
    if (copy.flip_odd_odd_)
        copy.name_ += "~oo";
    if (copy.flip_even_odd_)
        copy.name_ += "~eo";
    return copy;
}

BracketResult AlgebraPresentation::bracket(GeneratorRef x, GeneratorRef y) const {
    if (!valid(x) || !valid(y))
        throw std::invalid_argument("bracket: generator not in " + name_);
    if (is_central(x) || is_central(y))
        return {};
    BracketResult r = bracket_raw(x, y);
    bool x_odd = parity(x) == Parity::odd;
    bool y_odd = parity(y) == Parity::odd;
    bool flip = (x_odd && y_odd) ? flip_odd_odd_ : ((x_odd || y_odd) && flip_even_odd_);
    if (flip)
        for (auto& t : r.terms)
            t.coeff = -t.coeff;
    return r;
}

BracketResult AlgebraPresentation::bracket_raw(GeneratorRef x, GeneratorRef y) const {
    if (id_ == CatalogId::custom) {
        auto it = table_.find({x, y});
        if (it == table_.end())
            return {};
        BracketResult r{it->second};
        sort_terms(r.terms);
        return r;
    }

    // Mixed-family pairs are printed in declaration order; derive the other
    // orientation by super-antisymmetry. Same-family formulas cover both.
    if (x.family > y.family) {
        BracketResult r = bracket_raw(y, x);
        Rational scale = koszul_sign(x, y) == -1 ? Rational(1) : Rational(-1);
        for (auto& t : r.terms)
            t.coeff *= scale;
        return r;
    }

    const std::string& fx = family(x.family).symbol;
    const std::string& fy = family(y.family).symbol;
    std::vector<BracketTerm> terms;
    bool delta0 = (x.index + y.index) == HalfInt();

    switch (id_) {
        case CatalogId::vir:
        case CatalogId::witt: {
            // [L_m, L_n] = (n-m) L_{m+n} + delta_{m+n,0} (1/12)(m^3-m) C
            std::int64_t m = x.index.as_integer(), n = y.index.as_integer();
            push_term(terms, make_rational(n - m), family_index("L"), x.index + y.index);
            if (id_ == CatalogId::vir && delta0)
                push_term(terms, vir_central(m), family_index("C"), HalfInt());
            break;
        }
        case CatalogId::orw: {
            if (fx == "L" && fy == "L") {
                // (n-m) L_{m+n} + delta (1/12)(n^3-n) C
                std::int64_t m = x.index.as_integer(), n = y.index.as_integer();
                push_term(terms, make_rational(n - m), family_index("L"), x.index + y.index);
                if (delta0)
                    push_term(terms, vir_central(n), family_index("C"), HalfInt());
            } else if (fx == "L" && fy == "G") {
                // (r + lambda m) G_{r+m}; the printed lambda = -1/2 case reads (r - m/2)
                Rational c = rational_of(y.index) + params_.at("lambda") * rational_of(x.index);
                push_term(terms, c, family_index("G"), x.index + y.index);
            }
            // [G, G] = 0
            break;
        }
        case CatalogId::q: {
            if (fx == "L" && fy == "L") {
                std::int64_t m = x.index.as_integer(), n = y.index.as_integer();
                push_term(terms, make_rational(n - m), family_index("L"), x.index + y.index);
                if (delta0)
                    push_term(terms, vir_central(n), family_index("C"), HalfInt());
            } else if (fx == "L" && fy == "H") {
                // [L_m, H_n] = n H_{m+n}
                push_term(terms, rational_of(y.index), family_index("H"), x.index + y.index);
            } else if (fx == "L" && fy == "G") {
                // [L_m, G_p] = (p - m/2) G_{p+m}
                Rational c = rational_of(y.index) - rational_of(x.index) / 2;
                push_term(terms, c, family_index("G"), x.index + y.index);
            } else if (fx == "H" && fy == "H") {
                // [H_m, H_n] = (1/3) m delta_{m+n,0} C
                if (delta0)
                    push_term(terms, rational_of(x.index) / 3, family_index("C"), HalfInt());
            } else if (fx == "H" && fy == "G") {
                // [H_m, G_p] = G_{m+p}
                push_term(terms, make_rational(1), family_index("G"), x.index + y.index);
            }
            break;
        }
        case CatalogId::bms3: {
            if (fx == "L" && fy == "L") {
                std::int64_t m = x.index.as_integer(), n = y.index.as_integer();
                push_term(terms, make_rational(m - n), family_index("L"), x.index + y.index);
                if (delta0)
                    push_term(terms, vir_central(m), family_index("C1"), HalfInt());
            } else if (fx == "L" && fy == "I") {
                std::int64_t m = x.index.as_integer(), n = y.index.as_integer();
                push_term(terms, make_rational(m - n), family_index("I"), x.index + y.index);
                if (delta0)
                    push_term(terms, vir_central(m), family_index("C2"), HalfInt());
            } else if (fx == "L" && fy == "Q") {
                // [L_m, Q_r] = (m/2 - r) Q_{m+r}
                Rational c = rational_of(x.index) / 2 - rational_of(y.index);
                push_term(terms, c, family_index("Q"), x.index + y.index);
            } else if (fx == "Q" && fy == "Q") {
                // [Q_r, Q_s] = 2 I_{r+s} + (1/3) delta_{r+s,0} (r^2 - 1/4) C2
                push_term(terms, make_rational(2), family_index("I"), x.index + y.index);
                if (delta0)
                    push_term(terms, ns_central(x.index), family_index("C2"), HalfInt());
            }
            // [I, I] = 0 and the printed "[M_n, Q_r] = 0", read as [I_n, Q_r] = 0
            break;
        }
        case CatalogId::sw22: {
            if (fx == "L" && fy == "L") {
                std::int64_t m = x.index.as_integer(), n = y.index.as_integer();
                push_term(terms, make_rational(m - n), family_index("L"), x.index + y.index);
                if (delta0)
                    push_term(terms, vir_central(m), family_index("C1"), HalfInt());
            } else if (fx == "L" && fy == "I") {
                // printed with the opposite orientation of [L, L]: (n-m) I_{m+n}
                std::int64_t m = x.index.as_integer(), n = y.index.as_integer();
                push_term(terms, make_rational(n - m), family_index("I"), x.index + y.index);
                if (delta0)
                    push_term(terms, vir_central(m), family_index("C2"), HalfInt());
            } else if ((fx == "L" || fx == "I") && (fy == "G" || fy == "Q")) {
                // [L_m, G_r], [L_m, Q_r], [I_m, G_r] all read (m/2 - r);
                // [I_m, Q_r] is not listed and brackets to zero.
                if (!(fx == "I" && fy == "Q")) {
                    Rational c = rational_of(x.index) / 2 - rational_of(y.index);
                    int target = (fx == "I" || fy == "Q") ? family_index("Q") : family_index("G");
                    push_term(terms, c, target, x.index + y.index);
                }
            } else if (fx == "G" && fy == "G") {
                push_term(terms, make_rational(2), family_index("L"), x.index + y.index);
                if (delta0)
                    push_term(terms, ns_central(x.index), family_index("C1"), HalfInt());
            } else if (fx == "G" && fy == "Q") {
                push_term(terms, make_rational(2), family_index("I"), x.index + y.index);
                if (delta0)
                    push_term(terms, ns_central(x.index), family_index("C2"), HalfInt());
            }
            // [I, I] and [Q, Q] are not listed and bracket to zero
            break;
        }
        case CatalogId::ns: {
            if (fx == "L" && fy == "L") {
                std::int64_t m = x.index.as_integer(), n = y.index.as_integer();
                push_term(terms, make_rational(n - m), family_index("L"), x.index + y.index);
                if (delta0)
                    push_term(terms, vir_central(n), family_index("C"), HalfInt());
            } else if (fx == "L" && fy == "G") {
                // [L_m, G_r] = (r - m/2) G_{r+m}
                Rational c = rational_of(y.index) - rational_of(x.index) / 2;
                push_term(terms, c, family_index("G"), x.index + y.index);
            } else if (fx == "G" && fy == "G") {
                push_term(terms, make_rational(2), family_index("L"), x.index + y.index);
                if (delta0)
                    push_term(terms, ns_central(x.index), family_index("C"), HalfInt());
            }
            break;
        }
        case CatalogId::custom:
            break;
    }
    sort_terms(terms);
    return BracketResult{std::move(terms)};
}

AlgebraPresentation catalog_build(const std::string& name, const std::map<std::string, Rational>& params) {
    AlgebraPresentation a;
    a.name_ = name;
    IndexLattice whole{0};
    auto even = [&](const std::string& s, IndexLattice lat) { return FamilySpec{s, Parity::even, lat, false}; };
    auto odd = [&](const std::string& s, IndexLattice lat) { return FamilySpec{s, Parity::odd, lat, false}; };
    auto central = [&](const std::string& s) { return FamilySpec{s, Parity::even, whole, true}; };

    if (name == "vir") {
        a.id_ = CatalogId::vir;
        a.families_ = {even("L", whole), central("C")};
    } else if (name == "witt") {
        a.id_ = CatalogId::witt;
        a.families_ = {even("L", whole)};
    } else if (name == "orw") {
        a.id_ = CatalogId::orw;
        auto it = params.find("lambda");
        if (it == params.end())
            throw std::invalid_argument("orw requires parameter lambda");
        auto eps = params.find("epsilon");
        if (eps == params.end())
            throw std::invalid_argument("orw requires parameter epsilon (0 or 1/2)");
        IndexLattice odd_lat;
        if (eps->second == 0)
            odd_lat = whole;
        else if (eps->second == make_rational(1, 2))
            odd_lat = IndexLattice{1};
        else
            throw std::invalid_argument("orw: epsilon must be 0 or 1/2");
        a.params_ = {{"lambda", it->second}, {"epsilon", eps->second}};
        a.families_ = {even("L", whole), odd("G", odd_lat), central("C")};
        a.name_ = "orw(" + to_string(it->second) + "," + to_string(eps->second) + ")";
    } else if (name == "q") {
        a.id_ = CatalogId::q;
        a.families_ = {even("L", whole), even("H", whole), odd("G", IndexLattice{1}), central("C")};
        a.notes_.push_back(
            "q: the printed [L_m,L_n] central term lacks delta_{m+n,0}; implemented with the delta restored");
    } else if (name == "bms3") {
        a.id_ = CatalogId::bms3;
        a.families_ = {even("L", whole), even("I", whole), odd("Q", IndexLattice{1}), central("C1"), central("C2")};
        a.notes_.push_back("bms3: the printed relation [M_n,Q_r]=0 is read as [I_n,Q_r]=0 (M a typo for I)");
    } else if (name == "sw22") {
        a.id_ = CatalogId::sw22;
        a.families_ = {even("L", whole), even("I", whole), odd("G", IndexLattice{1}),
                       odd("Q", IndexLattice{1}), central("C1"), central("C2")};
        a.notes_.push_back("sw22: [I_m,I_n], [I_m,Q_r], [Q_r,Q_s] are not listed in the table; implemented as 0");
    } else if (name == "ns") {
        a.id_ = CatalogId::ns;
        a.families_ = {even("L", whole), odd("G", IndexLattice{1}), central("C")};
    } else {
        throw std::invalid_argument("unknown catalog algebra '" + name + "'");
    }

    a.pbw_rank_.assign(a.families_.size(), 0);
    int rank = 0;
    for (std::size_t i = 0; i < a.families_.size(); ++i)
        if (a.families_[i].central)
            a.pbw_rank_[i] = rank++;
    for (std::size_t i = 0; i < a.families_.size(); ++i)
        if (!a.families_[i].central)
            a.pbw_rank_[i] = rank++;
    return a;
}

AlgebraPresentation custom_build(const std::string& name, std::vector<FamilySpec> families,
                                 std::vector<std::pair<std::pair<GeneratorRef, GeneratorRef>, std::vector<BracketTerm>>> table) {
    AlgebraPresentation a;
    a.id_ = CatalogId::custom;
    a.name_ = name;
    a.families_ = std::move(families);
    a.pbw_rank_.assign(a.families_.size(), 0);
    int rank = 0;
    for (std::size_t i = 0; i < a.families_.size(); ++i)
        if (a.families_[i].central)
            a.pbw_rank_[i] = rank++;
    for (std::size_t i = 0; i < a.families_.size(); ++i)
        if (!a.families_[i].central)
            a.pbw_rank_[i] = rank++;
    for (auto& [key, terms] : table) {
        if (!a.valid(key.first) || !a.valid(key.second))
            throw std::invalid_argument("custom table: invalid generator in key");
        for (const auto& t : terms)
            if (!a.valid(t.target))
                throw std::invalid_argument("custom table: invalid target generator");
        std::vector<BracketTerm> sorted = terms;
        sort_terms(sorted);
        a.table_[key] = std::move(sorted);
    }
    return a;
}

std::vector<GeneratorRef> generators_in_window(const AlgebraPresentation& algebra, int lo2, int hi2) {
    std::vector<GeneratorRef> out;
    for (int f = 0; f < static_cast<int>(algebra.families().size()); ++f) {
        const FamilySpec& fam = algebra.family(f);
        if (fam.central) {
            if (lo2 <= 0 && 0 <= hi2)
                out.push_back({f, HalfInt()});
            continue;
        }
        int start = lo2;
        int parity = ((fam.lattice.twice_offset % 2) + 2) % 2;
        if ((((start % 2) + 2) % 2) != parity)
            ++start;
        for (int d = start; d <= hi2; d += 2)
            out.push_back({f, HalfInt::from_doubled(d)});
    }
    return out;
}

std::string bracket_result_str(const AlgebraPresentation& algebra, const BracketResult& r) {
    if (r.terms.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : r.terms) {
        Rational c = t.coeff;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0)
                c = -c;
        }
        first = false;
        os << to_string(c) << "*" << algebra.gen_str(t.target);
    }
    return os.str();
}

AlgebraCheckReport check_antisymmetry(const AlgebraPresentation& algebra, int lo2, int hi2) {
    AlgebraCheckReport report;
    std::vector<GeneratorRef> gens = generators_in_window(algebra, lo2, hi2);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i; j < gens.size(); ++j) {
            GeneratorRef x = gens[i], y = gens[j];
            ++report.cases;
            BracketResult fwd = algebra.bracket(x, y);
            BracketResult bwd = algebra.bracket(y, x);
            BracketResult residual = combine(fwd, bwd, make_rational(algebra.koszul_sign(x, y)));
            if (!residual.is_zero()) {
                report.violations.push_back("antisymmetry(" + algebra.gen_str(x) + ", " + algebra.gen_str(y) +
                                            "): residual " + bracket_result_str(algebra, residual) +
                                            "  [" + algebra.gen_str(x) + "," + algebra.gen_str(y) + "] = " +
                                            bracket_result_str(algebra, fwd) + ";  [" + algebra.gen_str(y) + "," +
                                            algebra.gen_str(x) + "] = " + bracket_result_str(algebra, bwd));
            }
        }
    }
    return report;
}

namespace {

// [x, r] extended linearly over a bracket result.
BracketResult ad(const AlgebraPresentation& algebra, GeneratorRef x, const BracketResult& r) {
    BracketResult out;
    for (const auto& t : r.terms)
        out = combine(out, algebra.bracket(x, t.target), t.coeff);
    return out;
}

}  // namespace

AlgebraCheckReport check_super_jacobi(const AlgebraPresentation& algebra, int lo2, int hi2) {
    AlgebraCheckReport report;
    std::vector<GeneratorRef> gens = generators_in_window(algebra, lo2, hi2);
    for (GeneratorRef x : gens) {
        for (GeneratorRef y : gens) {
            for (GeneratorRef z : gens) {
                ++report.cases;
                BracketResult lhs = ad(algebra, x, algebra.bracket(y, z));
                BracketResult r1 = ad(algebra, z, algebra.bracket(x, y));
                // [[x,y],z] = -(-1)^{|[x,y]| |z|} [z, [x,y]]; parity of [x,y] is |x|+|y|
                int par_xy = ((algebra.parity(x) == Parity::odd) + (algebra.parity(y) == Parity::odd)) % 2;
                int sign1 = (par_xy == 1 && algebra.parity(z) == Parity::odd) ? -1 : 1;
                BracketResult residual = combine(lhs, r1, make_rational(sign1));
                BracketResult r2 = ad(algebra, y, algebra.bracket(x, z));
                residual = combine(residual, r2, make_rational(-algebra.koszul_sign(x, y)));
                if (!residual.is_zero()) {
                    report.violations.push_back("jacobi(" + algebra.gen_str(x) + ", " + algebra.gen_str(y) + ", " +
                                                algebra.gen_str(z) + "): residual " +
                                                bracket_result_str(algebra, residual));
                }
            }
        }
    }
    return report;
}

}  // namespace orw
