#include "orw/env.hpp"

#include <sstream>
#include <stdexcept>

namespace orw {

namespace {

void check_tag(const AlgebraPresentation& algebra, const EnvElement& e, const char* op) {
    if (!e.algebra().empty() && e.algebra() != algebra.name())
        throw std::invalid_argument(std::string(op) + ": element over '" + e.algebra() + "', presentation is '" +
                                    algebra.name() + "'");
}

void check_word(const AlgebraPresentation& algebra, const Word& w) {
    for (GeneratorRef g : w)
        if (!algebra.valid(g))
            throw std::invalid_argument("word letter not valid in " + algebra.name());
}

}  // namespace

void EnvElement::add(const Word& w, const PolyScalar& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

EnvElement env_make(const AlgebraPresentation& algebra, const Word& w, const PolyScalar& c) {
    check_word(algebra, w);
    EnvElement e(algebra.name());
    e.add(w, c);
    return e;
}

namespace {

std::string merge_tag(const EnvElement& a, const EnvElement& b) {
    if (a.algebra().empty())
        return b.algebra();
    if (!b.algebra().empty() && a.algebra() != b.algebra())
        throw std::invalid_argument("elements over different presentations: '" + a.algebra() + "' vs '" +
                                    b.algebra() + "'");
    return a.algebra();
}

}  // namespace

EnvElement env_add(const EnvElement& a, const EnvElement& b) {
    EnvElement out(merge_tag(a, b));
    for (const auto& [w, c] : a.terms())
        out.add(w, c);
    for (const auto& [w, c] : b.terms())
        out.add(w, c);
    return out;
}

EnvElement env_sub(const EnvElement& a, const EnvElement& b) {
    EnvElement out(merge_tag(a, b));
    for (const auto& [w, c] : a.terms())
        out.add(w, c);
    for (const auto& [w, c] : b.terms())
        out.add(w, -c);
    return out;
}

EnvElement env_scale(const EnvElement& e, const PolyScalar& c) {
    EnvElement out(e.algebra());
    for (const auto& [w, coeff] : e.terms())
        out.add(w, coeff * c);
    return out;
}

EnvElement env_mul(const AlgebraPresentation& algebra, const EnvElement& a, const EnvElement& b) {
    check_tag(algebra, a, "env_mul");
    check_tag(algebra, b, "env_mul");
    EnvElement out(algebra.name());
    for (const auto& [wa, ca] : a.terms()) {
        for (const auto& [wb, cb] : b.terms()) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add(w, ca * cb);
        }
    }
    return out;
}

EnvElement normal_form(const AlgebraPresentation& algebra, const EnvElement& e) {
    check_tag(algebra, e, "normal_form");
    EnvElement done(algebra.name());
    std::map<Word, PolyScalar> pending(e.terms().begin(), e.terms().end());
    // Each rewrite strictly shrinks (word length, inversion count), so the
    // loop terminates; the cap only guards against a broken letter order.
    long fuel = 1'000'000;
    while (!pending.empty()) {
        if (--fuel < 0)
            throw std::logic_error("normal_form: rewrite did not terminate");
        auto node = pending.extract(pending.begin());
        const Word& w = node.key();
        const PolyScalar& c = node.mapped();
        if (c.is_zero())
            continue;

        std::size_t pos = w.size();
        bool collapse = false;
        for (std::size_t p = 0; p + 1 < w.size(); ++p) {
            GeneratorRef a = w[p], b = w[p + 1];
            if (algebra.letter_less(b, a)) {
                pos = p;
                break;
            }
            if (a == b && algebra.parity(a) == Parity::odd) {
                pos = p;
                collapse = true;
                break;
            }
        }
        if (pos == w.size()) {
            done.add(w, c);
            continue;
        }

        auto emit = [&](const Word& word, const PolyScalar& coeff) {
            if (coeff.is_zero())
                return;
            auto [it, inserted] = pending.emplace(word, coeff);
            if (!inserted) {
                it->second += coeff;
                if (it->second.is_zero())
                    pending.erase(it);
            }
        };

        Word head(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
        Word tail(w.begin() + static_cast<std::ptrdiff_t>(pos) + 2, w.end());
        auto spliced = [&](GeneratorRef g) {
            Word out = head;
            out.push_back(g);
            out.insert(out.end(), tail.begin(), tail.end());
            return out;
        };

        BracketResult bracket = algebra.bracket(w[pos], w[pos + 1]);
        if (collapse) {
            // x*x = (1/2)[x,x] for odd x
            for (const auto& t : bracket.terms)
                emit(spliced(t.target), c * (t.coeff / 2));
        } else {
            Word swapped = w;
            std::swap(swapped[pos], swapped[pos + 1]);
            emit(swapped, c * make_rational(algebra.koszul_sign(w[pos], w[pos + 1])));
            for (const auto& t : bracket.terms)
                emit(spliced(t.target), c * t.coeff);
        }
    }
    return done;
}

bool element_equal(const AlgebraPresentation& algebra, const EnvElement& a, const EnvElement& b) {
    return normal_form(algebra, env_sub(a, b)).is_zero();
}

EnvElement build_omega(const AlgebraPresentation& algebra, OmegaKind kind, HalfInt first, HalfInt s, long m) {
    if (m < 0)
        throw std::invalid_argument("build_omega: negative order");
    const char* fx = (kind == OmegaKind::LL) ? "L" : "G";
    const char* fy = (kind == OmegaKind::GG) ? "G" : "L";
    int famx = algebra.family_index(fx), famy = algebra.family_index(fy);
    if (famx < 0 || famy < 0)
        throw std::invalid_argument("build_omega: presentation lacks required families");
    EnvElement out(algebra.name());
    for (long i = 0; i <= m; ++i) {
        GeneratorRef x{famx, first - HalfInt::whole(i)};
        GeneratorRef y{famy, s + HalfInt::whole(i)};
        if (!algebra.valid(x) || !algebra.valid(y))
            throw std::invalid_argument("build_omega: index off the family lattice");
        Rational coeff = make_rational(binomial(m, i), Integer(1));
        if (i % 2 != 0)
            coeff = -coeff;
        out.add(Word{x, y}, PolyScalar(coeff));
    }
    return out;
}

EnvElement build_weighted_gg(const AlgebraPresentation& algebra, HalfInt first, HalfInt s, HalfInt t, long m) {
    if (m < 0)
        throw std::invalid_argument("build_weighted_gg: negative order");
    int fam = algebra.family_index("G");
    if (fam < 0)
        throw std::invalid_argument("build_weighted_gg: presentation lacks an odd family G");
    EnvElement out(algebra.name());
    for (long i = 0; i <= m; ++i) {
        GeneratorRef x{fam, first - HalfInt::whole(i)};
        GeneratorRef y{fam, s + t + HalfInt::whole(i)};
        if (!algebra.valid(x) || !algebra.valid(y))
            throw std::invalid_argument("build_weighted_gg: index off the family lattice");
        // (-1)^i binom(m,i) (s + i - 2t)
        Rational weight = make_rational(s.doubled() + 2 * i - 2 * t.doubled(), 2);
        Rational coeff = make_rational(binomial(m, i), Integer(1)) * weight;
        if (i % 2 != 0)
            coeff = -coeff;
        out.add(Word{x, y}, PolyScalar(coeff));
    }
    return out;
}

PbwIdentityReport verify_omega2_identity(const AlgebraPresentation& algebra, long m, HalfInt r, HalfInt s,
                                         HalfInt t) {
    int fam = algebra.family_index("G");
    if (fam < 0)
        throw std::invalid_argument("verify_omega2_identity: presentation lacks an odd family G");
    EnvElement omega = build_omega(algebra, OmegaKind::GL, r, s, m);
    EnvElement gt = env_make(algebra, Word{GeneratorRef{fam, t}});
    EnvElement lhs = env_add(env_mul(algebra, gt, omega), env_mul(algebra, omega, gt));
    EnvElement rhs = env_scale(build_weighted_gg(algebra, r, s, t, m), PolyScalar(make_rational(-1, 2)));
    EnvElement residual = normal_form(algebra, env_sub(lhs, rhs));
    return {residual.is_zero(), env_str(algebra, residual)};
}

PbwIdentityReport verify_omega3_combination(const AlgebraPresentation& algebra, long m, HalfInt r, HalfInt u,
                                            long s1, long s2) {
    if (s1 == s2)
        throw std::invalid_argument("verify_omega3_combination: s1 and s2 must differ");
    HalfInt hs1 = HalfInt::whole(s1), hs2 = HalfInt::whole(s2);
    EnvElement lhs = env_sub(build_weighted_gg(algebra, r, hs1, u - hs1, m),
                             build_weighted_gg(algebra, r, hs2, u - hs2, m));
    EnvElement rhs = env_scale(build_omega(algebra, OmegaKind::GG, r, u, m),
                               PolyScalar(make_rational(3 * (s1 - s2))));
    EnvElement residual = normal_form(algebra, env_sub(lhs, rhs));
    return {residual.is_zero(), env_str(algebra, residual)};
}

std::string env_str(const AlgebraPresentation& algebra, const EnvElement& e) {
    if (e.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : e.terms()) {
        if (!first)
            os << " + ";
        first = false;
        if (c.is_constant())
            os << to_string(c.constant_value());
        else
            os << "(" << c.str() << ")";
        os << " *";
        if (w.empty())
            os << " 1";
        for (GeneratorRef g : w)
            os << " " << algebra.gen_str(g);
    }
    return os.str();
}

}  // namespace orw
