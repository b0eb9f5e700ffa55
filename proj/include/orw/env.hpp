#pragma once

#include <map>
#include <string>
#include <vector>

#include "orw/algebra.hpp"
#include "orw/poly.hpp"

namespace orw {

// A word in the universal enveloping algebra: an ordered product of
// generators. Unordered words are legal; normal form is a property of
// elements, not words.
using Word = std::vector<GeneratorRef>;

// Finitely supported coefficient-weighted sum of words over one presentation,
// tagged by the presentation's name so cross-algebra arithmetic is rejected.
// Coefficients are polynomials so identities can carry symbolic parameters.
// No zero coefficients are stored.
class EnvElement {
  public:
    EnvElement() = default;
    explicit EnvElement(std::string algebra_name) : algebra_(std::move(algebra_name)) {}

    const std::string& algebra() const { return algebra_; }
    const std::map<Word, PolyScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Merges into the term map and drops zeros.
    void add(const Word& w, const PolyScalar& c);

    friend bool operator==(const EnvElement& a, const EnvElement& b) { return a.terms_ == b.terms_; }

  private:
    std::string algebra_;
    std::map<Word, PolyScalar> terms_;
};

/// Single-word element with an explicit coefficient.
EnvElement env_make(const AlgebraPresentation& algebra, const Word& w, const PolyScalar& c = PolyScalar(1));

EnvElement env_add(const EnvElement& a, const EnvElement& b);
EnvElement env_sub(const EnvElement& a, const EnvElement& b);
EnvElement env_scale(const EnvElement& e, const PolyScalar& c);

/// Free associative product: word concatenation, coefficient multiplication.
/// No straightening happens here. Throws on mixed presentations.
EnvElement env_mul(const AlgebraPresentation& algebra, const EnvElement& a, const EnvElement& b);

/// PBW straightening. Repeatedly rewrites the leftmost out-of-order adjacent
/// pair via x*y -> (-1)^{|x||y|} y*x + [x,y]; adjacent equal odd letters
/// collapse via G*G -> (1/2)[G,G]. Every word of the result is non-decreasing
/// in the fixed letter order (central families first, declaration order,
/// index ascending); the result is unique for that order.
EnvElement normal_form(const AlgebraPresentation& algebra, const EnvElement& e);

/// true iff normal_form(a - b) is zero.
bool element_equal(const AlgebraPresentation& algebra, const EnvElement& a, const EnvElement& b);

enum class OmegaKind { LL, GL, GG };

/// Alternating binomial-weighted sum of two-letter words:
///   sum_{i=0}^{m} (-1)^i binom(m,i) X_{first-i} Y_{s+i}
/// with (X, Y) = (L,L), (G,L) or (G,G) by kind. Returned un-straightened.
/// Throws when an index falls off its family's lattice.
EnvElement build_omega(const AlgebraPresentation& algebra, OmegaKind kind, HalfInt first, HalfInt s, long m);

/// Weighted odd-odd companion sum:
///   sum_{i=0}^{m} (-1)^i binom(m,i) (s+i-2t) G_{first-i} G_{s+t+i}.
EnvElement build_weighted_gg(const AlgebraPresentation& algebra, HalfInt first, HalfInt s, HalfInt t, long m);

struct PbwIdentityReport {
    bool passed = false;
    std::string residual;  // "0" when passed
};

/// Exact identity behind order reduction of the odd annihilators:
///   G_t * Omega(GL; r, s, m) + Omega(GL; r, s, m) * G_t = -1/2 * W(r, s, t, m)
/// where W is build_weighted_gg. Holds in the enveloping algebra of the
/// lambda = -1/2 catalog family; any failure carries the straightened residual.
PbwIdentityReport verify_omega2_identity(const AlgebraPresentation& algebra, long m, HalfInt r, HalfInt s, HalfInt t);

/// Exact identity recombining two weighted sums into the odd-odd operator:
///   W(r, s1, u-s1, m) - W(r, s2, u-s2, m) = 3(s1-s2) * Omega(GG; r, u, m).
/// Requires s1 != s2 and u-s1, u-s2 on the odd lattice.
PbwIdentityReport verify_omega3_combination(const AlgebraPresentation& algebra, long m, HalfInt r, HalfInt u,
                                            long s1, long s2);

/// Canonical text: "coeff * Fam[i] Fam[j] + ...", polynomial coefficients
/// parenthesized, the empty word printed as "1", zero as "0".
std::string env_str(const AlgebraPresentation& algebra, const EnvElement& e);

}  // namespace orw
