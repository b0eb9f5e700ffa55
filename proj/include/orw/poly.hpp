#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "orw/rational.hpp"

namespace orw {

// Exponent vector, name-keyed; only positive exponents are stored.
using Monomial = std::map<std::string, int>;

int total_degree(const Monomial& m);

// Graded lexicographic: higher total degree sorts earlier, ties broken by
// exponents of alphabetically earlier variables. Fixed once so equal
// polynomials print identically.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse multivariate polynomial over the exact rationals. Indeterminates are
// open-ended and name-keyed; zero coefficients are never stored.
class PolyScalar {
  public:
    PolyScalar() = default;
    PolyScalar(const Rational& c);
    PolyScalar(long c) : PolyScalar(make_rational(c)) {}
    static PolyScalar variable(const std::string& name);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (zero if absent).
    Rational constant_value() const;

    const std::map<Monomial, Rational, MonomialOrder>& terms() const { return terms_; }
    std::set<std::string> variables() const;
    int degree() const;
    int degree_in(const std::string& var) const;

    PolyScalar& operator+=(const PolyScalar& rhs);
    PolyScalar& operator-=(const PolyScalar& rhs);
    PolyScalar& operator*=(const PolyScalar& rhs);
    PolyScalar& operator*=(const Rational& c);
    friend PolyScalar operator+(PolyScalar a, const PolyScalar& b) { return a += b; }
    friend PolyScalar operator-(PolyScalar a, const PolyScalar& b) { return a -= b; }
    friend PolyScalar operator*(PolyScalar a, const PolyScalar& b) { return a *= b; }
    friend PolyScalar operator*(PolyScalar a, const Rational& c) { return a *= c; }
    friend PolyScalar operator*(const Rational& c, PolyScalar a) { return a *= c; }
    PolyScalar operator-() const;
    friend bool operator==(const PolyScalar& a, const PolyScalar& b) { return a.terms_ == b.terms_; }

    /// Simultaneous substitution. Every bound name must occur in this
    /// polynomial's variable set; unbound indeterminates stay symbolic.
    PolyScalar substitute(const std::map<std::string, PolyScalar>& bindings) const;
    /// Same, but bindings for absent names are ignored instead of rejected.
    PolyScalar substitute_partial(const std::map<std::string, PolyScalar>& bindings) const;

    void add_term(const Monomial& mono, const Rational& coeff);

    /// Canonical text form, e.g. "a^2 + 2*a*b - 1/2". Zero prints as "0".
    std::string str() const;

  private:
    std::map<Monomial, Rational, MonomialOrder> terms_;
};

inline PolyScalar poly_var(const std::string& name) { return PolyScalar::variable(name); }

/// Alternating binomial shift sum: sum_{i=0}^{m} (-1)^i C(m,i) p[var -> var+i].
/// Vanishes exactly when p has degree < m in var; this is the scalar shadow of
/// the annihilation operators built in the enveloping algebra.
PolyScalar finite_difference(const PolyScalar& p, const std::string& var, long m);

}  // namespace orw
