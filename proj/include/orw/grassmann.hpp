#pragma once

#include <map>
#include <string>
#include <vector>

#include "orw/algebra.hpp"
#include "orw/env.hpp"
#include "orw/rational.hpp"

namespace orw {

// Strictly increasing index list naming a product of odd generators from a
// single family; the empty list is the unit. Repeats square to zero and are
// never stored.
using ExtMonomial = std::vector<HalfInt>;

// Degree first (longer monomials lead), then lexicographic on the index
// lists. Fixed once so pivots and printed elements are canonical.
struct ExtMonomialOrder {
    bool operator()(const ExtMonomial& a, const ExtMonomial& b) const;
};

class ExtElement {
  public:
    ExtElement() = default;
    explicit ExtElement(ExtMonomial m, Rational c = make_rational(1));

    /// Merges a term; zero coefficients vanish. m must be strictly increasing.
    void add(const ExtMonomial& m, const Rational& c);
    const std::map<ExtMonomial, Rational, ExtMonomialOrder>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Largest term length (0 for the zero element).
    int degree() const;

    ExtElement& operator+=(const ExtElement& rhs);
    ExtElement& operator-=(const ExtElement& rhs);
    ExtElement& operator*=(const Rational& c);
    friend bool operator==(const ExtElement& a, const ExtElement& b) { return a.terms_ == b.terms_; }

  private:
    std::map<ExtMonomial, Rational, ExtMonomialOrder> terms_;
};

/// Exterior product with the anticommutation sign; repeated indices kill terms.
ExtElement ext_wedge(const ExtElement& a, const ExtElement& b);

/// Canonical text, e.g. "-2 * G[1/2]^G[3/2] + 1 * 1"-style terms joined " + ".
std::string ext_str(const ExtElement& e);

// Contiguous index window: all HalfInt with doubled value in [lo2, hi2]
// stepping by 2 (one lattice class; lo2 and hi2 must share parity).
struct ExtWindow {
    int lo2 = 0;
    int hi2 = 0;
    bool contains(HalfInt r) const;
    std::vector<HalfInt> indices() const;
    std::size_t size() const;
};

/// Image of an enveloping element in the exterior algebra. Every letter must
/// be an odd generator of one family with its index in the window, and every
/// coefficient must be constant; anything else throws. Words with repeated
/// letters map to zero.
ExtElement ext_inject(const AlgebraPresentation& algebra, const EnvElement& e, const ExtWindow& w);

/// Exterior image of the order-m alternating quadratic relation
///   sum_i (-1)^i C(m,i) G_{r-i} G_{s+i}.
/// Degenerate index patterns can collapse terms or vanish outright.
ExtElement ext_omega(HalfInt r, HalfInt s, long m);

// One term of a membership certificate: coeff * left ^ relation(r,s,m) ^ right.
// Degree-2 relations are central in the exterior algebra, so the right factor
// is always folded into the left and printed as the unit.
struct CertificateTerm {
    Rational coeff;
    ExtMonomial left;
    HalfInt r, s;
    long m = 0;
    ExtMonomial right;
};

/// Sum of the certificate's expanded terms; equals the certified element when
/// the certificate is sound.
ExtElement certificate_expand(const std::vector<CertificateTerm>& cert);

// Row-reduced degree-capped slice of the two-sided ideal generated by all
// in-window order-m relations (all r, s whose letters r-i, s+i stay in the
// window). Rows are monic with distinct leading monomials and fully reduced
// against each other; each row remembers its expression in the original
// spanning set for certificate extraction.
class IdealBasis {
  public:
    struct SpanElem {
        ExtMonomial left;
        HalfInt r, s;
    };
    struct Row {
        ExtElement value;                       // monic, lead = pivot
        std::map<std::size_t, Rational> combo;  // over spanning-set ids
    };

    const ExtWindow& window() const { return window_; }
    long m() const { return m_; }
    int cap() const { return cap_; }
    /// True when the requested cap exceeded the window size (flagged, the
    /// effective cap is clamped; nothing of higher degree exists anyway).
    bool cap_vacuous() const { return cap_vacuous_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<SpanElem>& spanning() const { return spanning_; }
    const std::vector<Row>& rows() const { return rows_; }
    const Row* row_for(const ExtMonomial& lead) const;

    friend IdealBasis ideal_build(const ExtWindow& w, long m, int cap);

  private:
    bool insert(ExtElement v, std::map<std::size_t, Rational> combo);

    ExtWindow window_;
    long m_ = 0;
    int cap_ = 0;
    bool cap_vacuous_ = false;
    std::vector<SpanElem> spanning_;
    std::vector<Row> rows_;
    std::map<ExtMonomial, std::size_t, ExtMonomialOrder> pivots_;
};

IdealBasis ideal_build(const ExtWindow& w, long m, int cap);

struct MemberResult {
    bool member = false;
    std::vector<CertificateTerm> certificate;  // nonempty when member (and x != 0)
    ExtElement remainder;                      // nonzero when not a member
};

/// Reduces x against the basis. Throws when deg x exceeds the cap.
MemberResult member(const ExtElement& x, const IdealBasis& I);

// Certification that every (m+2)-monomial with indices in the run
// {s, s+1, ..., s+m+k} reduces to zero against the in-window order-m ideal.
struct Lemma33Report {
    long m = 0;
    long k = 0;
    HalfInt s;
    ExtWindow window;
    long checked = 0;
    bool cap_vacuous = false;
    /// True when failures exist and the margins were below the defaults, so
    /// they may be truncation artifacts rather than genuine non-members.
    bool margin_limited = false;
    std::vector<std::string> failures;
    bool passed() const { return failures.empty(); }
};

/// Desk-scale bounds: 0 <= m <= 2, 1 <= k <= 4. Margins are doubled index
/// distances added beyond the run; -1 selects the defaults 2(m+1) on the left
/// and 2 on the right, giving the window [s-m-1, s+m+k+1].
Lemma33Report verify_lemma33(long m, long k, HalfInt s, int left_margin2 = -1, int right_margin2 = -1);

}  // namespace orw
