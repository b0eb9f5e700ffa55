#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "orw/algebra.hpp"
#include "orw/env.hpp"
#include "orw/poly.hpp"

namespace orw {

// One weight-space sector of a module: a lattice-indexed family of basis
// vectors of fixed parity.
struct SectorSpec {
    std::string name;
    Parity parity = Parity::even;
    IndexLattice lattice;
};

// Action of one generator family on one sector:
//   X_n v_j = coeff(n, j, params) * w_{j+n}  in sector `target`.
// target == -1 marks the identically-zero rule; the index offset is always the
// generator's own index, so only the coefficient and target are stored.
struct ActionRule {
    PolyScalar coeff;
    int target = -1;
    bool zero() const { return target < 0; }
};

// A closed-form weight module over one presentation: sectors plus an action
// rule for every (generator family, sector) pair. Rules' coefficients are
// polynomials in the symbolic generator index "n", the symbolic vector index
// "j", and any still-symbolic parameters.
class WeightModuleSpec {
  public:
    const std::string& name() const { return name_; }
    const AlgebraPresentation& algebra() const { return algebra_; }
    const std::vector<SectorSpec>& sectors() const { return sectors_; }
    int sector_index(const std::string& name) const;
    /// Parameter names still symbolic in the rule coefficients.
    const std::set<std::string>& params() const { return params_; }
    bool parity_shift() const { return parity_shift_; }
    /// Convention adjustments recorded at build or pin time.
    const std::vector<std::string>& notes() const { return notes_; }

    bool has_rule(int family, int sector) const;
    /// Throws when the spec lacks a rule for the pair (malformed spec).
    const ActionRule& rule(int family, int sector) const;

    /// Binds parameters to rationals; unmentioned parameters stay symbolic.
    WeightModuleSpec specialize(const std::map<std::string, Rational>& values) const;

    /// Copies used by sign-convention pinning; both record what they changed.
    WeightModuleSpec with_negated_rules(bool even_families, bool odd_on_y) const;
    WeightModuleSpec with_algebra(AlgebraPresentation twisted) const;

    friend WeightModuleSpec module_build(const std::string& name, const AlgebraPresentation& algebra,
                                         const std::map<std::string, PolyScalar>& params);

  private:
    std::string name_;
    AlgebraPresentation algebra_;
    std::vector<SectorSpec> sectors_;
    std::set<std::string> params_;
    bool parity_shift_ = false;
    std::vector<std::string> notes_;
    // keyed by (family, sector)
    std::map<std::pair<int, int>, ActionRule> rules_;
};

/// Catalog constructor. name selects the closed-form family:
///   Aab            L_n v_j = (a+j+bn) v_{j+n}        over vir/witt
///   Flambda        L_n v_j = (j+lambda*n) v_{j+n}    over witt/vir
///   Aabc           adds H_n v_j = c v_{j+n}, G zero  over q
///   Sab            two-sector x/y module             over ns/sw22 (as printed)
///   PiSab          Sab with sector parities swapped
///   Aab_trivial_ext  Aab with every extra family acting as zero; the even
///                    coefficient sign follows the host algebra's bracket
///                    orientation
///   HalfS          Sab with the odd action on y replaced by zero, over the
///                  lambda = -1/2 two-parameter catalog entry (axiom-checked
///                  at build time)
/// params bind a, b, c, lambda to polynomials; missing entries stay symbolic.
WeightModuleSpec module_build(const std::string& name, const AlgebraPresentation& algebra,
                              const std::map<std::string, PolyScalar>& params = {});

// Image of a generic basis vector v_j: coefficients (polynomials in j and
// params) per (sector, index offset). No zero coefficients stored.
class SymbolicVector {
  public:
    void add(int sector, HalfInt offset, const PolyScalar& coeff);
    const std::map<std::pair<int, HalfInt>, PolyScalar>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    friend bool operator==(const SymbolicVector& a, const SymbolicVector& b) {
        return a.entries_ == b.entries_;
    }

  private:
    std::map<std::pair<int, HalfInt>, PolyScalar> entries_;
};

/// Exact image of the generic vector v_j of `sector` under an enveloping
/// element: letters compose right-to-left, the coefficient of each rule
/// evaluated at the accumulated symbolic index. Throws on a missing rule or
/// a presentation mismatch.
SymbolicVector symbolic_act(const WeightModuleSpec& spec, const EnvElement& e, int sector);

std::string symbolic_vector_str(const WeightModuleSpec& spec, const SymbolicVector& v);

struct ModuleCheckReport {
    long cases = 0;
    std::vector<std::string> violations;
    bool passed() const { return violations.empty(); }
};

/// For every generator pair with doubled degrees in [lo2, hi2] and every
/// sector: image of xy - (-1)^{|x||y|} yx equals the image of the bracket
/// expansion, as polynomial identities in j and all symbolic parameters.
/// Passing covers every weight at once.
ModuleCheckReport axiom_check(const WeightModuleSpec& spec, int lo2, int hi2);

// Sign-convention pinning. Axes (skipped when they act trivially):
//   flip-gy    negate odd-family rules whose source sector is named "y"
//   flip-gg    negate the algebra's odd-odd brackets
//   flip-lg    negate the algebra's even-odd brackets
//   flip-even  negate every non-central even-family rule
// All subsets of the active axes are tried; every passing subset is reported.
// The pinned choice prefers module-side-only twists, then fewer flips, then
// lexicographic order.
struct PinReport {
    std::vector<std::string> passing;  // canonical subset names, e.g. "flip-gy"
    std::string pinned;
    bool unique = false;
    std::vector<std::string> notes;
    bool any_pass() const { return !passing.empty(); }
};

std::pair<WeightModuleSpec, PinReport> pin_sign_convention(const WeightModuleSpec& spec, int lo2, int hi2);

// Annihilation scan of the alternating binomial operators on a module.
struct OmegaScanResult {
    bool annihilates = false;
    long grid_cases = 0;
    std::vector<std::string> grid_failures;
    /// Full-symbolic residual per sector (canonical polynomial text in
    /// i-free variables j, k, s and params); "0" rows are omitted.
    std::vector<std::pair<std::string, std::string>> residuals;
};

/// Composed two-letter coefficient c(i) of the order-m operator on `sector`:
/// polynomial in i, j, k (first index), s and the spec's parameters. Zero when
/// the sector chain hits an identically-zero rule.
PolyScalar omega_coefficient_poly(const WeightModuleSpec& spec, OmegaKind kind, int sector);

/// Grid-first scan (first/s over doubled [grid_lo2, grid_hi2] on their
/// lattices, j symbolic), then a full-symbolic confirmation where k, s are
/// polynomial variables. annihilates is true only if both agree on zero.
OmegaScanResult omega_scan(const WeightModuleSpec& spec, OmegaKind kind, long m, int grid_lo2 = -8,
                           int grid_hi2 = 8);

/// Smallest m <= max_m whose operators annihilate every sector; nullopt if none.
std::optional<long> omega_min_m(const WeightModuleSpec& spec, OmegaKind kind, long max_m);

/// True iff every odd-family action rule is identically zero.
bool g_trivial(const WeightModuleSpec& spec);

// Finite truncation of a fully specialized module: basis vectors are
// (sector, index) with doubled index in [lo2, hi2] on the sector's lattice.
class WindowModule {
  public:
    /// Throws unless every parameter of spec is specialized.
    WindowModule(WeightModuleSpec spec, int lo2, int hi2);

    const WeightModuleSpec& spec() const { return spec_; }
    int lo2() const { return lo2_; }
    int hi2() const { return hi2_; }
    const std::vector<std::pair<int, HalfInt>>& basis() const { return basis_; }
    std::optional<std::size_t> basis_index(int sector, HalfInt index) const;
    std::string basis_str(std::size_t id) const;

    /// g applied to basis vector id: (target id, coefficient), nullopt when the
    /// coefficient vanishes, marker `escapes` when the target leaves the window.
    struct Image {
        bool escapes = false;
        std::size_t target = 0;
        Rational coeff;
    };
    std::optional<Image> act(GeneratorRef g, std::size_t id) const;

  private:
    WeightModuleSpec spec_;
    int lo2_, hi2_;
    std::vector<std::pair<int, HalfInt>> basis_;
    std::map<std::pair<int, HalfInt>, std::size_t> lookup_;
};

struct SubmoduleWitness {
    std::vector<std::size_t> support;  // basis ids of the invariant coordinate subspace
    std::string description;
};

/// Witness generation, one-sided by design: for each basis vector in the
/// margin-eroded inner window, the closure of its images under all generators
/// with doubled degree in [-margin2, margin2] is computed by reachability
/// (each image is a multiple of one basis vector). Closures that miss part of
/// the inner window are reported as non-simplicity witnesses; finding none is
/// NOT a proof of simplicity. Throws when the window cannot fit the margin.
std::vector<SubmoduleWitness> submodule_scan(const WindowModule& wm, int margin2 = 4);

}  // namespace orw
