#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orw/halfint.hpp"
#include "orw/rational.hpp"

namespace orw {

enum class Parity { even, odd };

// Index lattice of a generator family: Z (offset 0) or Z + 1/2 (offset 1),
// as a residue on doubled indices.
struct IndexLattice {
    int twice_offset = 0;
    bool contains(HalfInt h) const { return ((h.doubled() % 2) + 2) % 2 == twice_offset; }
};

struct FamilySpec {
    std::string symbol;
    Parity parity = Parity::even;
    IndexLattice lattice;
    bool central = false;  // central families carry the single index 0
};

struct GeneratorRef {
    int family = 0;  // position in the presentation's family list
    HalfInt index;
    friend constexpr auto operator<=>(const GeneratorRef&, const GeneratorRef&) = default;
};

struct BracketTerm {
    Rational coeff;
    GeneratorRef target;
};

// Exact structure-constant expansion of one bracket: no zero coefficients,
// at most one term per target, sorted by target. Empty means zero.
struct BracketResult {
    std::vector<BracketTerm> terms;
    bool is_zero() const { return terms.empty(); }
};

BracketResult combine(const BracketResult& a, const BracketResult& b, const Rational& b_scale);

enum class CatalogId { vir, witt, orw, q, bms3, sw22, ns, custom };

// A presentation: generator families plus a bracket rule. Catalog entries keep
// each table's own sign conventions as entered; the Jacobi checker is the
// arbiter of whether a table is consistent.
class AlgebraPresentation {
  public:
    const std::string& name() const { return name_; }
    CatalogId id() const { return id_; }
    const std::vector<FamilySpec>& families() const { return families_; }
    const FamilySpec& family(int i) const { return families_.at(static_cast<std::size_t>(i)); }
    const std::map<std::string, Rational>& params() const { return params_; }
    /// -1 when the symbol names no family.
    int family_index(const std::string& symbol) const;
    /// Table typos and unlisted-bracket assumptions recorded at build time.
    const std::vector<std::string>& notes() const { return notes_; }

    bool valid(GeneratorRef g) const;
    Parity parity(GeneratorRef g) const { return family(g.family).parity; }
    bool is_central(GeneratorRef g) const { return family(g.family).central; }
    HalfInt degree(GeneratorRef g) const { return g.index; }
    /// Koszul sign (-1)^{|x||y|} as +1/-1.
    int koszul_sign(GeneratorRef x, GeneratorRef y) const;

    BracketResult bracket(GeneratorRef x, GeneratorRef y) const;

    /// PBW letter order: central families first, then declaration order, then
    /// index ascending.
    bool letter_less(GeneratorRef a, GeneratorRef b) const;
    bool letter_equal(GeneratorRef a, GeneratorRef b) const { return a == b; }

    std::string gen_str(GeneratorRef g) const;
    /// Parses "Fam[index]" against this presentation's families.
    std::optional<GeneratorRef> gen_from_string(const std::string& text) const;

    /// Copy with the (odd,odd) and/or (even,odd) bracket results negated.
    /// Used by sign-convention pinning; the copy's name records the twist.
    AlgebraPresentation with_sign_twists(bool flip_odd_odd, bool flip_even_odd) const;
    bool odd_odd_flipped() const { return flip_odd_odd_; }
    bool even_odd_flipped() const { return flip_even_odd_; }

    friend AlgebraPresentation catalog_build(const std::string& name,
                                             const std::map<std::string, Rational>& params);
    friend AlgebraPresentation custom_build(const std::string& name, std::vector<FamilySpec> families,
                                            std::vector<std::pair<std::pair<GeneratorRef, GeneratorRef>, std::vector<BracketTerm>>> table);

  private:
    BracketResult bracket_raw(GeneratorRef x, GeneratorRef y) const;

    CatalogId id_ = CatalogId::custom;
    std::string name_;
    std::vector<FamilySpec> families_;
    std::map<std::string, Rational> params_;
    std::vector<std::string> notes_;
    std::vector<int> pbw_rank_;
    bool flip_odd_odd_ = false;
    bool flip_even_odd_ = false;
    // custom tables: literal lookup, both orientations stored by the caller
    std::map<std::pair<GeneratorRef, GeneratorRef>, std::vector<BracketTerm>> table_;
};

/// Builds a catalog algebra. name is one of vir, witt, orw, q, bms3, sw22, ns;
/// orw takes params lambda (any rational) and epsilon (0 or 1/2).
AlgebraPresentation catalog_build(const std::string& name, const std::map<std::string, Rational>& params = {});

/// Explicit finite structure-constant table; entries are looked up literally
/// (missing pairs bracket to zero), so corrupted tables stay corrupted.
AlgebraPresentation custom_build(const std::string& name, std::vector<FamilySpec> families,
                                 std::vector<std::pair<std::pair<GeneratorRef, GeneratorRef>, std::vector<BracketTerm>>> table);

/// All valid generators with doubled index in [lo2, hi2], in deterministic
/// (family, index) order. Central generators participate iff 0 is in range.
std::vector<GeneratorRef> generators_in_window(const AlgebraPresentation& algebra, int lo2, int hi2);

struct AlgebraCheckReport {
    long cases = 0;
    std::vector<std::string> violations;
    bool passed() const { return violations.empty(); }
};

/// bracket(x,y) + (-1)^{|x||y|} bracket(y,x) = 0 over all window pairs.
AlgebraCheckReport check_antisymmetry(const AlgebraPresentation& algebra, int lo2, int hi2);

/// Graded Jacobi [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|}[y,[x,z]] over all
/// ordered window triples; violations carry the triple and the residual.
AlgebraCheckReport check_super_jacobi(const AlgebraPresentation& algebra, int lo2, int hi2);

std::string bracket_result_str(const AlgebraPresentation& algebra, const BracketResult& r);

}  // namespace orw
