// F_p representation checks: fixed spaces, (absolute) irreducibility,
// Hom/End spaces, first cohomology.  Vectors are rows; matrices act on the
// right, so matrix products follow the same left-to-right order as
// permutation products.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ff/permgroup.hpp"

namespace ff {

// Dense matrix over F_p, byte entries, row-major.
struct FpMat {
    int p = 2;
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> a;

    FpMat() = default;
    FpMat(int p_, int r, int c) : p(p_), rows(r), cols(c), a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0) {}
    static FpMat identity(int p_, int n);

    std::uint8_t& at(int i, int j) { return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(j)]; }
    std::uint8_t at(int i, int j) const { return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(j)]; }
    bool operator==(const FpMat& o) const = default;
};

FpMat fp_mul(const FpMat& x, const FpMat& y);
FpMat fp_add(const FpMat& x, const FpMat& y);
FpMat fp_sub(const FpMat& x, const FpMat& y);
FpMat fp_transpose(const FpMat& x);
int fp_rank(FpMat x);
// throws std::invalid_argument if singular
FpMat fp_inverse(const FpMat& x);
bool fp_invertible(const FpMat& x);
// rows spanning {v : v x = 0}
FpMat fp_left_nullspace(const FpMat& x);
// reduced row echelon form
FpMat fp_rref(FpMat x);

// A growing row space in echelon form; insert() returns true when the vector
// was independent of the rows so far.
class Echelon {
public:
    Echelon(int p, int cols) : p_(p), cols_(cols) {}
    bool insert(std::vector<std::uint8_t> v);
    int rank() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }
    bool contains(std::vector<std::uint8_t> v) const;
    FpMat basis() const;

private:
    int p_;
    int cols_;
    std::vector<std::vector<std::uint8_t>> rows_;
    std::vector<int> pivots_;
};

struct FpModule {
    int p = 2;
    int dim = 0;
    std::vector<FpMat> actors;          // one invertible dim x dim matrix per generator
    std::optional<PermGroup> group;      // generator list matches actors when present

    bool has_group() const { return group.has_value(); }
};

enum class ModuleSpec {
    natural,            // Q elementary abelian, acted on by conjugation
    frattini_quotient,  // Q/Phi(Q) (= Q/Z(Q) for extraspecial Q)
};

// The conjugation action of G's generators on Q (or Q/Phi(Q)) as matrices
// over F_p, p = the prime of Q.  Q must be a p-group normalized by G.
FpModule module_from_action(const PermGroup& g, const PermGroup& q,
                            ModuleSpec spec = ModuleSpec::natural);

// Verifies actor invertibility and random-word consistency against the
// attached permutation group (matrix words are identity whenever the
// permutation words are).  Throws std::logic_error on failure.
void validate_module(const FpModule& m, std::uint64_t seed = 1, int trials = 40);

// Basis (rows) of the joint fixed space of the listed actors (all if empty).
FpMat fixed_space(const FpModule& m, const std::vector<int>& actor_subset = {});

// Smallest invariant subspace containing the rows of seed, as an rref basis.
FpMat spin(const FpModule& m, const FpMat& seed);

struct IrreducibilityReport {
    bool irreducible = false;
    FpMat witness;  // basis of a proper nonzero invariant subspace when reducible
};

struct IrreducibilityOptions {
    // exhaustive seed scan as long as p^dim stays below this bound
    std::uint64_t exhaustive_bound = 1ull << 20;
    int random_seeds = 64;  // beyond the bound: random seeds + dual check
    std::uint64_t seed = 1;
};

IrreducibilityReport is_irreducible(const FpModule& m, const IrreducibilityOptions& opt = {});

// dim of {X : X A_g = A_g X for all g}
int end_algebra_dim(const FpModule& m);
bool is_absolutely_irreducible(const FpModule& m, const IrreducibilityOptions& opt = {});
// dim of {X : A_g X = X B_g for all g}; generator lists must correspond
int hom_space_dim(const FpModule& m, const FpModule& n);

struct H1Options {
    std::uint64_t max_group = 10000;
    std::size_t max_relators = 10000;
};

// dim H^1(G; V) for the attached group, by linear algebra over the cocycle
// conditions along a Cayley-graph spanning tree (every non-tree edge yields
// one verified relator).
int h1(const FpModule& m, const H1Options& opt = {});

struct DecompositionReport {
    bool holds = false;        // splits into absolutely irreducible, pairwise
                               // nonisomorphic summands
    std::string reason;
    std::vector<int> summand_dims;
};

// Checks whether the module is a direct sum of absolutely irreducible,
// pairwise nonisomorphic submodules (constructive: equivariant projections
// provide complements; pairwise Hom spaces must vanish).
DecompositionReport submodule_decomposition_check(const FpModule& m);
// Convenience: same check on the restriction to a subset of the actors.
DecompositionReport submodule_decomposition_check(const FpModule& m,
                                                  const std::vector<int>& actor_subset);

// The module on the subspace spanned by `basis` (rows, must be invariant),
// in the coordinates of that basis.
FpModule restrict_to_submodule(const FpModule& m, const FpMat& basis);

}  // namespace ff
