// Structure theory of a fixed p-group S: element table, subgroup classes up
// to S-conjugacy, Omega_1, second center, Thompson subgroup, extraspecial
// recognition, Aut(S).
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ff/permgroup.hpp"

namespace ff {

// A group small enough to hold as an explicit element table (|S| <= 2^10 in
// practice).  Elements are indexed 0..n-1 in lexicographic image order, so
// index 0 is the identity and the indexing is reproducible.
class SmallGroup {
public:
    static SmallGroup from_group(const PermGroup& g, std::size_t max_size = 4096);

    int size() const { return static_cast<int>(elems_.size()); }
    int degree() const { return degree_; }
    const Permutation& element(int i) const { return elems_[static_cast<std::size_t>(i)]; }
    // -1 when the permutation is not an element.
    int index_of(const Permutation& g) const;

    int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * elems_.size() + static_cast<std::size_t>(b)]; }
    int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
    // s^-1 x s
    int conj(int x, int s) const { return mul(mul(inv(s), x), s); }
    int power(int x, long long e) const;
    int order_of(int x) const { return order_[static_cast<std::size_t>(x)]; }

    // Smallest prime dividing |S|; equals p when S is a p-group.
    int prime() const;
    bool is_pgroup(int p) const;

    // --- subgroup arithmetic on sorted index vectors ---
    std::vector<int> full_set() const;
    std::vector<int> closure(std::vector<int> seed) const;
    std::vector<int> conjugate_set(const std::vector<int>& sub, int s) const;
    // {a in ambient : ax = xa for all x in sub}
    std::vector<int> centralizer_in(const std::vector<int>& ambient,
                                    const std::vector<int>& sub) const;
    // {a in ambient : a^-1 sub a = sub}
    std::vector<int> normalizer_in(const std::vector<int>& ambient,
                                   const std::vector<int>& sub) const;
    std::vector<int> center_of(const std::vector<int>& sub) const;
    std::vector<int> derived_of(const std::vector<int>& sub) const;
    // subgroup generated by elements of order dividing p in sub
    std::vector<int> omega1_of(const std::vector<int>& sub, int p) const;
    // Frattini subgroup of sub (p-group): closure of p-th powers and commutators
    std::vector<int> frattini_of(const std::vector<int>& sub, int p) const;
    bool is_abelian_set(const std::vector<int>& sub) const;
    bool is_elementary_abelian_set(const std::vector<int>& sub, int p) const;
    // preimage of Z(sub/normal) in sub; normal must be normal in sub
    std::vector<int> center_preimage(const std::vector<int>& sub,
                                     const std::vector<int>& normal) const;

    PermGroup to_group(const std::vector<int>& sub) const;
    std::vector<int> subgroup_indices(const PermGroup& h) const;

    // orders of the cyclic invariant factors, descending (abelian sub only)
    std::vector<BigInt> abelian_invariants(const std::vector<int>& sub, int p) const;

private:
    int degree_ = 1;
    std::vector<Permutation> elems_;
    std::vector<int> inv_;
    std::vector<int> order_;
    std::vector<int> mul_;
};

struct SubgroupClass {
    std::vector<int> rep;          // sorted element indices, lexicographically
                                   // least over the S-conjugacy class
    std::vector<int> normalizer;   // N_S(rep)
    std::uint64_t class_size = 1;  // = [S : N_S(rep)]
    bool is_elementary_abelian = false;
    int rank = 0;                  // meaningful when elementary abelian
};

struct SubgroupClassOptions {
    std::size_t max_group_size = 512;  // refuse larger S unless elementary_only
    bool elementary_only = false;      // enumerate elementary abelian classes only
    std::size_t max_classes = 1u << 22;
};

// One entry per S-conjugacy class of subgroups (or of elementary abelian
// subgroups in elementary_only mode), by cyclic extension layer by layer.
std::vector<SubgroupClass> subgroup_classes(const SmallGroup& s, int p,
                                            const SubgroupClassOptions& opt = {});

struct ExtraspecialInfo {
    bool is_extraspecial = false;
    int p = 0;
    int k = 0;              // |S| = p^(1+2k)
    // classification for |S| = p^3: odd p -> "p" or "p^2" exponent; p = 2 ->
    // "+" or "-" via the involution count.  Empty when not classified.
    std::string type;
    std::string name;       // e.g. "3^{1+2}_+", "2^{1+2}_-"; empty if none
};

// --- PermGroup-level wrappers (materialize the element table internally) ---
PermGroup omega1(const PermGroup& p_group);
PermGroup second_center(const PermGroup& s);
PermGroup thompson_subgroup(const PermGroup& s);
ExtraspecialInfo is_extraspecial(const PermGroup& s);

struct PGroupAutGroup {
    std::vector<int> gen_sequence;        // generating sequence of S (indices)
    std::vector<std::vector<int>> images; // one image tuple per Aut generator
    PermGroup perm;                       // Aut(S) acting on element indices
    BigInt order;
};

struct AutGroupOptions {
    std::size_t max_group_size = 512;
    std::size_t max_generators = 4;
    std::size_t max_aut_order = 1u << 22;
};

// Aut(S) by backtracking over images of a fixed generating sequence with
// fingerprint pruning; every candidate is verified on the full
// multiplication structure.
PGroupAutGroup aut_group(const SmallGroup& s, const AutGroupOptions& opt = {});

// The permutation of element indices induced by conjugation with g
// (an element of the normalizer of the underlying group).
Permutation conjugation_on_indices(const SmallGroup& s, const Permutation& g);

// Render the invariant-factor shape of an abelian group, e.g. "C4 x C2".
std::string abelian_shape(const std::vector<BigInt>& invariants);

}  // namespace ff
