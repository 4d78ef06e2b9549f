// The fusion system F_S(G) of a finite group at a prime: morphism sets,
// centric / fully normalized / essential subgroup classes, Z-hat, Aut(F) and
// Out(F), fusion control, the kappa-bar comparison map, and F-normality.
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ff/plattice.hpp"

namespace ff {

struct FusionOptions {
    // |S| cap for full subgroup-class enumeration; larger S gets an element
    // table but no class list (ops that need classes then throw).
    std::size_t max_lattice = 512;
    // enumerate only elementary abelian classes (enough for z_hat)
    bool elementary_only = false;
    // |S| cap for the element table itself
    std::size_t max_table = 4096;
};

// F_S(G) for S a fixed Sylow p-subgroup of G (chosen deterministically).
// Built once; read-only afterwards.
class FusionSystem {
public:
    static FusionSystem build(const PermGroup& g, int p, const FusionOptions& opt = {});

    const PermGroup& group() const { return g_; }
    const PermGroup& sylow() const { return s_; }
    int prime() const { return p_; }
    const SmallGroup& table() const { return *table_; }
    bool classes_enumerated() const { return classes_enumerated_; }
    // S-conjugacy classes of subgroups of S (all, or elementary abelian only
    // when built with elementary_only); throws if not enumerated.
    const std::vector<SubgroupClass>& classes() const;
    // class members as a PermGroup
    PermGroup subgroup(const std::vector<int>& elem_indices) const;
    // greedy lexicographically-least generating sequence for a subgroup
    std::vector<int> generating_sequence(const std::vector<int>& elem_indices) const;

private:
    PermGroup g_;
    PermGroup s_;
    int p_ = 2;
    std::shared_ptr<const SmallGroup> table_;
    std::vector<SubgroupClass> classes_;
    bool classes_enumerated_ = false;
};

// A morphism P -> Q of F_S(G): conjugation by `witness` restricted to P,
// recorded by its values on a fixed generating sequence of P.  Two morphisms
// are equal iff their image tuples agree.
struct FusionMorphism {
    std::vector<Permutation> source_gens;
    std::vector<Permutation> images;
    Permutation witness;
};

struct HomOptions {
    // cap on the conjugation orbit of the generating tuple
    std::size_t max_orbit = 1u << 21;
};

// All morphisms P -> Q in F_S(G), one per distinct induced map, in a
// deterministic order.  P and Q must be subgroups of S.
std::vector<FusionMorphism> hom_f(const FusionSystem& f, const PermGroup& p_sub,
                                  const PermGroup& q_sub, const HomOptions& opt = {});

// |Z(P)| equals the p-part of |C_G(P)|.
bool is_p_centric(const FusionSystem& f, const PermGroup& p_sub);

// |N_S(P)| equals the p-part of |N_G(P)|.
bool is_fully_normalized(const FusionSystem& f, const PermGroup& p_sub);

// Out_G(P) = N_G(P) / (P * C_G(P)) as a permutation group on the cosets.
PermGroup out_g(const FusionSystem& f, const PermGroup& p_sub);

struct StronglyEmbeddedOptions {
    std::uint64_t max_sylow_elements = 1u << 14;
    std::size_t max_vertices = 1u << 12;
};

// Whether H has a strongly p-embedded subgroup: the graph on the Sylow
// p-subgroups of H joining two when they intersect nontrivially is
// disconnected.  False when p does not divide |H|.
bool has_strongly_p_embedded(const PermGroup& h, int p,
                             const StronglyEmbeddedOptions& opt = {});

struct EssentialClass {
    int class_index = -1;  // into FusionSystem::classes()
    BigInt out_order;      // |Out_G(P)|
};

// Classes whose representative is fully normalized, p-centric, and has
// Out_G(P) with a strongly p-embedded subgroup.
std::vector<EssentialClass> essential_classes(const FusionSystem& f);

struct ZhatMember {
    int class_index = -1;   // into FusionSystem::classes()
    BigInt aut_order;       // |Aut_G(W)|
    PermGroup aut_image;    // Aut_G(W) acting on the elements of W
};

// Fully normalized elementary abelian W, up to S-conjugacy, with
// W = Omega_1(Z(C_S(W))) and Aut_G(W) having a strongly p-embedded subgroup.
std::vector<ZhatMember> z_hat(const FusionSystem& f);

struct FusionAutGroup {
    PGroupAutGroup aut_s;   // Aut(S) on element indices of the table
    PermGroup aut_g_s;      // Aut_G(S) = image of N_G(S), subgroup of aut_s.perm
    PermGroup aut_f;        // fusion-preserving automorphisms
    BigInt out_f_order;     // |Aut(F)| / |Aut_G(S)|
};

struct AutFOptions {
    HomOptions hom;
    std::size_t max_aut_order = 1u << 22;
    std::size_t max_coset_index = 1u << 16;
};

// Aut(F) as the subgroup of Aut(S) whose members carry every morphism of
// F_S(G) to a morphism; computed coset-by-coset over Aut_G(S).
FusionAutGroup aut_f(const FusionSystem& f, const AutFOptions& opt = {});

// Whether H (with S <= H <= G) induces every morphism of F_S(G): morphism
// counts of F_S(H) and F_S(G) agree on every class representative.
bool controls_fusion(const FusionSystem& f, const PermGroup& h, const HomOptions& opt = {});

struct KappaBarReport {
    BigInt out_g_order;    // |Ghat / G|
    BigInt out_f_order;    // |Out(F)|
    BigInt image_order;    // |image of kappa-bar|
    BigInt kernel_order;   // out_g_order / image_order
    std::string verdict;   // "isomorphism", "injective-not-surjective",
                           // "kernel-nontrivial"
};

// The comparison map Out(Ghat/G ~ Out(G)) -> Out(F_S(G)): each outer coset
// representative is adjusted by an inner element to normalize S, then read
// as an automorphism of S.  G must be normal in ghat of the same degree.
KappaBarReport kappa_bar(const PermGroup& g, const PermGroup& ghat, int p,
                         const FusionOptions& fopt = {}, const AutFOptions& aopt = {});

struct KappaInjCriteria {
    // outer involutions centralizing the chosen Sylow subgroup (criterion:
    // none exist iff no outer involution of order 2 centralizes any Sylow
    // p-subgroup of G, up to conjugacy)
    std::vector<Permutation> outer_involutions_centralizing_s;
    // classes Q normal in S where |Out_Ghat(Q)| > |Out_G(Q)|, as
    // (class_index, |Out_Ghat(Q)|, |Out_G(Q)|)
    struct Growth {
        int class_index = -1;
        BigInt out_ghat;
        BigInt out_g;
    };
    std::vector<Growth> normal_out_growth;
};

KappaInjCriteria kappa_inj_criteria(const FusionSystem& f, const PermGroup& ghat);

// Q is normal in F: Q <= S is strongly closed and every morphism P -> P'
// extends to PQ -> P'Q carrying Q to itself.
bool normal_in_f(const FusionSystem& f, const PermGroup& q_sub, const HomOptions& opt = {});

struct ConstrainedReport {
    bool constrained = false;
    int witness_class = -1;  // a class with Q normal in F and C_S(Q) <= Q
};

// F is constrained: some F-normal Q is self-centralizing in S.
ConstrainedReport is_constrained(const FusionSystem& f, const HomOptions& opt = {});

// Conjugacy-class labels for element fingerprinting, as read from a catalog.
struct ClassLabel {
    std::string name;                 // e.g. "2a"
    std::vector<int> cycle_type;      // cycle lengths, ascending, with fixed points
    BigInt centralizer_order;
};

struct ClassLabeling {
    std::vector<ClassLabel> labels;
};

// Multiset of class labels over the nonidentity elements of elementary
// abelian W, rendered "2a^r" when pure of rank r and e.g. "2a_1b_2" when
// mixed.  Throws when an element matches no label or more than one.
std::string abelian_type(const FusionSystem& f, const PermGroup& w,
                         const ClassLabeling& labeling);

} // namespace ff
