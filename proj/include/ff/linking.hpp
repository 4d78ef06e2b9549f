// Linking-system quantities on top of a fusion system: Aut_L(P) orders via
// the p'-complement of C_G(P), strict p-constraint, the Out(H) bound from the
// exact sequence 1 -> H^1(H*; Z(Q)) -> Out(H) -> N_{Out(Q)}(H*)/H*, and the
// Ker(mu) / tameness verdicts.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ff/fusion.hpp"
#include "ff/modrep.hpp"
#include "ff/permgroup.hpp"

namespace ff {

// For p-centric P, C_G(P) = Z(P) x C' with C' the unique p'-complement;
// |Aut_L(P)| = |N_G(P)| / |C'|.
struct LinkingLocalData {
    PermGroup p_sub;
    PermGroup c_prime;
    std::uint64_t aut_l_order = 0;
};

// Throws std::invalid_argument when P is not p-centric; verifies
// |Z(P)| * |C'| = |C_G(P)| and Z(P) meet C' = 1.
LinkingLocalData linking_local(const FusionSystem& f, const PermGroup& p_sub);

// C_H(O_p(H)) <= O_p(H).
bool strictly_p_constrained(const PermGroup& h, int p);

// GL_rank(p) as a permutation group on the p^rank - 1 nonzero row vectors
// (vector (v_0..v_{r-1}) at index sum v_i p^i - 1).  rank <= 4.
PermGroup gl_as_perm_group(int p, int rank);

// The permutation of nonzero row vectors induced by an invertible matrix.
Permutation matrix_as_perm(const FpMat& m);

// |N_{Out(Q)}(H*)/H*| where H* is generated by the given matrices acting on
// Q itself (Q elementary abelian of rank <= 4) or on Q/Z(Q) (Q extraspecial
// of order p^3, where Out(Q) is taken through its image GL_2(p)).
std::uint64_t normalizer_in_out(const PermGroup& q, const std::vector<FpMat>& h_star_action);

struct OutBoundReport {
    int h1_dim = 0;
    std::uint64_t normalizer_quotient_order = 0;
    std::uint64_t out_h_upper_bound = 0;  // p^h1_dim * normalizer_quotient_order
    std::string notes;
};

// Requires Q normal in H with C_H(Q) <= Q, and Q elementary abelian or
// extraspecial of order p^3; throws std::invalid_argument otherwise.
OutBoundReport out_bound_exact_sequence(const PermGroup& h, const PermGroup& q);

struct KerMuReport {
    std::string verdict;  // trivial_by_empty | trivial_by_singleton | inconclusive
    std::string note;     // which hypothesis held or failed
};

// Criterion on Z-hat(F): empty set, or a single member together with
// |Z(S)| = 2 or Aut_F(Omega_1(Z(S))) = 1.  Stated for p = 2; odd p is
// reported inconclusive.
KerMuReport ker_mu_verdict(const FusionSystem& f);

struct TamenessReport {
    std::string verdict;
    std::string statement;
};

// Combines the kappa-bar comparison with the Ker(mu) verdict: at odd p, mu is
// an isomorphism, so the kappa-bar verdict stands; at p = 2 a tameness claim
// additionally needs Ker(mu) trivial.
TamenessReport tameness_verdict(const KappaBarReport& kb, int p,
                                const std::optional<KerMuReport>& ker_mu);

}  // namespace ff
