// Backtrack searches over a stabilizer chain: centralizers, transporters,
// normalizers, conjugacy tests, centers, Sylow subgroups, p-cores.
#pragma once

#include <optional>

#include "ff/permgroup.hpp"

namespace ff {

// Elements g of G with x_i^g = y_i for every pair; the pair lists must have
// equal length. Used for centralizers (x = y) and conjugacy transport.
std::optional<Permutation> intertwiner(const PermGroup& G, const std::vector<Permutation>& xs,
                                       const std::vector<Permutation>& ys);

PermGroup centralizer(const PermGroup& G, const Permutation& x);

// C_G(H) for H given by generators.
PermGroup centralizer_of_group(const PermGroup& G, const std::vector<Permutation>& hgens);

PermGroup center(const PermGroup& G);

// Some g in G with x^g = y, if any.
std::optional<Permutation> transporter(const PermGroup& G, const Permutation& x,
                                       const Permutation& y);

bool are_conjugate(const PermGroup& G, const Permutation& x, const Permutation& y);

// N_G(H). H must either be cyclic or have at most `element_cap` elements
// (the general case walks the orbit of H under conjugation).
PermGroup normalizer(const PermGroup& G, const PermGroup& H,
                     std::uint64_t element_cap = 1u << 14);

// Some g in G with H^g = K, if any (H, K of equal small order).
std::optional<Permutation> subgroup_transporter(const PermGroup& G, const PermGroup& H,
                                                const PermGroup& K,
                                                std::uint64_t element_cap = 1u << 14);

bool are_conjugate_subgroups(const PermGroup& G, const PermGroup& H, const PermGroup& K);

// A Sylow p-subgroup, deterministic for a fixed seed.
PermGroup sylow(const PermGroup& G, std::uint64_t p, std::uint64_t seed = 20260824);

// Largest normal p-subgroup O_p(G).
PermGroup p_core(const PermGroup& G, std::uint64_t p, std::uint64_t seed = 20260824);

// Intersection of two subgroups; enumerates the smaller one, which must have
// at most `element_cap` elements.
PermGroup intersection(const PermGroup& A, const PermGroup& B,
                       std::uint64_t element_cap = 1u << 14);

// p-part of n.
BigInt p_part(const BigInt& n, std::uint64_t p);

} // namespace ff
