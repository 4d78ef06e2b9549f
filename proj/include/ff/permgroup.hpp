// Permutation groups with a deterministic Schreier-Sims stabilizer chain:
// base/strong-generators, membership sifting, exact order, element access.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <memory>
#include <vector>

#include "ff/perm.hpp"

namespace ff {

using BigInt = boost::multiprecision::cpp_int;

class PermGroup {
public:
    // Builds a stabilizer chain. Deterministic for a fixed generator sequence.
    // Base points are drawn from preferred_base first (backtrack searches pass
    // an ordering adapted to their constraints), then smallest-moved.
    static PermGroup from_generators(std::size_t degree, std::vector<Permutation> gens,
                                     const std::vector<Point>& preferred_base = {});
    static PermGroup trivial(std::size_t degree);

    PermGroup() = default;

    std::size_t degree() const;
    const std::vector<Permutation>& generators() const;
    const BigInt& order() const;
    std::uint64_t order_u64() const; // throws std::overflow_error if order > 2^64-1
    bool is_trivial() const { return order() == 1; }

    bool contains(const Permutation& g) const;
    bool is_subgroup_of(const PermGroup& other) const;
    bool same_group_as(const PermGroup& other) const;

    // Sifts g through the chain; returns the residue (identity iff g is a member,
    // given that g fixes every base point it reaches).
    Permutation sift(const Permutation& g) const;

    // Stabilizer-chain access.
    const std::vector<Point>& base() const;
    std::size_t chain_length() const;
    const std::vector<Point>& fundamental_orbit(std::size_t level) const;
    // u with base[level]^u = pt; pt must lie in the fundamental orbit.
    const Permutation& transversal_element(std::size_t level, Point pt) const;
    bool in_fundamental_orbit(std::size_t level, Point pt) const;
    const std::vector<Permutation>& level_generators(std::size_t level) const;

    // Group generated by the strong generators fixing base[0..level-1].
    PermGroup chain_stabilizer(std::size_t level) const;

    // Stabilizer of a point / setwise stabilizer of a block (Schreier generators,
    // then reduced).
    PermGroup point_stabilizer(Point p) const;

    // All elements in a deterministic order; throws std::length_error if the
    // order exceeds cap.
    std::vector<Permutation> elements(std::uint64_t cap = 1u << 22) const;

    // The canonical representative of the right coset (this)*x: the member
    // with lexicographically least base-image sequence. Equal for x, y iff
    // they lie in the same coset.
    Permutation coset_canonical(const Permutation& x) const;

    // Drops generators that do not enlarge the group; keeps the original order
    // of the survivors. Useful after Schreier-generator constructions.
    PermGroup reduced() const;

    bool is_pgroup(std::uint64_t p) const;
    bool is_abelian() const;

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

} // namespace ff
