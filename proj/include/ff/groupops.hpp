// Constructions on permutation groups that need only membership tests:
// normal closure, derived subgroup, random elements.
#pragma once

#include <random>
#include <unordered_map>

#include "ff/permgroup.hpp"

namespace ff {

// Smallest normal subgroup of G containing the seeds.
PermGroup normal_closure(const PermGroup& G, const std::vector<Permutation>& seeds);

PermGroup derived_subgroup(const PermGroup& G);

// Uniformly random element via the stabilizer chain (one transversal element
// per level).
Permutation random_element(const PermGroup& G, std::mt19937_64& rng);

// Searches for `count` elements generating a subgroup of the given order.
// Returns an empty vector if no attempt succeeds.
std::vector<Permutation> find_small_generating_set(const PermGroup& G, const BigInt& target,
                                                   std::size_t count, std::uint64_t seed,
                                                   std::size_t tries = 300);

// The action of G on the right cosets of H <= G, with enough data to map
// arbitrary elements of G through the homomorphism.
class CosetAction {
public:
    CosetAction(const PermGroup& G, const PermGroup& H, std::size_t max_index = 100000);

    int index() const { return static_cast<int>(reps_.size()); }
    const PermGroup& image() const { return image_; }
    // image of the i-th generator of G
    const std::vector<Permutation>& generator_images() const { return gen_images_; }
    // image of an arbitrary g in G
    Permutation act(const Permutation& g) const;
    // canonical representative of the i-th coset (index 0 = H itself)
    const Permutation& coset_rep(int i) const { return reps_[static_cast<std::size_t>(i)]; }

private:
    PermGroup h_;
    std::vector<Permutation> reps_;
    std::unordered_map<Permutation, int, PermHash> where_;
    std::vector<Permutation> gen_images_;
    PermGroup image_;
};

} // namespace ff
