// Normal closures, derived subgroups, random elements.
#include "ff/groupops.hpp"

namespace ff {

PermGroup normal_closure(const PermGroup& G, const std::vector<Permutation>& seeds) {
    std::size_t n = G.degree();
    std::vector<Permutation> hgens;
    for (const Permutation& s : seeds)
        if (!s.is_identity()) hgens.push_back(s);
    PermGroup H = PermGroup::from_generators(n, hgens);
    std::size_t head = 0;
    while (head < hgens.size()) {
        Permutation h = hgens[head++];
        for (const Permutation& g : G.generators()) {
            Permutation c = h.conjugated_by(g);
            if (!H.contains(c)) {
                hgens.push_back(c);
                H = PermGroup::from_generators(n, hgens);
            }
        }
    }
    return H;
}

PermGroup derived_subgroup(const PermGroup& G) {
    const auto& gens = G.generators();
    std::vector<Permutation> comms;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            comms.push_back(commutator(gens[i], gens[j]));
    return normal_closure(G, comms);
}

Permutation random_element(const PermGroup& G, std::mt19937_64& rng) {
    Permutation g = Permutation::identity(G.degree());
    for (std::size_t lvl = G.chain_length(); lvl-- > 0;) {
        const auto& orb = G.fundamental_orbit(lvl);
        std::uniform_int_distribution<std::size_t> pick(0, orb.size() - 1);
        g = g * G.transversal_element(lvl, orb[pick(rng)]);
    }
    return g;
}

std::vector<Permutation> find_small_generating_set(const PermGroup& G, const BigInt& target,
                                                   std::size_t count, std::uint64_t seed,
                                                   std::size_t tries) {
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < tries; ++t) {
        std::vector<Permutation> cand;
        for (std::size_t i = 0; i < count; ++i) cand.push_back(random_element(G, rng));
        PermGroup H = PermGroup::from_generators(G.degree(), cand);
        if (H.order() == target) return cand;
    }
    return {};
}

CosetAction::CosetAction(const PermGroup& G, const PermGroup& H, std::size_t max_index)
    : h_(H) {
    if (G.degree() != H.degree()) throw std::invalid_argument("coset_action: degree mismatch");
    for (const Permutation& g : H.generators()) {
        if (!G.contains(g)) throw std::invalid_argument("coset_action: H is not a subgroup of G");
    }
    // points are limited by the width of Point
    max_index = std::min<std::size_t>(max_index, 65535);
    Permutation e = h_.coset_canonical(Permutation::identity(G.degree()));
    where_.emplace(e, 0);
    reps_.push_back(std::move(e));
    for (std::size_t head = 0; head < reps_.size(); ++head) {
        for (const Permutation& g : G.generators()) {
            Permutation t = h_.coset_canonical(reps_[head] * g);
            if (!where_.contains(t)) {
                if (reps_.size() >= max_index) throw std::overflow_error("coset_action: index bound exceeded");
                where_.emplace(t, static_cast<int>(reps_.size()));
                reps_.push_back(std::move(t));
            }
        }
    }
    const std::size_t n = reps_.size();
    for (const Permutation& g : G.generators()) {
        std::vector<Point> img(n);
        for (std::size_t i = 0; i < n; ++i) {
            img[i] = static_cast<Point>(where_.at(h_.coset_canonical(reps_[i] * g)));
        }
        gen_images_.emplace_back(std::move(img));
    }
    image_ = PermGroup::from_generators(n, gen_images_);
}

Permutation CosetAction::act(const Permutation& g) const {
    std::vector<Point> img(reps_.size());
    for (std::size_t i = 0; i < reps_.size(); ++i) {
        auto it = where_.find(h_.coset_canonical(reps_[i] * g));
        if (it == where_.end()) throw std::invalid_argument("coset_action: element not in G");
        img[i] = static_cast<Point>(it->second);
    }
    return Permutation(std::move(img));
}

} // namespace ff
