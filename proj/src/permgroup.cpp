// Deterministic Schreier-Sims construction and stabilizer-chain queries.
#include "ff/permgroup.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_set>

namespace ff {

struct PermGroup::Impl {
    std::size_t degree = 0;
    std::vector<Permutation> gens; // input generators, identities removed
    std::vector<Point> pref;       // preferred base points, in order
    std::vector<Point> base;
    // Per level: strong generators fixing base[0..level-1], fundamental orbit in
    // BFS order, orbit position of each point (-1 if outside), transversal
    // element per orbit position (base[level]^u = orbit point).
    std::vector<std::vector<Permutation>> sgens;
    std::vector<std::vector<Point>> orbit;
    std::vector<std::vector<std::int32_t>> pos;
    std::vector<std::vector<Permutation>> trans;
    BigInt order = 1;

    void recompute_level(std::size_t k) {
        orbit[k].clear();
        pos[k].assign(degree, -1);
        trans[k].clear();
        Point b = base[k];
        orbit[k].push_back(b);
        pos[k][b] = 0;
        trans[k].push_back(Permutation::identity(degree));
        for (std::size_t head = 0; head < orbit[k].size(); ++head) {
            Point p = orbit[k][head];
            for (const Permutation& g : sgens[k]) {
                Point q = g[p];
                if (pos[k][q] < 0) {
                    pos[k][q] = static_cast<std::int32_t>(orbit[k].size());
                    orbit[k].push_back(q);
                    trans[k].push_back(trans[k][head] * g);
                }
            }
        }
    }

    // Returns (residue, first level whose base point image fell outside the
    // fundamental orbit; base.size() if the whole chain was traversed).
    std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from) const {
        for (std::size_t i = from; i < base.size(); ++i) {
            Point beta = g[base[i]];
            std::int32_t j = pos[i][beta];
            if (j < 0) return {std::move(g), i};
            g = g * trans[i][static_cast<std::size_t>(j)].inverse();
        }
        return {std::move(g), base.size()};
    }

    void add_level(Point b) {
        base.push_back(b);
        sgens.emplace_back();
        orbit.emplace_back();
        pos.emplace_back();
        trans.emplace_back();
    }

    Point pick_base_point(const Permutation& g) const {
        for (Point b : pref)
            if (g[b] != b) return b;
        return static_cast<Point>(g.smallest_moved());
    }

    void schreier_sims() {
        for (const Permutation& g : gens) {
            bool fixes_all = true;
            for (Point b : base)
                if (g[b] != b) { fixes_all = false; break; }
            if (fixes_all) add_level(pick_base_point(g));
        }
        for (std::size_t i = 0; i < base.size(); ++i)
            for (const Permutation& g : gens) {
                bool fixes = true;
                for (std::size_t l = 0; l < i; ++l)
                    if (g[base[l]] != base[l]) { fixes = false; break; }
                if (fixes) sgens[i].push_back(g);
            }
        if (base.empty()) return;

        std::size_t k = base.size() - 1;
        while (true) {
            recompute_level(k);
            bool modified = false;
            for (std::size_t head = 0; head < orbit[k].size() && !modified; ++head) {
                for (const Permutation& g : sgens[k]) {
                    Point img = g[orbit[k][head]];
                    Permutation schreier =
                        trans[k][head] * g * trans[k][static_cast<std::size_t>(pos[k][img])].inverse();
                    if (schreier.is_identity()) continue;
                    auto [res, lvl] = strip(std::move(schreier), k + 1);
                    if (res.is_identity() && lvl == base.size()) continue;
                    if (lvl == base.size())
                        add_level(pick_base_point(res));
                    for (std::size_t l = k + 1; l <= lvl; ++l) sgens[l].push_back(res);
                    for (std::size_t l = k + 1; l <= lvl; ++l) recompute_level(l);
                    k = lvl;
                    modified = true;
                    break;
                }
            }
            if (modified) continue;
            if (k == 0) break;
            --k;
        }
        order = 1;
        for (std::size_t i = 0; i < base.size(); ++i) order *= orbit[i].size();
    }
};

PermGroup PermGroup::from_generators(std::size_t degree, std::vector<Permutation> gens,
                                     const std::vector<Point>& preferred_base) {
    auto impl = std::make_shared<Impl>();
    impl->degree = degree;
    impl->pref = preferred_base;
    for (auto& g : gens) {
        if (g.degree() != degree)
            throw std::invalid_argument("generator degree mismatch");
        if (!g.is_identity()) impl->gens.push_back(std::move(g));
    }
    impl->schreier_sims();
    PermGroup G;
    G.impl_ = std::move(impl);
    return G;
}

PermGroup PermGroup::trivial(std::size_t degree) {
    return from_generators(degree, {});
}

std::size_t PermGroup::degree() const { return impl_->degree; }
const std::vector<Permutation>& PermGroup::generators() const { return impl_->gens; }
const BigInt& PermGroup::order() const { return impl_->order; }

std::uint64_t PermGroup::order_u64() const {
    if (impl_->order > BigInt(std::numeric_limits<std::uint64_t>::max()))
        throw std::overflow_error("group order exceeds 64 bits");
    return impl_->order.convert_to<std::uint64_t>();
}

bool PermGroup::contains(const Permutation& g) const {
    if (g.degree() != impl_->degree) return false;
    auto [res, lvl] = impl_->strip(g, 0);
    return lvl == impl_->base.size() && res.is_identity();
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
    for (const Permutation& g : impl_->gens)
        if (!other.contains(g)) return false;
    return true;
}

bool PermGroup::same_group_as(const PermGroup& other) const {
    return order() == other.order() && is_subgroup_of(other);
}

Permutation PermGroup::sift(const Permutation& g) const {
    return impl_->strip(g, 0).first;
}

const std::vector<Point>& PermGroup::base() const { return impl_->base; }
std::size_t PermGroup::chain_length() const { return impl_->base.size(); }

const std::vector<Point>& PermGroup::fundamental_orbit(std::size_t level) const {
    return impl_->orbit[level];
}

const Permutation& PermGroup::transversal_element(std::size_t level, Point pt) const {
    std::int32_t j = impl_->pos[level][pt];
    if (j < 0) throw std::out_of_range("point outside fundamental orbit");
    return impl_->trans[level][static_cast<std::size_t>(j)];
}

bool PermGroup::in_fundamental_orbit(std::size_t level, Point pt) const {
    return impl_->pos[level][pt] >= 0;
}

const std::vector<Permutation>& PermGroup::level_generators(std::size_t level) const {
    return impl_->sgens[level];
}

PermGroup PermGroup::chain_stabilizer(std::size_t level) const {
    if (level >= impl_->base.size()) return trivial(impl_->degree);
    return from_generators(impl_->degree, impl_->sgens[level]);
}

PermGroup PermGroup::point_stabilizer(Point p) const {
    // Schreier generators for the stabilizer, from the orbit of p.
    std::size_t n = impl_->degree;
    std::vector<std::int32_t> pos(n, -1);
    std::vector<Point> orb{p};
    std::vector<Permutation> witness{Permutation::identity(n)};
    pos[p] = 0;
    std::vector<Permutation> sg;
    std::unordered_set<Permutation, PermHash> seen;
    for (std::size_t head = 0; head < orb.size(); ++head) {
        for (const Permutation& g : impl_->gens) {
            Point q = g[orb[head]];
            if (pos[q] < 0) {
                pos[q] = static_cast<std::int32_t>(orb.size());
                orb.push_back(q);
                witness.push_back(witness[head] * g);
            } else {
                Permutation s = witness[head] * g * witness[static_cast<std::size_t>(pos[q])].inverse();
                if (!s.is_identity() && seen.insert(s).second) sg.push_back(std::move(s));
            }
        }
    }
    return from_generators(n, std::move(sg)).reduced();
}

std::vector<Permutation> PermGroup::elements(std::uint64_t cap) const {
    if (order() > BigInt(cap)) throw std::length_error("group too large to list elements");
    std::vector<Permutation> out{Permutation::identity(impl_->degree)};
    for (std::size_t lvl = impl_->base.size(); lvl-- > 0;) {
        std::vector<Permutation> next;
        next.reserve(out.size() * impl_->trans[lvl].size());
        for (const Permutation& e : out)
            for (const Permutation& t : impl_->trans[lvl]) next.push_back(e * t);
        out = std::move(next);
    }
    return out;
}

PermGroup PermGroup::reduced() const {
    std::vector<Permutation> keep;
    PermGroup cur = trivial(impl_->degree);
    for (const Permutation& g : impl_->gens) {
        if (!cur.contains(g)) {
            keep.push_back(g);
            cur = from_generators(impl_->degree, keep);
            if (cur.order() == order()) break;
        }
    }
    return cur.order() == order() ? cur : *this;
}

Permutation PermGroup::coset_canonical(const Permutation& x) const {
    if (x.degree() != impl_->degree) throw std::invalid_argument("coset_canonical: degree mismatch");
    Permutation cur = x;
    for (std::size_t i = 0; i < impl_->base.size(); ++i) {
        Point src = impl_->orbit[i][0];
        Point best = cur[src];
        for (Point d : impl_->orbit[i]) {
            if (cur[d] < best) {
                best = cur[d];
                src = d;
            }
        }
        cur = impl_->trans[i][static_cast<std::size_t>(impl_->pos[i][src])] * cur;
    }
    return cur;
}

bool PermGroup::is_pgroup(std::uint64_t p) const {
    BigInt o = order();
    while (o % p == 0) o /= p;
    return o == 1;
}

bool PermGroup::is_abelian() const {
    for (std::size_t i = 0; i < impl_->gens.size(); ++i)
        for (std::size_t j = i + 1; j < impl_->gens.size(); ++j)
            if (!(impl_->gens[i] * impl_->gens[j] == impl_->gens[j] * impl_->gens[i]))
                return false;
    return true;
}

} // namespace ff
