// Backtrack searches over stabilizer chains.
#include "ff/search.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "ff/groupops.hpp"

namespace ff {

BigInt p_part(const BigInt& n, std::uint64_t p) {
    BigInt r = 1, m = n;
    while (m % p == 0) {
        m /= p;
        r *= p;
    }
    return r;
}

namespace {

// Base ordering adapted to the constraint permutations: points in long cycles
// first, so that one image assignment propagates far.
std::vector<Point> adapted_base(std::size_t n, const std::vector<Permutation>& xs) {
    std::vector<std::uint32_t> weight(n, 0);
    for (const Permutation& x : xs) {
        std::vector<bool> seen(n, false);
        for (std::size_t i = 0; i < n; ++i) {
            if (seen[i]) continue;
            std::vector<Point> cyc;
            for (std::size_t j = i; !seen[j]; j = x[static_cast<Point>(j)]) {
                seen[j] = true;
                cyc.push_back(static_cast<Point>(j));
            }
            for (Point ppt : cyc) weight[ppt] += static_cast<std::uint32_t>(cyc.size());
        }
    }
    std::vector<Point> order(n);
    std::iota(order.begin(), order.end(), Point{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Point a, Point b) { return weight[a] > weight[b]; });
    return order;
}

// Searches the chain of G for elements g with x_i^g = y_i. In subgroup mode
// the search skips elements of the known subgroup K and prunes the first base
// image to K-orbit minima (every right coset of K contains such an element).
struct IntertwinerSearch {
    const PermGroup& G;
    const std::vector<Permutation>& xs;
    const std::vector<Permutation>& ys;
    std::size_t n;
    std::vector<std::int32_t> pimg, ppre;
    std::vector<Point> trail;
    const PermGroup* K = nullptr;
    std::vector<Point> korbmin; // per point: minimum of its K-orbit
    std::optional<Permutation> found;

    IntertwinerSearch(const PermGroup& g, const std::vector<Permutation>& x,
                      const std::vector<Permutation>& y)
        : G(g), xs(x), ys(y), n(g.degree()), pimg(n, -1), ppre(n, -1) {}

    void set_known(const PermGroup& known) {
        K = &known;
        korbmin.assign(n, 0);
        std::vector<bool> seen(n, false);
        for (std::size_t s = 0; s < n; ++s) {
            if (seen[s]) continue;
            std::vector<Point> orb{static_cast<Point>(s)};
            seen[s] = true;
            for (std::size_t head = 0; head < orb.size(); ++head)
                for (const Permutation& kgen : known.generators()) {
                    Point q = kgen[orb[head]];
                    if (!seen[q]) {
                        seen[q] = true;
                        orb.push_back(q);
                    }
                }
            Point mn = *std::min_element(orb.begin(), orb.end());
            for (Point ppt : orb) korbmin[ppt] = mn;
        }
    }

    bool assign(Point p, Point q) {
        std::vector<std::pair<Point, Point>> work{{p, q}};
        while (!work.empty()) {
            auto [a, b] = work.back();
            work.pop_back();
            if (pimg[a] >= 0) {
                if (pimg[a] != static_cast<std::int32_t>(b)) return false;
                continue;
            }
            if (ppre[b] >= 0) return false;
            pimg[a] = b;
            ppre[b] = a;
            trail.push_back(a);
            for (std::size_t i = 0; i < xs.size(); ++i)
                work.emplace_back(xs[i][a], ys[i][b]);
        }
        return true;
    }

    void rollback(std::size_t mark) {
        while (trail.size() > mark) {
            Point a = trail.back();
            trail.pop_back();
            ppre[pimg[a]] = -1;
            pimg[a] = -1;
        }
    }

    bool leaf_ok(const Permutation& g) const {
        for (std::size_t i = 0; i < xs.size(); ++i)
            for (std::size_t ppt = 0; ppt < n; ++ppt)
                if (g[xs[i][static_cast<Point>(ppt)]] != ys[i][g[static_cast<Point>(ppt)]])
                    return false;
        return true;
    }

    bool dfs(std::size_t level, const Permutation& partial) {
        if (level == G.chain_length()) {
            if (!leaf_ok(partial)) return false;
            if (K && K->contains(partial)) return false;
            found = partial;
            return true;
        }
        Point b = G.base()[level];
        for (Point gamma : G.fundamental_orbit(level)) {
            Point beta = partial[gamma];
            if (pimg[b] >= 0 && pimg[b] != static_cast<std::int32_t>(beta)) continue;
            if (ppre[beta] >= 0 && ppre[beta] != static_cast<std::int32_t>(b)) continue;
            if (level == 0 && K && korbmin[beta] != beta) continue;
            std::size_t mark = trail.size();
            if (assign(b, beta)) {
                if (dfs(level + 1, G.transversal_element(level, gamma) * partial)) return true;
            }
            rollback(mark);
        }
        return false;
    }

    std::optional<Permutation> run() {
        found.reset();
        trail.clear();
        std::fill(pimg.begin(), pimg.end(), -1);
        std::fill(ppre.begin(), ppre.end(), -1);
        dfs(0, Permutation::identity(n));
        return found;
    }
};

bool cycle_types_match(const std::vector<Permutation>& xs, const std::vector<Permutation>& ys) {
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (xs[i].cycle_type() != ys[i].cycle_type()) return false;
    return true;
}

PermGroup rebase_for(const PermGroup& G, const std::vector<Permutation>& xs) {
    return PermGroup::from_generators(G.degree(), G.generators(), adapted_base(G.degree(), xs));
}

} // namespace

std::optional<Permutation> intertwiner(const PermGroup& G, const std::vector<Permutation>& xs,
                                       const std::vector<Permutation>& ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("pair lists differ in length");
    if (!cycle_types_match(xs, ys)) return std::nullopt;
    PermGroup H = rebase_for(G, xs);
    IntertwinerSearch search(H, xs, ys);
    return search.run();
}

PermGroup centralizer_of_group(const PermGroup& G, const std::vector<Permutation>& hgens) {
    std::vector<Permutation> xs;
    for (const Permutation& h : hgens)
        if (!h.is_identity()) xs.push_back(h);
    if (xs.empty()) return G;
    PermGroup H = rebase_for(G, xs);
    IntertwinerSearch search(H, xs, xs);
    // Seed with the constraint elements that are themselves central members.
    std::vector<Permutation> kgens;
    for (const Permutation& x : xs) {
        bool central = G.contains(x);
        for (const Permutation& y : xs)
            central = central && x * y == y * x;
        if (central) kgens.push_back(x);
    }
    PermGroup K = PermGroup::from_generators(G.degree(), kgens);
    while (true) {
        search.set_known(K);
        auto g = search.run();
        if (!g) return K;
        kgens.push_back(*g);
        K = PermGroup::from_generators(G.degree(), kgens);
    }
}

PermGroup centralizer(const PermGroup& G, const Permutation& x) {
    return centralizer_of_group(G, {x});
}

PermGroup center(const PermGroup& G) {
    return centralizer_of_group(G, G.generators());
}

std::optional<Permutation> transporter(const PermGroup& G, const Permutation& x,
                                       const Permutation& y) {
    return intertwiner(G, {x}, {y});
}

bool are_conjugate(const PermGroup& G, const Permutation& x, const Permutation& y) {
    return transporter(G, x, y).has_value();
}

namespace {

// Order-independent 128-bit fingerprint of a subgroup's element set.
struct SubgroupKey {
    std::uint64_t a = 0, b = 0;
    bool operator==(const SubgroupKey&) const = default;
};
struct SubgroupKeyHash {
    std::size_t operator()(const SubgroupKey& k) const { return k.a ^ (k.b * 0x9e3779b97f4a7c15ULL); }
};

// Per-element hash; the set key combines them commutatively so that the
// enumeration order of the subgroup's elements cannot matter.
inline void key_mix(SubgroupKey& k, const std::vector<Point>& images) {
    std::uint64_t h1 = 1469598103934665603ULL, h2 = 5381;
    for (Point ppt : images) {
        h1 = (h1 ^ ppt) * 1099511628211ULL;
        h2 = h2 * 33 + ppt + 7;
    }
    k.a += h1;
    k.b ^= h1 * 0x2545F4914F6CDD1DULL + h2;
}

SubgroupKey key_of_elements(const std::vector<Permutation>& elems) {
    SubgroupKey k;
    for (const Permutation& e : elems) key_mix(k, e.images());
    return k;
}

SubgroupKey key_of_conjugate(const std::vector<Permutation>& elems, const Permutation& g) {
    SubgroupKey k;
    for (const Permutation& e : elems) key_mix(k, e.conjugated_by(g).images());
    return k;
}

// Walks the conjugation orbit of H under G. If target is non-null, returns a
// witness g with H^g = target as soon as it is found (stop==true). Otherwise
// returns the stabilizer N_G(H) via Schreier generators.
struct SubgroupOrbit {
    std::optional<Permutation> witness;
    PermGroup stabilizer;
    bool target_found = false;
};

SubgroupOrbit subgroup_orbit(const PermGroup& G, const PermGroup& H, const PermGroup* target,
                             std::uint64_t element_cap) {
    if (H.order() > BigInt(element_cap))
        throw std::length_error("subgroup too large for conjugation-orbit walk");
    std::vector<Permutation> elems = H.elements(element_cap);
    SubgroupOrbit result;
    SubgroupKey target_key;
    if (target) {
        std::vector<Permutation> telems = target->elements(element_cap);
        target_key = key_of_elements(telems);
        if (key_of_elements(elems) == target_key) {
            result.witness = Permutation::identity(G.degree());
            result.target_found = true;
            return result;
        }
    }
    constexpr std::size_t orbit_cap = 1u << 23;
    std::unordered_map<SubgroupKey, std::uint32_t, SubgroupKeyHash> pos;
    std::vector<Permutation> reps; // orbit representatives as conjugators
    pos.emplace(key_of_elements(elems), 0);
    reps.push_back(Permutation::identity(G.degree()));
    std::vector<Permutation> sgens;
    PermGroup N = PermGroup::trivial(G.degree());
    for (std::size_t head = 0; head < reps.size(); ++head) {
        for (const Permutation& g : G.generators()) {
            Permutation cg = reps[head] * g;
            SubgroupKey k = key_of_conjugate(elems, cg);
            auto it = pos.find(k);
            if (it == pos.end()) {
                if (target && k == target_key) {
                    result.witness = cg;
                    result.target_found = true;
                    return result;
                }
                if (reps.size() >= orbit_cap)
                    throw std::length_error("conjugation orbit too large");
                pos.emplace(k, static_cast<std::uint32_t>(reps.size()));
                reps.push_back(std::move(cg));
            } else if (!target) {
                Permutation s = cg * reps[it->second].inverse();
                if (!s.is_identity() && !N.contains(s)) {
                    sgens.push_back(std::move(s));
                    N = PermGroup::from_generators(G.degree(), sgens);
                }
            }
        }
    }
    if (target) return result; // exhausted without finding the target
    result.stabilizer = N;
    return result;
}

// Is H generated by a single element? Returns one if so.
std::optional<Permutation> cyclic_generator(const PermGroup& H, std::uint64_t element_cap) {
    if (H.order() > BigInt(element_cap)) return std::nullopt;
    std::uint64_t o = H.order_u64();
    for (const Permutation& e : H.elements(element_cap))
        if (e.order() == o) return e;
    return std::nullopt;
}

} // namespace

PermGroup normalizer(const PermGroup& G, const PermGroup& H, std::uint64_t element_cap) {
    if (H.is_trivial()) return G;
    if (auto h = cyclic_generator(H, element_cap)) {
        // N_G(<h>) is generated by C_G(h) and transporters h -> h^k.
        std::uint64_t o = h->order();
        PermGroup C = centralizer(G, *h);
        std::vector<Permutation> ngens = C.generators();
        for (std::uint64_t k = 2; k < o; ++k) {
            if (std::gcd(k, o) != 1) continue;
            if (auto t = transporter(G, *h, h->power(static_cast<std::int64_t>(k))))
                ngens.push_back(*t);
        }
        return PermGroup::from_generators(G.degree(), ngens).reduced();
    }
    SubgroupOrbit orb = subgroup_orbit(G, H, nullptr, element_cap);
    std::vector<Permutation> ngens = H.generators();
    for (const Permutation& g : orb.stabilizer.generators()) ngens.push_back(g);
    return PermGroup::from_generators(G.degree(), ngens).reduced();
}

std::optional<Permutation> subgroup_transporter(const PermGroup& G, const PermGroup& H,
                                                const PermGroup& K, std::uint64_t element_cap) {
    if (H.order() != K.order()) return std::nullopt;
    if (H.is_trivial()) return Permutation::identity(G.degree());
    SubgroupOrbit orb = subgroup_orbit(G, H, &K, element_cap);
    if (!orb.target_found) return std::nullopt;
    return orb.witness;
}

bool are_conjugate_subgroups(const PermGroup& G, const PermGroup& H, const PermGroup& K) {
    return subgroup_transporter(G, H, K).has_value();
}

PermGroup intersection(const PermGroup& A, const PermGroup& B, std::uint64_t element_cap) {
    const PermGroup& small = A.order() <= B.order() ? A : B;
    const PermGroup& big = A.order() <= B.order() ? B : A;
    std::vector<Permutation> in_both;
    for (const Permutation& e : small.elements(element_cap))
        if (big.contains(e)) in_both.push_back(e);
    return PermGroup::from_generators(A.degree(), in_both).reduced();
}

namespace {

// Strips the p'-part: returns x^(m) of p-power order (identity if p ∤ |x|).
Permutation p_element_part(const Permutation& x, std::uint64_t p) {
    std::uint64_t o = x.order();
    std::uint64_t m = o;
    while (m % p == 0) m /= p;
    return x.power(static_cast<std::int64_t>(m));
}

// Ascension: grow a p-subgroup through normalizers until Sylow. Intended for
// groups of modest order where conjugation orbits stay small.
PermGroup sylow_by_ascent(const PermGroup& G, std::uint64_t p, std::mt19937_64& rng) {
    BigInt target = p_part(G.order(), p);
    if (target == 1) return PermGroup::trivial(G.degree());
    // Seed: the largest p-element found in a fixed number of samples.
    Permutation best = Permutation::identity(G.degree());
    for (int i = 0; i < 60; ++i) {
        Permutation z = p_element_part(random_element(G, rng), p);
        if (z.order() > best.order()) best = z;
    }
    if (best.is_identity()) throw std::runtime_error("sylow: no p-element found");
    PermGroup P = PermGroup::from_generators(G.degree(), {best});
    while (P.order() < target) {
        PermGroup N = normalizer(G, P);
        // p divides [N : P], so p-elements of N outside P exist; any of them
        // extends P to a larger p-group since P is normal in N.
        bool grown = false;
        for (int i = 0; i < 400 && !grown; ++i) {
            Permutation y = p_element_part(random_element(N, rng), p);
            if (y.is_identity() || P.contains(y)) continue;
            std::vector<Permutation> gens = P.generators();
            gens.push_back(y);
            PermGroup Q = PermGroup::from_generators(G.degree(), gens);
            if (Q.is_pgroup(p)) {
                P = Q.reduced();
                grown = true;
            }
        }
        if (!grown) throw std::runtime_error("sylow: ascent stalled");
    }
    return P;
}

} // namespace

PermGroup sylow(const PermGroup& G, std::uint64_t p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    PermGroup cur = G;
    int central_hits = 0;
    while (true) {
        BigInt part = p_part(cur.order(), p);
        if (part == 1) return PermGroup::trivial(G.degree());
        if (part == cur.order()) return cur;
        if (cur.order() <= 500000 || central_hits > 3) return sylow_by_ascent(cur, p, rng);
        // Find a p-central element: C(z) then contains a full Sylow subgroup
        // of cur, and we descend into it.
        bool descended = false;
        for (int i = 0; i < 100 && !descended; ++i) {
            Permutation z = p_element_part(random_element(cur, rng), p);
            if (z.is_identity()) continue;
            std::uint64_t o = z.order();
            z = z.power(static_cast<std::int64_t>(o / p)); // order exactly p
            PermGroup C = centralizer(cur, z);
            if (p_part(C.order(), p) != part) continue;
            if (C.order() == cur.order()) {
                ++central_hits; // z is central; try other candidates
                if (central_hits > 3) break;
                continue;
            }
            cur = C;
            descended = true;
        }
        if (!descended) return sylow_by_ascent(cur, p, rng);
    }
}

PermGroup p_core(const PermGroup& G, std::uint64_t p, std::uint64_t seed) {
    PermGroup D = sylow(G, p, seed);
    bool changed = true;
    while (changed && !D.is_trivial()) {
        changed = false;
        for (const Permutation& g : G.generators()) {
            std::vector<Permutation> cgens;
            for (const Permutation& d : D.generators()) cgens.push_back(d.conjugated_by(g));
            PermGroup Dg = PermGroup::from_generators(G.degree(), cgens);
            if (Dg.same_group_as(D)) continue;
            D = intersection(D, Dg);
            changed = true;
            break;
        }
    }
    return D;
}

} // namespace ff
