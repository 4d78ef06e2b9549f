// p-group structure theory over an explicit element table.
#include "ff/plattice.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace ff {
namespace {

using Mask = std::vector<std::uint64_t>;

Mask make_mask(int n) { return Mask(static_cast<std::size_t>(n + 63) / 64, 0); }

void mask_set(Mask& m, int i) { m[static_cast<std::size_t>(i) >> 6] |= 1ull << (i & 63); }

bool mask_test(const Mask& m, int i) { return (m[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1; }

Mask mask_of(int n, const std::vector<int>& elems) {
    Mask m = make_mask(n);
    for (int x : elems) mask_set(m, x);
    return m;
}

// lexicographic order on the sorted index sequences (for equal sizes this is
// "who owns the lowest differing bit")
bool mask_less(const Mask& a, const Mask& b) {
    for (std::size_t w = 0; w < a.size(); ++w) {
        std::uint64_t diff = a[w] ^ b[w];
        if (diff) return (a[w] >> (std::countr_zero(diff))) & 1;
    }
    return false;
}

struct MaskHash {
    std::size_t operator()(const Mask& m) const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::uint64_t w : m) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

std::vector<int> sorted_from_mask(const Mask& m) {
    std::vector<int> out;
    for (std::size_t w = 0; w < m.size(); ++w) {
        std::uint64_t bits = m[w];
        while (bits) {
            out.push_back(static_cast<int>((w << 6) + static_cast<std::size_t>(std::countr_zero(bits))));
            bits &= bits - 1;
        }
    }
    return out;
}

int ilog(std::uint64_t n, int p) {
    int k = 0;
    while (n > 1) {
        n /= static_cast<std::uint64_t>(p);
        ++k;
    }
    return k;
}

// deterministic generating sequence: greedily extend modulo the Frattini
// subgroup, preferring the smallest element index
std::vector<int> generating_indices(const SmallGroup& s, int p) {
    if (s.size() == 1) return {};
    std::vector<int> frat = s.frattini_of(s.full_set(), p);
    std::vector<int> gens;
    std::vector<int> have = frat;
    while (static_cast<int>(have.size()) < s.size()) {
        Mask hm = mask_of(s.size(), have);
        int pick = -1;
        for (int x = 0; x < s.size(); ++x) {
            if (!mask_test(hm, x)) {
                pick = x;
                break;
            }
        }
        gens.push_back(pick);
        have.push_back(pick);
        have = s.closure(have);
    }
    return gens;
}

}  // namespace

// ---------------------------------------------------------------------------
// SmallGroup
// ---------------------------------------------------------------------------

SmallGroup SmallGroup::from_group(const PermGroup& g, std::size_t max_size) {
    if (g.order() > BigInt(max_size)) throw std::overflow_error("SmallGroup: group too large");
    SmallGroup s;
    s.degree_ = g.degree();
    s.elems_ = g.elements(max_size);
    std::sort(s.elems_.begin(), s.elems_.end());
    const int n = static_cast<int>(s.elems_.size());
    std::unordered_map<Permutation, int, PermHash> pos;
    pos.reserve(static_cast<std::size_t>(n) * 2);
    for (int i = 0; i < n; ++i) pos.emplace(s.elems_[static_cast<std::size_t>(i)], i);
    s.mul_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            s.mul_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b)] =
                pos.at(s.elems_[static_cast<std::size_t>(a)] * s.elems_[static_cast<std::size_t>(b)]);
        }
    }
    s.inv_.assign(static_cast<std::size_t>(n), 0);
    s.order_.assign(static_cast<std::size_t>(n), 1);
    for (int a = 0; a < n; ++a) {
        s.inv_[static_cast<std::size_t>(a)] = pos.at(s.elems_[static_cast<std::size_t>(a)].inverse());
        int x = a, o = 1;
        while (x != 0) {
            x = s.mul(x, a);
            ++o;
        }
        s.order_[static_cast<std::size_t>(a)] = o;
    }
    return s;
}

int SmallGroup::index_of(const Permutation& g) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), g);
    if (it == elems_.end() || *it != g) return -1;
    return static_cast<int>(it - elems_.begin());
}

int SmallGroup::power(int x, long long e) const {
    int o = order_of(x);
    e %= o;
    if (e < 0) e += o;
    int r = 0;
    for (long long i = 0; i < e; ++i) r = mul(r, x);
    return r;
}

int SmallGroup::prime() const {
    int n = size();
    if (n == 1) return 2;
    for (int q = 2;; ++q) {
        if (n % q == 0) return q;
    }
}

bool SmallGroup::is_pgroup(int p) const {
    int n = size();
    while (n % p == 0) n /= p;
    return n == 1;
}

std::vector<int> SmallGroup::full_set() const {
    std::vector<int> all(static_cast<std::size_t>(size()));
    for (int i = 0; i < size(); ++i) all[static_cast<std::size_t>(i)] = i;
    return all;
}

std::vector<int> SmallGroup::closure(std::vector<int> seed) const {
    Mask m = make_mask(size());
    std::vector<int> out;
    auto add = [&](int x) {
        if (!mask_test(m, x)) {
            mask_set(m, x);
            out.push_back(x);
            return true;
        }
        return false;
    };
    add(0);
    for (int x : seed) add(x);
    std::size_t head = 0;
    while (head < out.size()) {
        int x = out[head++];
        for (std::size_t j = 0; j < out.size(); ++j) {
            add(mul(x, out[j]));
            add(mul(out[j], x));
            if (out.size() == static_cast<std::size_t>(size())) break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> SmallGroup::conjugate_set(const std::vector<int>& sub, int s) const {
    std::vector<int> out(sub.size());
    for (std::size_t i = 0; i < sub.size(); ++i) out[i] = conj(sub[i], s);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> SmallGroup::centralizer_in(const std::vector<int>& ambient,
                                            const std::vector<int>& sub) const {
    std::vector<int> out;
    for (int a : ambient) {
        bool ok = true;
        for (int x : sub) {
            if (mul(a, x) != mul(x, a)) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(a);
    }
    return out;
}

std::vector<int> SmallGroup::normalizer_in(const std::vector<int>& ambient,
                                           const std::vector<int>& sub) const {
    Mask m = mask_of(size(), sub);
    std::vector<int> out;
    for (int a : ambient) {
        bool ok = true;
        for (int x : sub) {
            if (!mask_test(m, conj(x, a))) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(a);
    }
    return out;
}

std::vector<int> SmallGroup::center_of(const std::vector<int>& sub) const {
    return centralizer_in(sub, sub);
}

std::vector<int> SmallGroup::derived_of(const std::vector<int>& sub) const {
    std::vector<int> comms;
    for (int x : sub) {
        for (int y : sub) {
            comms.push_back(mul(mul(inv(x), inv(y)), mul(x, y)));
        }
    }
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    return closure(comms);
}

std::vector<int> SmallGroup::omega1_of(const std::vector<int>& sub, int p) const {
    std::vector<int> seed;
    for (int x : sub) {
        if (order_of(x) <= p) seed.push_back(x);
    }
    return closure(seed);
}

std::vector<int> SmallGroup::frattini_of(const std::vector<int>& sub, int p) const {
    std::vector<int> seed;
    for (int x : sub) seed.push_back(power(x, p));
    for (int x : sub) {
        for (int y : sub) {
            seed.push_back(mul(mul(inv(x), inv(y)), mul(x, y)));
        }
    }
    std::sort(seed.begin(), seed.end());
    seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
    return closure(seed);
}

bool SmallGroup::is_abelian_set(const std::vector<int>& sub) const {
    for (std::size_t i = 0; i < sub.size(); ++i) {
        for (std::size_t j = i + 1; j < sub.size(); ++j) {
            if (mul(sub[i], sub[j]) != mul(sub[j], sub[i])) return false;
        }
    }
    return true;
}

bool SmallGroup::is_elementary_abelian_set(const std::vector<int>& sub, int p) const {
    for (int x : sub) {
        if (x != 0 && order_of(x) != p) return false;
    }
    return is_abelian_set(sub);
}

std::vector<int> SmallGroup::center_preimage(const std::vector<int>& sub,
                                             const std::vector<int>& normal) const {
    Mask nm = mask_of(size(), normal);
    std::vector<int> out;
    for (int x : sub) {
        bool ok = true;
        for (int y : sub) {
            int c = mul(mul(inv(x), inv(y)), mul(x, y));
            if (!mask_test(nm, c)) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(x);
    }
    return out;
}

PermGroup SmallGroup::to_group(const std::vector<int>& sub) const {
    std::vector<Permutation> gens;
    for (int x : sub) {
        if (x != 0) gens.push_back(elems_[static_cast<std::size_t>(x)]);
    }
    if (gens.empty()) return PermGroup::trivial(degree_);
    return PermGroup::from_generators(degree_, gens).reduced();
}

std::vector<int> SmallGroup::subgroup_indices(const PermGroup& h) const {
    std::vector<int> seed;
    for (const auto& g : h.generators()) {
        int i = index_of(g);
        if (i < 0) throw std::invalid_argument("subgroup_indices: not a subgroup");
        seed.push_back(i);
    }
    return closure(seed);
}

std::vector<BigInt> SmallGroup::abelian_invariants(const std::vector<int>& sub, int p) const {
    if (!is_abelian_set(sub)) throw std::invalid_argument("abelian_invariants: not abelian");
    // n_i = log_p #{x : x^(p^i) = 1}; the conjugate partition gives the factors
    std::vector<int> logs{0};
    for (int i = 1;; ++i) {
        int cnt = 0;
        long long q = 1;
        for (int j = 0; j < i; ++j) q *= p;
        for (int x : sub) {
            int o = order_of(x);
            if (q % o == 0) ++cnt;
        }
        logs.push_back(ilog(static_cast<std::uint64_t>(cnt), p));
        if (cnt == static_cast<int>(sub.size())) break;
    }
    std::vector<int> diffs;
    for (std::size_t i = 1; i < logs.size(); ++i) diffs.push_back(logs[i] - logs[i - 1]);
    std::vector<BigInt> out;
    int factors = diffs.empty() ? 0 : diffs[0];
    for (int j = 0; j < factors; ++j) {
        int e = 0;
        for (std::size_t i = 0; i < diffs.size(); ++i) {
            if (diffs[i] >= j + 1) e = static_cast<int>(i) + 1;
        }
        BigInt q = 1;
        for (int i = 0; i < e; ++i) q *= p;
        out.push_back(q);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

std::string abelian_shape(const std::vector<BigInt>& invariants) {
    if (invariants.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < invariants.size(); ++i) {
        if (i) out += " x ";
        out += "C" + invariants[i].str();
    }
    return out;
}

// ---------------------------------------------------------------------------
// subgroup classes by cyclic extension
// ---------------------------------------------------------------------------

namespace {

struct OrbitData {
    std::vector<int> rep;         // lexicographically least member
    std::vector<int> rep_norm;    // N_S(rep)
    std::uint64_t orbit_size = 1;
};

// conjugation orbit of `sub` under S with Schreier-generator stabilizer;
// marks every orbit member in `seen`
OrbitData subgroup_orbit_small(const SmallGroup& s, const std::vector<int>& gens,
                               const std::vector<int>& sub,
                               std::unordered_set<Mask, MaskHash>& seen) {
    const int n = s.size();
    std::unordered_map<Mask, int, MaskHash> where;  // mask -> transversal elt
    std::vector<std::pair<Mask, int>> orbit;
    Mask m0 = mask_of(n, sub);
    where.emplace(m0, 0);
    orbit.emplace_back(m0, 0);
    seen.insert(m0);
    std::vector<int> sgens;
    std::size_t head = 0;
    while (head < orbit.size()) {
        auto [m, t] = orbit[head++];
        std::vector<int> cur = sorted_from_mask(m);
        for (int g : gens) {
            std::vector<int> img = s.conjugate_set(cur, g);
            Mask im = mask_of(n, img);
            int tg = s.mul(t, g);
            auto it = where.find(im);
            if (it == where.end()) {
                where.emplace(im, tg);
                orbit.emplace_back(std::move(im), tg);
                seen.insert(orbit.back().first);
            } else {
                sgens.push_back(s.mul(tg, s.inv(it->second)));
            }
        }
    }
    // stabilizer = closure of the Schreier generators
    std::sort(sgens.begin(), sgens.end());
    sgens.erase(std::unique(sgens.begin(), sgens.end()), sgens.end());
    std::vector<int> stab = s.closure(sgens);
    // re-root at the lexicographically least orbit member
    std::size_t best = 0;
    for (std::size_t i = 1; i < orbit.size(); ++i) {
        if (mask_less(orbit[i].first, orbit[best].first)) best = i;
    }
    OrbitData out;
    out.rep = sorted_from_mask(orbit[best].first);
    out.rep_norm = s.conjugate_set(stab, orbit[best].second);
    out.orbit_size = orbit.size();
    if (out.orbit_size * stab.size() != static_cast<std::uint64_t>(n)) {
        throw std::logic_error("subgroup orbit-stabilizer mismatch");
    }
    return out;
}

int elem_rank(const std::vector<int>& sub, int p) { return ilog(sub.size(), p); }

}  // namespace

std::vector<SubgroupClass> subgroup_classes(const SmallGroup& s, int p,
                                            const SubgroupClassOptions& opt) {
    if (!s.is_pgroup(p)) throw std::invalid_argument("subgroup_classes: not a p-group");
    if (static_cast<std::size_t>(s.size()) > opt.max_group_size && !opt.elementary_only) {
        throw std::overflow_error("subgroup_classes: group size bound exceeded");
    }
    std::vector<int> gens = generating_indices(s, p);
    std::vector<SubgroupClass> out;
    SubgroupClass triv;
    triv.rep = {0};
    triv.normalizer = s.full_set();
    triv.class_size = 1;
    triv.is_elementary_abelian = true;
    triv.rank = 0;
    out.push_back(triv);

    std::vector<std::size_t> layer_idx{0};
    while (!layer_idx.empty()) {
        std::unordered_set<Mask, MaskHash> seen;
        std::vector<std::size_t> next_idx;
        for (std::size_t li : layer_idx) {
            // copy: `out` may reallocate while we append
            const std::vector<int> h = out[li].rep;
            Mask hm = mask_of(s.size(), h);
            const std::vector<int> pool =
                opt.elementary_only ? s.centralizer_in(out[li].normalizer, h)
                                    : out[li].normalizer;
            for (int x : pool) {
                if (mask_test(hm, x)) continue;
                if (opt.elementary_only ? (s.order_of(x) != p)
                                        : !mask_test(hm, s.power(x, p))) {
                    continue;
                }
                // K = H u xH u ... u x^(p-1)H  (x normalizes H, x^p in H)
                std::vector<int> k = h;
                int xp = x;
                for (int i = 1; i < p; ++i) {
                    for (int y : h) k.push_back(s.mul(xp, y));
                    xp = s.mul(xp, x);
                }
                std::sort(k.begin(), k.end());
                if (seen.contains(mask_of(s.size(), k))) continue;
                OrbitData od = subgroup_orbit_small(s, gens, k, seen);
                SubgroupClass sc;
                sc.rep = std::move(od.rep);
                sc.normalizer = std::move(od.rep_norm);
                sc.class_size = od.orbit_size;
                sc.is_elementary_abelian = s.is_elementary_abelian_set(sc.rep, p);
                sc.rank = sc.is_elementary_abelian ? elem_rank(sc.rep, p) : 0;
                next_idx.push_back(out.size());
                out.push_back(std::move(sc));
                if (out.size() > opt.max_classes) {
                    throw std::overflow_error("subgroup_classes: class bound exceeded");
                }
            }
        }
        layer_idx = std::move(next_idx);
    }
    return out;
}

// ---------------------------------------------------------------------------
// characteristic subgroups and recognition
// ---------------------------------------------------------------------------

namespace {

std::vector<int> normal_closure_set(const SmallGroup& s, const std::vector<int>& gens,
                                    const std::vector<int>& seed) {
    std::vector<int> cur = s.closure(seed);
    for (;;) {
        std::vector<int> extra;
        Mask m = mask_of(s.size(), cur);
        for (int g : gens) {
            for (int x : cur) {
                int c = s.conj(x, g);
                if (!mask_test(m, c)) extra.push_back(c);
            }
        }
        if (extra.empty()) return cur;
        for (int x : cur) extra.push_back(x);
        cur = s.closure(extra);
    }
}

}  // namespace

PermGroup omega1(const PermGroup& p_group) {
    SmallGroup s = SmallGroup::from_group(p_group);
    return s.to_group(s.omega1_of(s.full_set(), s.prime()));
}

PermGroup second_center(const PermGroup& g) {
    SmallGroup s = SmallGroup::from_group(g);
    std::vector<int> all = s.full_set();
    return s.to_group(s.center_preimage(all, s.center_of(all)));
}

PermGroup thompson_subgroup(const PermGroup& g) {
    SmallGroup s = SmallGroup::from_group(g);
    int p = s.prime();
    SubgroupClassOptions opt;
    opt.elementary_only = true;
    opt.max_group_size = 4096;
    std::vector<SubgroupClass> classes = subgroup_classes(s, p, opt);
    int max_rank = 0;
    for (const auto& c : classes) max_rank = std::max(max_rank, c.rank);
    std::vector<int> seed;
    for (const auto& c : classes) {
        if (c.rank == max_rank) {
            for (int x : c.rep) seed.push_back(x);
        }
    }
    return s.to_group(normal_closure_set(s, generating_indices(s, p), seed));
}

ExtraspecialInfo is_extraspecial(const PermGroup& g) {
    SmallGroup s = SmallGroup::from_group(g);
    ExtraspecialInfo info;
    int p = s.prime();
    if (!s.is_pgroup(p) || s.size() == 1) return info;
    std::vector<int> all = s.full_set();
    std::vector<int> z = s.center_of(all);
    std::vector<int> der = s.derived_of(all);
    std::vector<int> frat = s.frattini_of(all, p);
    if (z.size() != static_cast<std::size_t>(p) || z != der || z != frat) return info;
    info.is_extraspecial = true;
    info.p = p;
    info.k = ilog(static_cast<std::uint64_t>(s.size()), p) / 2;
    std::string pk = std::to_string(p) + "^{1+" + std::to_string(2 * info.k) + "}";
    // exponent / sign classification via the count of order <= p elements
    std::uint64_t low = 0;
    for (int x : all) {
        if (s.order_of(x) <= p) ++low;
    }
    if (p == 2) {
        std::uint64_t pk2 = 1ull << info.k, p2k = 1ull << (2 * info.k);
        if (low == p2k + pk2) {
            info.type = "+";
        } else if (low == p2k - pk2) {
            info.type = "-";
        }
    } else {
        if (low == static_cast<std::uint64_t>(s.size())) {
            info.type = "+";  // exponent p
        } else {
            info.type = "-";  // exponent p^2
        }
    }
    if (!info.type.empty()) {
        info.name = pk + "_" + info.type;
    } else {
        info.name = pk + " (order<=p count " + std::to_string(low) + ")";
    }
    return info;
}

// ---------------------------------------------------------------------------
// Aut(S)
// ---------------------------------------------------------------------------

namespace {

struct CayleyLevel {
    std::vector<int> fresh;                        // elements first seen here
    std::vector<std::pair<int, int>> derivation;   // fresh[i] = mul(first, gen g_second)
    std::vector<std::pair<int, int>> check_edges;  // (x, j): mul(x, g_j) stays in level
};

}  // namespace

PGroupAutGroup aut_group(const SmallGroup& s, const AutGroupOptions& opt) {
    if (static_cast<std::size_t>(s.size()) > opt.max_group_size) {
        throw std::overflow_error("aut_group: group size bound exceeded");
    }
    const int n = s.size();
    const int p = s.prime();
    std::vector<int> gens = generating_indices(s, p);
    if (gens.size() > opt.max_generators) {
        throw std::overflow_error("aut_group: generator bound exceeded");
    }
    const int d = static_cast<int>(gens.size());

    // element fingerprints: order, S-class size, membership in characteristic
    // subgroups, order of the p-th power's class
    std::vector<int> class_id(static_cast<std::size_t>(n), -1);
    std::vector<int> class_sz;
    for (int x = 0; x < n; ++x) {
        if (class_id[static_cast<std::size_t>(x)] >= 0) continue;
        int cid = static_cast<int>(class_sz.size());
        std::vector<int> orbit{x};
        class_id[static_cast<std::size_t>(x)] = cid;
        std::size_t head = 0;
        while (head < orbit.size()) {
            int y = orbit[head++];
            for (int g : gens) {
                int c = s.conj(y, g);
                if (class_id[static_cast<std::size_t>(c)] < 0) {
                    class_id[static_cast<std::size_t>(c)] = cid;
                    orbit.push_back(c);
                }
            }
        }
        class_sz.push_back(static_cast<int>(orbit.size()));
    }
    std::vector<int> all = s.full_set();
    std::vector<Mask> chars;
    for (const auto& sub :
         {s.center_of(all), s.center_preimage(all, s.center_of(all)), s.derived_of(all),
          s.frattini_of(all, p), s.omega1_of(all, p)}) {
        chars.push_back(mask_of(n, sub));
    }
    std::vector<std::uint64_t> fp(static_cast<std::size_t>(n));
    std::map<std::vector<int>, std::uint64_t> fp_ids;
    for (int x = 0; x < n; ++x) {
        std::vector<int> key{s.order_of(x), class_sz[static_cast<std::size_t>(class_id[static_cast<std::size_t>(x)])]};
        for (const Mask& m : chars) key.push_back(mask_test(m, x) ? 1 : 0);
        int xp = s.power(x, p);
        key.push_back(s.order_of(xp));
        key.push_back(class_sz[static_cast<std::size_t>(class_id[static_cast<std::size_t>(xp)])]);
        fp[static_cast<std::size_t>(x)] = fp_ids.emplace(std::move(key), fp_ids.size()).first->second;
    }

    // Cayley levels for incremental verification of partial maps
    std::vector<CayleyLevel> levels(static_cast<std::size_t>(d));
    {
        Mask have = make_mask(n);
        mask_set(have, 0);
        std::vector<int> reach{0};
        for (int k = 0; k < d; ++k) {
            CayleyLevel& lv = levels[static_cast<std::size_t>(k)];
            const std::size_t old_count = reach.size();
            std::size_t scan = 0;
            lv.fresh.push_back(gens[static_cast<std::size_t>(k)]);
            lv.derivation.emplace_back(-1, -1);  // the new generator itself
            mask_set(have, gens[static_cast<std::size_t>(k)]);
            reach.push_back(gens[static_cast<std::size_t>(k)]);
            // close under right multiplication by g_0..g_k
            while (scan < reach.size()) {
                int x = reach[scan++];
                for (int j = 0; j <= k; ++j) {
                    int y = s.mul(x, gens[static_cast<std::size_t>(j)]);
                    if (!mask_test(have, y)) {
                        mask_set(have, y);
                        lv.fresh.push_back(y);
                        lv.derivation.emplace_back(x, j);
                        reach.push_back(y);
                    }
                }
            }
            // edges not yet verified at earlier levels
            for (std::size_t i = old_count; i < reach.size(); ++i) {
                for (int j = 0; j <= k; ++j) lv.check_edges.emplace_back(reach[i], j);
            }
            for (std::size_t i = 0; i < old_count; ++i) lv.check_edges.emplace_back(reach[i], k);
        }
    }

    // depth-first search over image tuples
    std::vector<int> phi(static_cast<std::size_t>(n), -1);
    Mask used = make_mask(n);
    phi[0] = 0;
    mask_set(used, 0);
    std::vector<Permutation> aut_gens;
    PermGroup aut = PermGroup::trivial(std::max(n, 1));
    BigInt leaves = 0;
    std::vector<int> himg(static_cast<std::size_t>(d), -1);

    std::function<void(int)> dfs = [&](int k) {
        if (k == d) {
            ++leaves;
            if (leaves > BigInt(opt.max_aut_order)) {
                throw std::overflow_error("aut_group: automorphism count bound exceeded");
            }
            std::vector<Point> img(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = static_cast<Point>(phi[static_cast<std::size_t>(i)]);
            Permutation a(std::move(img));
            if (!aut.contains(a)) {
                aut_gens.push_back(a);
                aut = PermGroup::from_generators(std::max(n, 1), aut_gens);
            }
            return;
        }
        const CayleyLevel& lv = levels[static_cast<std::size_t>(k)];
        int gk = gens[static_cast<std::size_t>(k)];
        for (int h = 0; h < n; ++h) {
            if (fp[static_cast<std::size_t>(h)] != fp[static_cast<std::size_t>(gk)]) continue;
            Mask used_snapshot = used;
            std::vector<int> assigned;
            himg[static_cast<std::size_t>(k)] = h;
            bool ok = true;
            for (std::size_t i = 0; i < lv.fresh.size() && ok; ++i) {
                int x = lv.fresh[i];
                auto [src, j] = lv.derivation[i];
                int val = (src < 0) ? h : s.mul(phi[static_cast<std::size_t>(src)], himg[static_cast<std::size_t>(j)]);
                if (mask_test(used, val)) {
                    ok = false;  // not injective
                    break;
                }
                phi[static_cast<std::size_t>(x)] = val;
                mask_set(used, val);
                assigned.push_back(x);
            }
            if (ok) {
                for (const auto& [x, j] : lv.check_edges) {
                    if (phi[static_cast<std::size_t>(s.mul(x, gens[static_cast<std::size_t>(j)]))] !=
                        s.mul(phi[static_cast<std::size_t>(x)], himg[static_cast<std::size_t>(j)])) {
                        ok = false;
                        break;
                    }
                }
            }
            if (ok) dfs(k + 1);
            for (int x : assigned) phi[static_cast<std::size_t>(x)] = -1;
            used = used_snapshot;
        }
        himg[static_cast<std::size_t>(k)] = -1;
    };
    dfs(0);

    PGroupAutGroup out;
    out.gen_sequence = gens;
    out.perm = aut.reduced();
    out.order = aut.order();
    if (out.order != leaves) throw std::logic_error("aut_group: leaf count mismatch");
    for (const auto& a : out.perm.generators()) {
        std::vector<int> im;
        for (int g : gens) im.push_back(a[static_cast<Point>(g)]);
        out.images.push_back(std::move(im));
    }
    return out;
}

Permutation conjugation_on_indices(const SmallGroup& s, const Permutation& g) {
    const int n = s.size();
    Permutation gi = g.inverse();
    std::vector<Point> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        int j = s.index_of(gi * s.element(i) * g);
        if (j < 0) throw std::invalid_argument("conjugation_on_indices: does not normalize");
        img[static_cast<std::size_t>(i)] = static_cast<Point>(j);
    }
    return Permutation(std::move(img));
}

}  // namespace ff
