// Fusion systems F_S(G): morphism sets as conjugation orbits of generating
// tuples, subgroup-class predicates, Z-hat, Aut(F)/Out(F), kappa-bar.
#include "ff/fusion.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstring>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "ff/groupops.hpp"
#include "ff/search.hpp"

namespace ff {

namespace {

bool small_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t hash_points(const Point* a, std::size_t n) {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::size_t i = 0; i < n; ++i) {
        h ^= a[i];
        h *= 1099511628211ULL;
    }
    return h;
}

// Conjugation orbit of a tuple of group elements, breadth-first over the
// generators of G, with parent links for witness reconstruction.  Nodes are
// flattened image arrays (tuple length k, degree d).
struct TupleOrbit {
    std::size_t k = 0;
    std::size_t d = 0;
    std::vector<Point> flat;                 // node i occupies [i*k*d, (i+1)*k*d)
    std::vector<std::array<int, 2>> parent;  // (node, generator index); root (-1,-1)
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> buckets;

    std::size_t size() const { return parent.size(); }
    const Point* node(std::size_t i) const { return flat.data() + i * k * d; }

    int find(const Point* t) const {
        auto it = buckets.find(hash_points(t, k * d));
        if (it == buckets.end()) return -1;
        for (std::uint32_t c : it->second)
            if (std::memcmp(node(c), t, k * d * sizeof(Point)) == 0)
                return static_cast<int>(c);
        return -1;
    }
};

TupleOrbit tuple_orbit(const PermGroup& g, const std::vector<Permutation>& tuple,
                       std::size_t max_orbit) {
    TupleOrbit o;
    o.k = tuple.size();
    o.d = g.degree();
    const std::size_t kd = o.k * o.d;
    auto insert = [&](const Point* t, int par, int gen) {
        o.flat.insert(o.flat.end(), t, t + kd);
        o.parent.push_back({par, gen});
        o.buckets[hash_points(t, kd)].push_back(static_cast<std::uint32_t>(o.parent.size() - 1));
    };
    std::vector<Point> root(kd);
    for (std::size_t e = 0; e < o.k; ++e) {
        if (tuple[e].degree() != o.d)
            throw std::invalid_argument("tuple_orbit: degree mismatch");
        std::copy(tuple[e].images().begin(), tuple[e].images().end(), root.begin() + static_cast<long>(e * o.d));
    }
    insert(root.data(), -1, -1);
    std::vector<Point> child(kd);
    for (std::size_t head = 0; head < o.size(); ++head) {
        for (std::size_t j = 0; j < g.generators().size(); ++j) {
            const auto& a = g.generators()[j].images();
            const Point* x = o.node(head);
            for (std::size_t e = 0; e < o.k; ++e)
                for (std::size_t i = 0; i < o.d; ++i)
                    child[e * o.d + a[i]] = a[x[e * o.d + i]];
            if (o.find(child.data()) >= 0) continue;
            if (o.size() >= max_orbit)
                throw std::length_error("conjugation orbit of generating tuple exceeds cap");
            insert(child.data(), static_cast<int>(head), static_cast<int>(j));
        }
    }
    return o;
}

Permutation orbit_witness(const TupleOrbit& o, const PermGroup& g, std::size_t nodeidx) {
    std::vector<int> path;
    for (int v = static_cast<int>(nodeidx); o.parent[static_cast<std::size_t>(v)][0] >= 0;
         v = o.parent[static_cast<std::size_t>(v)][0])
        path.push_back(o.parent[static_cast<std::size_t>(v)][1]);
    Permutation w = Permutation::identity(o.d);
    for (auto it = path.rbegin(); it != path.rend(); ++it)
        w = w * g.generators()[static_cast<std::size_t>(*it)];
    return w;
}

Permutation slice_perm(const Point* t, std::size_t d) {
    return Permutation(std::vector<Point>(t, t + d));
}

bool contains_sorted(const std::vector<int>& sorted, int x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
}

// |N_G(P) / (P * C_G(P))| without materializing the coset action.
BigInt out_order_in(const PermGroup& g, const PermGroup& p_sub) {
    PermGroup n = normalizer(g, p_sub);
    PermGroup c = centralizer_of_group(g, p_sub.generators());
    std::vector<Permutation> pc = p_sub.generators();
    for (const Permutation& x : c.generators()) pc.push_back(x);
    PermGroup pcg = PermGroup::from_generators(g.degree(), pc).reduced();
    return n.order() / pcg.order();
}

} // namespace

FusionSystem FusionSystem::build(const PermGroup& g, int p, const FusionOptions& opt) {
    if (!small_prime(p)) throw std::invalid_argument("fusion system: p must be prime");
    FusionSystem f;
    f.g_ = g;
    f.p_ = p;
    f.s_ = ff::sylow(g, static_cast<std::uint64_t>(p));
    if (f.s_.is_trivial())
        throw std::invalid_argument("fusion system: p does not divide |G|");
    f.table_ = std::make_shared<const SmallGroup>(SmallGroup::from_group(f.s_, opt.max_table));
    const std::size_t n = static_cast<std::size_t>(f.table_->size());
    if (opt.elementary_only || n <= opt.max_lattice) {
        SubgroupClassOptions sopt;
        sopt.max_group_size = n;
        sopt.elementary_only = opt.elementary_only;
        f.classes_ = subgroup_classes(*f.table_, p, sopt);
        f.classes_enumerated_ = true;
    }
    return f;
}

const std::vector<SubgroupClass>& FusionSystem::classes() const {
    if (!classes_enumerated_)
        throw std::logic_error("subgroup classes were not enumerated for this Sylow group");
    return classes_;
}

PermGroup FusionSystem::subgroup(const std::vector<int>& elem_indices) const {
    return table_->to_group(elem_indices);
}

std::vector<int> FusionSystem::generating_sequence(const std::vector<int>& elem_indices) const {
    std::vector<int> gens;
    std::vector<int> span{0};
    for (;;) {
        int next = -1;
        for (int x : elem_indices) {
            if (!contains_sorted(span, x)) {
                next = x;
                break;
            }
        }
        if (next < 0) break;
        gens.push_back(next);
        span.push_back(next);
        std::sort(span.begin(), span.end());
        span = table_->closure(span);
    }
    return gens;
}

std::vector<FusionMorphism> hom_f(const FusionSystem& f, const PermGroup& p_sub,
                                  const PermGroup& q_sub, const HomOptions& opt) {
    const SmallGroup& t = f.table();
    std::vector<int> pidx = t.subgroup_indices(p_sub);
    std::vector<int> qidx = t.subgroup_indices(q_sub);
    if (pidx.size() > qidx.size()) return {};
    std::vector<int> genseq = f.generating_sequence(pidx);
    if (genseq.empty())
        return {FusionMorphism{{}, {}, Permutation::identity(f.group().degree())}};
    std::vector<Permutation> tuple;
    for (int i : genseq) tuple.push_back(t.element(i));

    std::vector<FusionMorphism> out;
    if (pidx.size() == static_cast<std::size_t>(t.size())) {
        // P = S: morphisms S -> Q are the Aut_G(S)-maps (and Q must be S).
        PermGroup n = normalizer(f.group(), f.sylow());
        PermGroup c = centralizer_of_group(f.group(), f.sylow().generators());
        CosetAction ca(n, c);
        for (int i = 0; i < ca.index(); ++i) {
            const Permutation& w = ca.coset_rep(i);
            std::vector<Permutation> images;
            for (const Permutation& x : tuple) images.push_back(x.conjugated_by(w));
            out.push_back(FusionMorphism{tuple, std::move(images), w});
        }
        return out;
    }

    TupleOrbit orb = tuple_orbit(f.group(), tuple, opt.max_orbit);
    for (std::size_t i = 0; i < orb.size(); ++i) {
        const Point* nd = orb.node(i);
        bool inside = true;
        std::vector<Permutation> images;
        for (std::size_t e = 0; e < orb.k && inside; ++e) {
            Permutation y = slice_perm(nd + e * orb.d, orb.d);
            int iy = t.index_of(y);
            if (iy < 0 || !contains_sorted(qidx, iy)) {
                inside = false;
                break;
            }
            images.push_back(std::move(y));
        }
        if (!inside) continue;
        out.push_back(FusionMorphism{tuple, std::move(images), orbit_witness(orb, f.group(), i)});
    }
    return out;
}

bool is_p_centric(const FusionSystem& f, const PermGroup& p_sub) {
    BigInt z = center(p_sub).order();
    PermGroup c = centralizer_of_group(f.group(), p_sub.generators());
    return z == p_part(c.order(), static_cast<std::uint64_t>(f.prime()));
}

bool is_fully_normalized(const FusionSystem& f, const PermGroup& p_sub) {
    const SmallGroup& t = f.table();
    std::vector<int> idx = t.subgroup_indices(p_sub);
    std::size_t ns = t.normalizer_in(t.full_set(), idx).size();
    PermGroup n = normalizer(f.group(), p_sub);
    return BigInt(ns) == p_part(n.order(), static_cast<std::uint64_t>(f.prime()));
}

PermGroup out_g(const FusionSystem& f, const PermGroup& p_sub) {
    PermGroup n = normalizer(f.group(), p_sub);
    PermGroup c = centralizer_of_group(f.group(), p_sub.generators());
    std::vector<Permutation> pc = p_sub.generators();
    for (const Permutation& x : c.generators()) pc.push_back(x);
    PermGroup pcg = PermGroup::from_generators(f.group().degree(), pc).reduced();
    CosetAction ca(n, pcg);
    return ca.image();
}

bool has_strongly_p_embedded(const PermGroup& h, int p, const StronglyEmbeddedOptions& opt) {
    if (p_part(h.order(), static_cast<std::uint64_t>(p)) == 1) return false;
    PermGroup t = sylow(h, static_cast<std::uint64_t>(p));
    std::vector<Permutation> telems = t.elements(opt.max_sylow_elements);
    std::sort(telems.begin(), telems.end());

    // Orbit of the Sylow subgroup under conjugation, vertices as sorted
    // element lists.
    std::vector<std::vector<Permutation>> verts;
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> seen;
    auto key_of = [](const std::vector<Permutation>& v) {
        std::uint64_t h0 = 1469598103934665603ULL;
        for (const Permutation& g : v)
            for (Point pt : g.images()) {
                h0 ^= pt;
                h0 *= 1099511628211ULL;
            }
        return h0;
    };
    auto lookup = [&](const std::vector<Permutation>& v) {
        auto it = seen.find(key_of(v));
        if (it == seen.end()) return -1;
        for (std::uint32_t c : it->second)
            if (verts[c] == v) return static_cast<int>(c);
        return -1;
    };
    verts.push_back(telems);
    seen[key_of(telems)].push_back(0);
    for (std::size_t head = 0; head < verts.size(); ++head) {
        for (const Permutation& g : h.generators()) {
            std::vector<Permutation> img;
            img.reserve(verts[head].size());
            for (const Permutation& x : verts[head]) img.push_back(x.conjugated_by(g));
            std::sort(img.begin(), img.end());
            if (lookup(img) >= 0) continue;
            if (verts.size() >= opt.max_vertices ||
                (verts.size() + 1) * telems.size() > (1u << 22))
                throw std::length_error("Sylow intersection graph too large");
            seen[key_of(img)].push_back(static_cast<std::uint32_t>(verts.size()));
            verts.push_back(std::move(img));
        }
    }
    if (verts.size() == 1) return false;

    // Connectivity of the graph joining Sylows with nontrivial intersection.
    auto meets = [&](std::size_t a, std::size_t b) {
        std::size_t common = 0, i = 0, j = 0;
        while (i < verts[a].size() && j < verts[b].size()) {
            if (verts[a][i] == verts[b][j]) {
                if (++common >= 2) return true;
                ++i, ++j;
            } else if (verts[a][i] < verts[b][j]) {
                ++i;
            } else {
                ++j;
            }
        }
        return false;
    };
    std::vector<char> visited(verts.size(), 0);
    std::vector<std::size_t> stack{0};
    visited[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t u = 0; u < verts.size(); ++u) {
            if (!visited[u] && meets(v, u)) {
                visited[u] = 1;
                ++count;
                stack.push_back(u);
            }
        }
    }
    return count < verts.size();
}

std::vector<EssentialClass> essential_classes(const FusionSystem& f) {
    std::vector<EssentialClass> out;
    const auto& cls = f.classes();
    for (std::size_t i = 0; i < cls.size(); ++i) {
        if (cls[i].rep.size() == 1) continue;
        PermGroup p = f.subgroup(cls[i].rep);
        if (!is_p_centric(f, p)) continue;
        if (!is_fully_normalized(f, p)) continue;
        PermGroup o = out_g(f, p);
        if (!has_strongly_p_embedded(o, f.prime())) continue;
        out.push_back(EssentialClass{static_cast<int>(i), o.order()});
    }
    return out;
}

std::vector<ZhatMember> z_hat(const FusionSystem& f) {
    std::vector<ZhatMember> out;
    const SmallGroup& t = f.table();
    const std::vector<int> full = t.full_set();
    const auto& cls = f.classes();
    for (std::size_t i = 0; i < cls.size(); ++i) {
        if (!cls[i].is_elementary_abelian || cls[i].rep.size() == 1) continue;
        const std::vector<int>& rep = cls[i].rep;
        std::vector<int> cs = t.centralizer_in(full, rep);
        std::vector<int> w1 = t.omega1_of(t.center_of(cs), f.prime());
        if (w1 != rep) continue;
        PermGroup w = f.subgroup(rep);
        if (!is_fully_normalized(f, w)) continue;
        // Aut_G(W) acting on the elements of W, in rep order.
        PermGroup n = normalizer(f.group(), w);
        std::vector<Permutation> agens;
        for (const Permutation& g : n.generators()) {
            std::vector<Point> img(rep.size());
            for (std::size_t j = 0; j < rep.size(); ++j) {
                int iy = t.index_of(t.element(rep[j]).conjugated_by(g));
                auto it = std::lower_bound(rep.begin(), rep.end(), iy);
                if (iy < 0 || it == rep.end() || *it != iy)
                    throw std::logic_error("z_hat: normalizer does not stabilize W");
                img[j] = static_cast<Point>(it - rep.begin());
            }
            agens.push_back(Permutation(std::move(img)));
        }
        PermGroup aut = PermGroup::from_generators(rep.size(), agens).reduced();
        if (!has_strongly_p_embedded(aut, f.prime())) continue;
        out.push_back(ZhatMember{static_cast<int>(i), aut.order(), aut});
    }
    return out;
}

namespace {

// Lazily assigns an id to each G-conjugation orbit of generator tuples.
// Complete orbits are expanded on first contact, so membership and orbit
// identity are hash lookups afterwards.
struct OrbitIdCache {
    const PermGroup* g = nullptr;
    std::size_t k = 0, d = 0;
    std::size_t max_orbit = 0;
    std::unordered_map<std::string, int> member;
    int norbits = 0;

    static std::string key_of(const std::vector<Point>& flat) {
        return std::string(reinterpret_cast<const char*>(flat.data()),
                           flat.size() * sizeof(Point));
    }

    int locate(const std::vector<Point>& flat) {
        auto it = member.find(key_of(flat));
        if (it != member.end()) return it->second;
        const int id = norbits++;
        std::vector<std::vector<Point>> queue{flat};
        member.emplace(key_of(flat), id);
        std::vector<Point> child(k * d);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (const Permutation& gen : g->generators()) {
                const auto& a = gen.images();
                const std::vector<Point>& x = queue[head];
                for (std::size_t e = 0; e < k; ++e)
                    for (std::size_t i = 0; i < d; ++i)
                        child[e * d + a[i]] = a[x[e * d + i]];
                auto [pos, fresh] = member.emplace(key_of(child), id);
                (void)pos;
                if (!fresh) continue;
                if (member.size() > max_orbit)
                    throw std::length_error("conjugation orbit cache exceeds cap");
                queue.push_back(child);
            }
        }
        return id;
    }
};

} // namespace

FusionAutGroup aut_f(const FusionSystem& f, const AutFOptions& opt) {
    const SmallGroup& t = f.table();
    AutGroupOptions ao;
    ao.max_group_size = static_cast<std::size_t>(t.size());
    ao.max_aut_order = opt.max_aut_order;
    FusionAutGroup r;
    r.aut_s = aut_group(t, ao);

    PermGroup n = normalizer(f.group(), f.sylow());
    std::vector<Permutation> a0gens;
    for (const Permutation& g : n.generators())
        a0gens.push_back(conjugation_on_indices(t, g));
    r.aut_g_s = PermGroup::from_generators(static_cast<std::size_t>(t.size()), a0gens).reduced();
    if (!r.aut_g_s.is_subgroup_of(r.aut_s.perm))
        throw std::logic_error("aut_f: Aut_G(S) escaped Aut(S)");

    if (r.aut_g_s.order() == r.aut_s.perm.order()) {
        r.aut_f = r.aut_s.perm;
        r.out_f_order = 1;
        return r;
    }

    // Per-class morphism data: generating sequence and every in-S image
    // tuple, as element indices; plus an orbit-id cache over flat tuples.
    struct ClassData {
        std::vector<int> src;
        std::vector<std::vector<int>> images;
        OrbitIdCache cache;
    };
    std::vector<ClassData> data;
    const std::size_t degree = f.group().degree();
    for (const SubgroupClass& c : f.classes()) {
        if (c.rep.size() == 1 || c.rep.size() == static_cast<std::size_t>(t.size())) continue;
        ClassData cd;
        cd.src = f.generating_sequence(c.rep);
        std::vector<Permutation> tuple;
        for (int i : cd.src) tuple.push_back(t.element(i));
        TupleOrbit orb = tuple_orbit(f.group(), tuple, opt.hom.max_orbit);
        cd.cache.g = &f.group();
        cd.cache.k = tuple.size();
        cd.cache.d = degree;
        cd.cache.max_orbit = opt.hom.max_orbit;
        for (std::size_t i = 0; i < orb.size(); ++i) {
            const Point* nd = orb.node(i);
            cd.cache.member.emplace(
                std::string(reinterpret_cast<const char*>(nd),
                            orb.k * orb.d * sizeof(Point)),
                0);
            std::vector<int> idx(orb.k);
            bool inside = true;
            for (std::size_t e = 0; e < orb.k && inside; ++e) {
                idx[e] = t.index_of(slice_perm(nd + e * degree, degree));
                inside = idx[e] >= 0;
            }
            if (inside) cd.images.push_back(std::move(idx));
        }
        cd.cache.norbits = 1;
        data.push_back(std::move(cd));
    }

    auto flat_of = [&](const std::vector<int>& elem_idx, const Permutation& alpha) {
        std::vector<Point> flat(elem_idx.size() * degree);
        for (std::size_t e = 0; e < elem_idx.size(); ++e) {
            const auto& img = t.element(alpha[static_cast<Point>(elem_idx[e])]).images();
            std::copy(img.begin(), img.end(), flat.begin() + static_cast<long>(e * degree));
        }
        return flat;
    };
    auto preserves = [&](const Permutation& alpha) {
        // morphisms S -> S: alpha must normalize Aut_G(S) inside Aut(S)
        for (const Permutation& a : r.aut_g_s.generators())
            if (!r.aut_g_s.contains(a.conjugated_by(alpha))) return false;
        for (ClassData& cd : data) {
            const int id = cd.cache.locate(flat_of(cd.src, alpha));
            for (const auto& m : cd.images)
                if (cd.cache.locate(flat_of(m, alpha)) != id) return false;
        }
        return true;
    };

    CosetAction ca(r.aut_s.perm, r.aut_g_s, opt.max_coset_index);
    std::vector<Permutation> fgens = a0gens;
    for (int i = 1; i < ca.index(); ++i)
        if (preserves(ca.coset_rep(i))) fgens.push_back(ca.coset_rep(i));
    r.aut_f = PermGroup::from_generators(static_cast<std::size_t>(t.size()), fgens).reduced();
    r.out_f_order = r.aut_f.order() / r.aut_g_s.order();
    return r;
}

bool controls_fusion(const FusionSystem& f, const PermGroup& h, const HomOptions& opt) {
    if (!h.is_subgroup_of(f.group()))
        throw std::invalid_argument("controls_fusion: H is not a subgroup of G");
    if (!f.sylow().is_subgroup_of(h))
        throw std::invalid_argument("controls_fusion: H does not contain S");
    const SmallGroup& t = f.table();

    // P = S: |Aut_G(S)| vs |Aut_H(S)|
    {
        BigInt ag = normalizer(f.group(), f.sylow()).order() /
                    centralizer_of_group(f.group(), f.sylow().generators()).order();
        BigInt ah = normalizer(h, f.sylow()).order() /
                    centralizer_of_group(h, f.sylow().generators()).order();
        if (ag != ah) return false;
    }
    for (const SubgroupClass& c : f.classes()) {
        if (c.rep.size() == 1 || c.rep.size() == static_cast<std::size_t>(t.size())) continue;
        std::vector<Permutation> tuple;
        for (int i : f.generating_sequence(c.rep)) tuple.push_back(t.element(i));
        auto count_in_s = [&](const PermGroup& grp) {
            TupleOrbit orb = tuple_orbit(grp, tuple, opt.max_orbit);
            std::size_t cnt = 0;
            for (std::size_t i = 0; i < orb.size(); ++i) {
                const Point* nd = orb.node(i);
                bool inside = true;
                for (std::size_t e = 0; e < orb.k && inside; ++e)
                    inside = t.index_of(slice_perm(nd + e * orb.d, orb.d)) >= 0;
                if (inside) ++cnt;
            }
            return cnt;
        };
        if (count_in_s(f.group()) != count_in_s(h)) return false;
    }
    return true;
}

KappaBarReport kappa_bar(const PermGroup& g, const PermGroup& ghat, int p,
                         const FusionOptions& fopt, const AutFOptions& aopt) {
    if (g.degree() != ghat.degree())
        throw std::invalid_argument("kappa_bar: degree mismatch");
    if (!g.is_subgroup_of(ghat))
        throw std::invalid_argument("kappa_bar: G is not a subgroup of Ghat");
    for (const Permutation& a : ghat.generators())
        for (const Permutation& x : g.generators())
            if (!g.contains(x.conjugated_by(a)))
                throw std::invalid_argument("kappa_bar: G is not normal in Ghat");

    KappaBarReport r;
    r.out_g_order = ghat.order() / g.order();
    FusionSystem f = FusionSystem::build(g, p, fopt);
    FusionAutGroup af = aut_f(f, aopt);
    r.out_f_order = af.out_f_order;

    std::vector<Permutation> imgens = af.aut_g_s.generators();
    CosetAction ca(ghat, g);
    for (int i = 1; i < ca.index(); ++i) {
        const Permutation& tcos = ca.coset_rep(i);
        std::vector<Permutation> sgens;
        for (const Permutation& x : f.sylow().generators())
            sgens.push_back(x.conjugated_by(tcos));
        PermGroup st = PermGroup::from_generators(g.degree(), sgens).reduced();
        auto y = subgroup_transporter(g, st, f.sylow());
        if (!y) throw std::logic_error("kappa_bar: Sylow transport failed");
        Permutation beta = tcos * *y;
        Permutation rb = conjugation_on_indices(f.table(), beta);
        if (!af.aut_f.contains(rb))
            throw std::logic_error("kappa_bar: restriction is not fusion-preserving");
        imgens.push_back(rb);
    }
    PermGroup image = PermGroup::from_generators(af.aut_f.degree(), imgens).reduced();
    r.image_order = image.order() / af.aut_g_s.order();
    if (r.out_g_order % r.image_order != 0)
        throw std::logic_error("kappa_bar: image order does not divide |Out(G)|");
    r.kernel_order = r.out_g_order / r.image_order;
    if (r.kernel_order != 1)
        r.verdict = "kernel-nontrivial";
    else if (r.image_order == r.out_f_order)
        r.verdict = "isomorphism";
    else
        r.verdict = "injective-not-surjective";
    return r;
}

KappaInjCriteria kappa_inj_criteria(const FusionSystem& f, const PermGroup& ghat) {
    if (ghat.degree() != f.group().degree())
        throw std::invalid_argument("kappa_inj_criteria: degree mismatch");
    KappaInjCriteria r;
    PermGroup c = centralizer_of_group(ghat, f.sylow().generators());
    for (const Permutation& e : c.elements()) {
        if (e.order() == 2 && !f.group().contains(e))
            r.outer_involutions_centralizing_s.push_back(e);
    }
    const auto& cls = f.classes();
    for (std::size_t i = 0; i < cls.size(); ++i) {
        if (cls[i].class_size != 1 || cls[i].rep.size() == 1) continue;
        PermGroup q = f.subgroup(cls[i].rep);
        BigInt og = out_order_in(f.group(), q);
        BigInt oh = out_order_in(ghat, q);
        if (oh > og)
            r.normal_out_growth.push_back({static_cast<int>(i), oh, og});
    }
    return r;
}

bool normal_in_f(const FusionSystem& f, const PermGroup& q_sub, const HomOptions& opt) {
    const SmallGroup& t = f.table();
    std::vector<int> qidx = t.subgroup_indices(q_sub);
    std::vector<int> full = t.full_set();
    if (t.normalizer_in(full, qidx) != full) return false;

    // strongly closed: G-conjugates in S of elements of Q stay in Q
    std::vector<char> covered(static_cast<std::size_t>(t.size()), 0);
    for (int x : qidx) {
        if (x == 0 || covered[static_cast<std::size_t>(x)]) continue;
        TupleOrbit orb = tuple_orbit(f.group(), {t.element(x)}, opt.max_orbit);
        for (std::size_t i = 0; i < orb.size(); ++i) {
            int iy = t.index_of(slice_perm(orb.node(i), orb.d));
            if (iy < 0) continue;
            if (!contains_sorted(qidx, iy)) return false;
            covered[static_cast<std::size_t>(iy)] = 1;
        }
    }

    // extension: each morphism P -> S has a witness normalizing Q
    PermGroup nq = normalizer(f.group(), q_sub);
    for (const SubgroupClass& c : f.classes()) {
        if (c.rep.size() == 1) continue;
        for (const FusionMorphism& m : hom_f(f, f.subgroup(c.rep), f.sylow(), opt))
            if (!intertwiner(nq, m.source_gens, m.images)) return false;
    }
    return true;
}

ConstrainedReport is_constrained(const FusionSystem& f, const HomOptions& opt) {
    const SmallGroup& t = f.table();
    std::vector<int> full = t.full_set();
    std::vector<int> order;
    const auto& cls = f.classes();
    for (std::size_t i = 0; i < cls.size(); ++i)
        if (cls[i].class_size == 1 && cls[i].rep.size() > 1)
            order.push_back(static_cast<int>(i));
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return cls[static_cast<std::size_t>(a)].rep.size() > cls[static_cast<std::size_t>(b)].rep.size();
    });
    for (int i : order) {
        const std::vector<int>& rep = cls[static_cast<std::size_t>(i)].rep;
        std::vector<int> cs = t.centralizer_in(full, rep);
        if (!std::includes(rep.begin(), rep.end(), cs.begin(), cs.end())) continue;
        if (normal_in_f(f, f.subgroup(rep), opt)) return ConstrainedReport{true, i};
    }
    return ConstrainedReport{false, -1};
}

std::string abelian_type(const FusionSystem& f, const PermGroup& w,
                         const ClassLabeling& labeling) {
    const SmallGroup& t = f.table();
    std::vector<int> widx = t.subgroup_indices(w);
    if (!t.is_elementary_abelian_set(widx, f.prime()))
        throw std::invalid_argument("abelian_type: W is not elementary abelian");
    std::map<std::string, int> counts;
    for (int x : widx) {
        if (x == 0) continue;
        const Permutation& e = t.element(x);
        std::vector<int> ct;
        for (auto [len, cnt] : e.cycle_type())
            ct.insert(ct.end(), cnt, static_cast<int>(len));
        std::vector<const ClassLabel*> hits;
        for (const ClassLabel& l : labeling.labels)
            if (l.cycle_type == ct) hits.push_back(&l);
        if (hits.size() > 1) {
            BigInt co = centralizer(f.group(), e).order();
            std::erase_if(hits, [&](const ClassLabel* l) { return l->centralizer_order != co; });
        }
        if (hits.empty())
            throw std::invalid_argument("abelian_type: element matches no class label");
        if (hits.size() > 1)
            throw std::invalid_argument("abelian_type: element matches several class labels");
        ++counts[hits[0]->name];
    }
    int rank = 0;
    for (std::size_t n = widx.size(); n > 1; n /= static_cast<std::size_t>(f.prime())) ++rank;
    if (counts.size() == 1)
        return counts.begin()->first + "^" + std::to_string(rank);
    std::string out;
    bool first = true;
    for (const auto& [name, cnt] : counts) {
        std::string part = name;
        if (!first) {
            std::size_t i = 0;
            while (i < part.size() && std::isdigit(static_cast<unsigned char>(part[i]))) ++i;
            part = part.substr(i);
        }
        out += part + "_" + std::to_string(cnt);
        first = false;
    }
    return out;
}

} // namespace ff
