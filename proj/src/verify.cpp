// Verification suites: desk-scale expected values over the bundled catalog,
// the M24 case, and the seeded property suite with independent oracles.
#include "ff/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "ff/catalog.hpp"
#include "ff/fusion.hpp"
#include "ff/groupops.hpp"
#include "ff/linking.hpp"
#include "ff/modrep.hpp"
#include "ff/plattice.hpp"
#include "ff/search.hpp"

namespace ff {
namespace {

// --- harness ---

bool expect(std::ostringstream& d, bool ok, const std::string& what) {
    if (!ok) d << " [FAILED: " << what << "]";
    return ok;
}

CheckResult run_check(const std::string& name, double budget_seconds,
                      const std::function<bool(std::ostringstream&)>& body) {
    CheckResult r;
    r.name = name;
    std::ostringstream detail;
    auto t0 = std::chrono::steady_clock::now();
    try {
        r.pass = body(detail);
    } catch (const std::exception& ex) {
        r.pass = false;
        detail << " [exception: " << ex.what() << "]";
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    detail << " (" << std::fixed << std::setprecision(2) << r.seconds << " s";
    if (budget_seconds > 0) {
        detail << ", budget " << std::setprecision(0) << budget_seconds << " s";
        if (r.seconds > budget_seconds) {
            detail << ", EXCEEDED";
            r.pass = false;
        }
    }
    detail << ")";
    r.detail = detail.str();
    return r;
}

const CatalogEntry& entry_named(const std::vector<CatalogEntry>& cat, const std::string& name) {
    for (const CatalogEntry& e : cat)
        if (e.name == name) return e;
    throw std::runtime_error("missing catalog entry '" + name + "'");
}

std::vector<int> prime_factors(std::uint64_t n) {
    std::vector<int> out;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(static_cast<int>(d));
            while (n % d == 0) n /= d;
        }
    if (n > 1) out.push_back(static_cast<int>(n));
    return out;
}

int log2_of(std::size_t n) {
    int k = 0;
    while ((std::size_t{1} << k) < n) ++k;
    return k;
}

}  // namespace

// --- desk-scale results ---

std::vector<CheckResult> verify_paper_small(const std::string& catalog_dir) {
    std::vector<CatalogEntry> cat = load_catalog_dir(catalog_dir);
    std::vector<CheckResult> out;

    out.push_back(run_check("(M11, p=2): SD16 Sylow, two essentials, |Out(F)| = 2, M11 not tame", 10,
                            [&](std::ostringstream& d) {
        AnalysisReport r = analyze(entry_named(cat, "M11"), 2);
        d << "|S| = " << r.sylow_order << ", essentials = " << r.essentials.size() << ", |Out(F)| = "
          << r.out_f_order << ", |Out(G)| = " << r.kappa_out_g << ", verdict '" << r.tameness << "'";
        bool ok = expect(d, r.sylow_order == 16 && !r.s_abelian, "|S| = 16, nonabelian");
        // SD16 among order-16 groups: an element of order 8 and exactly 5
        // involutions (D16 has 9, Q16 has 1, the modular group 3)
        SmallGroup t = SmallGroup::from_group(sylow(entry_named(cat, "M11").group(), 2));
        int inv = 0, max_ord = 1;
        for (int i = 0; i < t.size(); ++i) {
            if (t.order_of(i) == 2) ++inv;
            max_ord = std::max(max_ord, t.order_of(i));
        }
        ok &= expect(d, max_ord == 8 && inv == 5, "S is semidihedral of order 16");
        ok &= expect(d, r.essentials.size() == 2, "exactly 2 essential classes");
        ok &= expect(d, r.out_f_order == "2", "|Out(F)| = 2");
        ok &= expect(d, r.kappa_out_g == "1", "Out(G) = 1 supplied");
        ok &= expect(d, r.tameness == "not tamely realized by G", "tameness verdict");
        return ok;
    }));

    out.push_back(run_check("(J1, p=2): E8 Sylow, fusion controlled by N_G(S) of order 168, |Out(F)| = 1", 60,
                            [&](std::ostringstream& d) {
        AnalysisReport r = analyze(entry_named(cat, "J1"), 2);
        d << "|S| = " << r.sylow_order << " (" << r.center_shape << "), |N_G(S)| = " << r.normalizer_order
          << ", controls(N) = " << (r.controls ? "yes" : "no") << ", |Out(F)| = " << r.out_f_order
          << ", strictly 2-constrained(N) = " << (r.strictly_constrained ? "yes" : "no");
        bool ok = expect(d, r.s_abelian && r.sylow_order == 8 && r.center_shape == "C2 x C2 x C2",
                         "S elementary abelian of order 8");
        ok &= expect(d, r.normalizer_order == 168, "|N_G(S)| = 168");
        ok &= expect(d, r.controls, "N_G(S) controls fusion");
        ok &= expect(d, r.out_f_order == "1", "|Out(F)| = 1");
        ok &= expect(d, r.strictly_constrained, "N_G(S) strictly 2-constrained");
        return ok;
    }));

    out.push_back(run_check("(M12, p=3): extraspecial 3^{1+2}_+ Sylow, |Out_G(S)| = 4, bound 2, kappa-bar iso", 30,
                            [&](std::ostringstream& d) {
        AnalysisReport r = analyze(entry_named(cat, "M12"), 3);
        d << "S = " << r.s_extraspecial_name << ", |Out_G(S)| = " << r.out_g_s_order << ", bound " << r.out_bound
          << " (h1 = " << r.out_bound_h1 << "), kappa-bar " << r.kappa_verdict << " onto Out(F) of order "
          << r.kappa_out_f;
        bool ok = expect(d, r.s_extraspecial && r.s_extraspecial_name == "3^{1+2}_+",
                         "S extraspecial of order 27, exponent 3");
        ok &= expect(d, r.out_g_s_order == 4, "|Out_G(S)| = 4");
        ok &= expect(d, r.out_bound_status == "ok" && r.out_bound_h1 == 0 && r.out_bound == "2",
                     "exact-sequence bound 2 with h1 = 0");
        ok &= expect(d, r.kappa_status == "ok" && r.kappa_verdict == "isomorphism" && r.kappa_out_f == "2" &&
                         r.kappa_image == "2",
                     "kappa-bar isomorphism onto Out(F) of order 2");
        return ok;
    }));

    out.push_back(run_check("(J2, p=3): Out_G(S) cyclic of order 8, N_G(S) controls fusion, |Out(F)| = 2", 60,
                            [&](std::ostringstream& d) {
        AnalysisReport r = analyze(entry_named(cat, "J2"), 3);
        d << "|Out_G(S)| = " << r.out_g_s_order << (r.out_g_s_cyclic ? " (cyclic)" : " (not cyclic)")
          << ", controls(N) = " << (r.controls ? "yes" : "no") << ", |Out(F)| = " << r.out_f_order;
        bool ok = expect(d, r.out_g_s_order == 8 && r.out_g_s_cyclic, "Out_G(S) cyclic of order 8");
        ok &= expect(d, r.controls, "N_G(S) controls fusion");
        ok &= expect(d, r.out_f_order == "2", "|Out(F)| = 2");
        ok &= expect(d, r.kappa_status == "ok" && r.kappa_out_f == "2", "kappa-bar computed with J2:2 data");
        return ok;
    }));

    out.push_back(run_check("(HS, p=2): Z2(S) = C4 x C2", 30, [&](std::ostringstream& d) {
        AnalysisReport r = analyze(entry_named(cat, "HS"), 2);
        d << "|S| = " << r.sylow_order << ", Z(S) = " << r.center_shape << ", Z2(S) = " << r.second_center_shape;
        bool ok = expect(d, r.sylow_order == 512, "|S| = 512");
        ok &= expect(d, r.second_center_order == 8 && r.second_center_shape == "C4 x C2", "Z2(S) = C4 x C2");
        return ok;
    }));

    out.push_back(run_check("(2^4:15:4, p=2): Z-hat = {Z2(S), E16}, |Aut_G(Z2(S))| = 6, Ker(mu) inconclusive", 10,
                            [&](std::ostringstream& d) {
        AnalysisReport r = analyze(entry_named(cat, "2^4:15:4"), 2);
        d << "Z-hat classes:";
        for (const ZHatRow& row : r.z_hat)
            d << " {|W| = " << row.order << ", rank " << row.rank << ", aut " << row.aut_order << ", type "
              << row.type << "}";
        d << ", Ker(mu): " << r.ker_mu;
        bool ok = expect(d, r.z_hat.size() == 2, "two Z-hat classes");
        const ZHatRow* r2 = nullptr;
        const ZHatRow* r4 = nullptr;
        for (const ZHatRow& row : r.z_hat) {
            if (row.rank == 2) r2 = &row;
            if (row.rank == 4) r4 = &row;
        }
        ok &= expect(d, r2 && r2->order == 4 && r2->order == r.second_center_order && r2->aut_order == "6" &&
                         r2->type == "2a^2",
                     "rank-2 member is Z2(S) with automizer of order 6");
        ok &= expect(d, r4 && r4->order == 16 && r4->aut_order == "60" && r4->type == "2a^4",
                     "rank-4 member is E16 with automizer of order 60");
        ok &= expect(d, r.ker_mu == "inconclusive", "Ker(mu) verdict inconclusive");
        return ok;
    }));

    out.push_back(run_check("(M22, p=2): every essential class has index 2 or 4 in S", 300,
                            [&](std::ostringstream& d) {
        AnalysisReport r = analyze(entry_named(cat, "M22"), 2);
        d << "|S| = " << r.sylow_order << ", " << r.essentials.size() << " essential classes, indices";
        std::set<std::uint64_t> indices;
        for (const EssentialRow& row : r.essentials) indices.insert(row.index_in_s);
        for (std::uint64_t ix : indices) d << " " << ix;
        bool ok = expect(d, r.sylow_order == 128, "|S| = 2^7");
        ok &= expect(d, !r.essentials.empty(), "essential classes exist");
        bool small_index = true;
        for (const EssentialRow& row : r.essentials)
            if (row.index_in_s != 2 && row.index_in_s != 4) small_index = false;
        ok &= expect(d, small_index, "every essential index is 2 or 4");
        return ok;
    }));

    return out;
}

// --- the M24 case ---

std::vector<CheckResult> verify_stretch(const std::string& catalog_dir) {
    std::vector<CatalogEntry> cat = load_catalog_dir(catalog_dir);
    std::vector<CheckResult> out;
    out.push_back(run_check("(M24, p=2): Z-hat is two rank-2 classes with index-2 centralizers meeting in J(S)",
                            1800, [&](std::ostringstream& d) {
        PermGroup g = entry_named(cat, "M24").group();
        FusionOptions fo;
        fo.max_lattice = 1024;
        fo.elementary_only = true;
        FusionSystem f = FusionSystem::build(g, 2, fo);
        const PermGroup& s = f.sylow();
        bool ok = expect(d, s.order_u64() == 1024, "|S| = 2^10");
        std::vector<ZhatMember> zh = z_hat(f);
        d << "|S| = " << s.order_u64() << ", " << zh.size() << " Z-hat classes";
        ok &= expect(d, zh.size() == 2, "two Z-hat classes");
        std::vector<PermGroup> cents;
        for (const ZhatMember& m : zh) {
            const SubgroupClass& cls = f.classes()[static_cast<std::size_t>(m.class_index)];
            ok &= expect(d, cls.rank == 2, "Z-hat member of rank 2");
            PermGroup w = f.subgroup(cls.rep);
            PermGroup c = centralizer_of_group(s, w.generators());
            ok &= expect(d, s.order_u64() / c.order_u64() == 2, "[S : C_S(W)] = 2");
            cents.push_back(std::move(c));
        }
        PermGroup j = thompson_subgroup(s);
        d << ", |J(S)| = " << j.order_u64();
        if (cents.size() == 2) {
            // [C_i : J] = 2 with C_1 != C_2 forces C_1 cap C_2 = J
            ok &= expect(d, j.is_subgroup_of(cents[0]) && j.is_subgroup_of(cents[1]),
                         "J(S) inside both centralizers");
            ok &= expect(d, cents[0].order_u64() == 2 * j.order_u64() &&
                             cents[1].order_u64() == 2 * j.order_u64(),
                         "J(S) of index 2 in each centralizer");
            ok &= expect(d, !cents[0].is_subgroup_of(cents[1]), "the two centralizers differ");
        }
        return ok;
    }));
    return out;
}

// --- property suite ---

namespace {

// Every subgroup of t as a sorted element-index list (small t only).
std::vector<std::vector<int>> all_subgroups(const SmallGroup& t) {
    std::set<std::vector<int>> found;
    std::vector<std::vector<int>> queue;
    auto push = [&](std::vector<int> sub) {
        if (found.insert(sub).second) queue.push_back(std::move(sub));
    };
    push(t.closure({}));
    for (std::size_t head = 0; head < queue.size(); ++head) {
        std::vector<int> base = queue[head];
        for (int x = 0; x < t.size(); ++x) {
            if (std::binary_search(base.begin(), base.end(), x)) continue;
            std::vector<int> seed = base;
            seed.push_back(x);
            push(t.closure(seed));
        }
    }
    return {found.begin(), found.end()};
}

// Definitional strongly p-embedded search: some proper M with p | |M| and
// |M cap M^g| coprime to p for every coset of M.
bool sp_embedded_oracle(const PermGroup& h, int p) {
    if (h.order_u64() % static_cast<std::uint64_t>(p) != 0) return false;
    SmallGroup t = SmallGroup::from_group(h, 2048);
    for (const std::vector<int>& m : all_subgroups(t)) {
        if (m.size() == static_cast<std::size_t>(t.size()) || m.size() % static_cast<std::size_t>(p) != 0)
            continue;
        std::vector<char> covered(static_cast<std::size_t>(t.size()), 0);
        for (int x : m) covered[static_cast<std::size_t>(x)] = 1;
        bool good = true;
        for (int g = 0; g < t.size() && good; ++g) {
            if (covered[static_cast<std::size_t>(g)]) continue;
            std::size_t common = 0;
            for (int x : m) {
                covered[static_cast<std::size_t>(t.mul(x, g))] = 1;
                if (std::binary_search(m.begin(), m.end(), t.conj(x, g))) ++common;
            }
            if (common % static_cast<std::size_t>(p) == 0) good = false;
        }
        if (good) return true;
    }
    return false;
}

// O_{p'}(g): the product of all normal subgroups of order coprime to p.
PermGroup p_prime_core(const PermGroup& g, int p) {
    PermGroup n = PermGroup::trivial(g.degree());
    for (const Permutation& x : g.elements(5000)) {
        if (x.order() % static_cast<std::uint64_t>(p) == 0) continue;
        std::vector<Permutation> seeds = n.generators();
        seeds.push_back(x);
        PermGroup k = normal_closure(g, seeds);
        if (k.order() % p != 0) n = std::move(k);
    }
    return n;
}

// the matrix a vector-code permutation came from (codes as in matrix_as_perm)
FpMat mat_of_perm(int p, int d, const Permutation& g) {
    FpMat m(p, d, d);
    std::uint64_t pw = 1;
    for (int i = 0; i < d; ++i) {
        std::uint64_t image = g.images()[static_cast<std::size_t>(pw - 1)] + 1ull;
        for (int j = 0; j < d; ++j) {
            m.at(i, j) = static_cast<std::uint8_t>(image % static_cast<std::uint64_t>(p));
            image /= static_cast<std::uint64_t>(p);
        }
        pw *= static_cast<std::uint64_t>(p);
    }
    return m;
}

// dim of the common fixed space of the given actors
int fixed_dim_of(int p, int d, const std::vector<FpMat>& mats) {
    if (mats.empty()) return d;
    FpMat big(p, d, d * static_cast<int>(mats.size()));
    for (std::size_t k = 0; k < mats.size(); ++k)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                int v = mats[k].at(i, j) - (i == j ? 1 : 0);
                big.at(i, static_cast<int>(k) * d + j) = static_cast<std::uint8_t>(((v % p) + p) % p);
            }
    return d - fp_rank(big);
}

FpMat random_invertible(int p, int d, std::mt19937_64& rng) {
    for (;;) {
        FpMat m(p, d, d);
        for (auto& e : m.a) e = static_cast<std::uint8_t>(rng() % static_cast<std::uint64_t>(p));
        if (invertible(m)) return m;
    }
}

FpMat mat_rows(int p, std::vector<std::vector<int>> rows) {
    int d = static_cast<int>(rows.size());
    FpMat m(p, d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m.at(i, j) = static_cast<std::uint8_t>(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    return m;
}

// --- exhaustive subspace lattice over F_p (cached per (p, d)) ---

std::vector<int> decode_vec(int p, int d, int code) {
    std::vector<int> v(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        v[static_cast<std::size_t>(i)] = code % p;
        code /= p;
    }
    return v;
}

int encode_vec(int p, const std::vector<int>& v) {
    int c = 0;
    for (std::size_t i = v.size(); i-- > 0;) c = c * p + v[i];
    return c;
}

const std::vector<std::vector<int>>& all_subspaces(int p, int d) {
    static std::map<std::pair<int, int>, std::vector<std::vector<int>>> cache;
    auto it = cache.find({p, d});
    if (it != cache.end()) return it->second;
    int n = 1;
    for (int i = 0; i < d; ++i) n *= p;
    auto add_codes = [&](int a, int b) {
        std::vector<int> va = decode_vec(p, d, a), vb = decode_vec(p, d, b);
        for (int i = 0; i < d; ++i)
            va[static_cast<std::size_t>(i)] = (va[static_cast<std::size_t>(i)] + vb[static_cast<std::size_t>(i)]) % p;
        return encode_vec(p, va);
    };
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> queue{{0}};
    seen.insert(queue[0]);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        std::vector<int> s = queue[head];
        for (int v = 1; v < n; ++v) {
            if (std::binary_search(s.begin(), s.end(), v)) continue;
            std::set<int> span;
            int cv = 0;
            for (int c = 0; c < p; ++c) {
                for (int x : s) span.insert(add_codes(x, cv));
                cv = add_codes(cv, v);
            }
            std::vector<int> sp(span.begin(), span.end());
            if (seen.insert(sp).second) queue.push_back(std::move(sp));
        }
    }
    return cache.emplace(std::make_pair(p, d), std::move(queue)).first->second;
}

int apply_actor_code(const FpMat& a, int code) {
    std::vector<int> v = decode_vec(a.p, a.rows, code);
    std::vector<int> r(static_cast<std::size_t>(a.cols), 0);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j)
            r[static_cast<std::size_t>(j)] =
                (r[static_cast<std::size_t>(j)] + v[static_cast<std::size_t>(i)] * a.at(i, j)) % a.p;
    return encode_vec(a.p, r);
}

// irreducibility over F_p by scanning the full subspace lattice
bool irr_by_subspaces(const FpModule& m) {
    if (m.dim == 0) return false;
    int n = 1;
    for (int i = 0; i < m.dim; ++i) n *= m.p;
    for (const std::vector<int>& s : all_subspaces(m.p, m.dim)) {
        if (s.size() == 1 || static_cast<int>(s.size()) == n) continue;
        bool invariant = true;
        for (int code : s) {
            for (const FpMat& a : m.actors)
                if (!std::binary_search(s.begin(), s.end(), apply_actor_code(a, code))) {
                    invariant = false;
                    break;
                }
            if (!invariant) break;
        }
        if (invariant) return false;
    }
    return true;
}

// --- arithmetic in F_{p^e}, elements coded as base-p digit strings ---

struct SmallField {
    int p = 2, e = 1, q = 2;
    std::vector<int> red;  // x^e = red[0] + red[1] x + ...

    std::vector<int> digits(int a) const {
        std::vector<int> v(static_cast<std::size_t>(e));
        for (int i = 0; i < e; ++i) {
            v[static_cast<std::size_t>(i)] = a % p;
            a /= p;
        }
        return v;
    }
    int pack(const std::vector<int>& v) const {
        int c = 0;
        for (std::size_t i = v.size(); i-- > 0;) c = c * p + v[i];
        return c;
    }
    int add(int a, int b) const {
        std::vector<int> va = digits(a), vb = digits(b);
        for (int i = 0; i < e; ++i)
            va[static_cast<std::size_t>(i)] = (va[static_cast<std::size_t>(i)] + vb[static_cast<std::size_t>(i)]) % p;
        return pack(va);
    }
    int mul(int a, int b) const {
        std::vector<int> va = digits(a), vb = digits(b);
        std::vector<int> conv(static_cast<std::size_t>(2 * e - 1), 0);
        for (int i = 0; i < e; ++i)
            for (int j = 0; j < e; ++j)
                conv[static_cast<std::size_t>(i + j)] =
                    (conv[static_cast<std::size_t>(i + j)] + va[static_cast<std::size_t>(i)] * vb[static_cast<std::size_t>(j)]) % p;
        for (int k = 2 * e - 2; k >= e; --k) {
            int c = conv[static_cast<std::size_t>(k)];
            if (!c) continue;
            conv[static_cast<std::size_t>(k)] = 0;
            for (int j = 0; j < e; ++j)
                conv[static_cast<std::size_t>(k - e + j)] =
                    (conv[static_cast<std::size_t>(k - e + j)] + c * red[static_cast<std::size_t>(j)]) % p;
        }
        conv.resize(static_cast<std::size_t>(e));
        return pack(conv);
    }
    int inv(int a) const {
        for (int b = 1; b < q; ++b)
            if (mul(a, b) == 1) return b;
        throw std::logic_error("field inverse of zero");
    }
};

SmallField make_field(int p, int e) {
    SmallField f;
    f.p = p;
    f.e = e;
    f.q = 1;
    for (int i = 0; i < e; ++i) f.q *= p;
    // x^e reduced modulo a fixed irreducible polynomial
    if (p == 2 && e == 2) f.red = {1, 1};        // x^2 + x + 1
    else if (p == 2 && e == 3) f.red = {1, 1, 0};  // x^3 + x + 1
    else if (p == 3 && e == 2) f.red = {2, 0};     // x^2 + 1
    else if (p == 3 && e == 3) f.red = {2, 1, 0};  // x^3 + 2x + 1
    else throw std::invalid_argument("no field table for p^e");
    return f;
}

// does every nonzero seed of F_q^d spin to the whole space?
bool irr_over_extension(const FpModule& m, int e) {
    if (m.dim <= 1) return m.dim == 1;
    SmallField f = make_field(m.p, e);
    int d = m.dim;
    long long total = 1;
    for (int i = 0; i < d; ++i) total *= f.q;
    std::vector<std::vector<int>> basis;     // echelonized, leading entry 1
    std::vector<int> pivots;
    auto reduce_insert = [&](std::vector<int> v) {
        for (std::size_t r = 0; r < basis.size(); ++r) {
            int c = v[static_cast<std::size_t>(pivots[r])];
            if (!c) continue;
            int factor = f.mul(c, f.q - 1 ? f.inv(1) : 1);  // subtract c * basis row
            (void)factor;
            for (int j = 0; j < d; ++j) {
                int prod = f.mul(c, basis[r][static_cast<std::size_t>(j)]);
                // v[j] -= prod
                int neg = prod == 0 ? 0 : f.mul(prod, f.q - 1 == 0 ? 0 : 0);
                (void)neg;
                // additive inverse: (p - digit) per coefficient
                std::vector<int> dp = f.digits(prod);
                for (auto& dd : dp) dd = (f.p - dd) % f.p;
                v[static_cast<std::size_t>(j)] = f.add(v[static_cast<std::size_t>(j)], f.pack(dp));
            }
        }
        int piv = -1;
        for (int j = 0; j < d; ++j)
            if (v[static_cast<std::size_t>(j)]) {
                piv = j;
                break;
            }
        if (piv < 0) return false;
        int lead_inv = f.inv(v[static_cast<std::size_t>(piv)]);
        for (int j = 0; j < d; ++j) v[static_cast<std::size_t>(j)] = f.mul(v[static_cast<std::size_t>(j)], lead_inv);
        basis.push_back(std::move(v));
        pivots.push_back(piv);
        return true;
    };
    for (long long code = 1; code < total; ++code) {
        basis.clear();
        pivots.clear();
        std::vector<int> seed(static_cast<std::size_t>(d));
        long long c = code;
        for (int i = 0; i < d; ++i) {
            seed[static_cast<std::size_t>(i)] = static_cast<int>(c % f.q);
            c /= f.q;
        }
        std::vector<std::vector<int>> work;
        if (reduce_insert(seed)) work.push_back(basis.back());
        for (std::size_t head = 0; head < work.size(); ++head) {
            std::vector<int> v = work[head];
            for (const FpMat& a : m.actors) {
                std::vector<int> w(static_cast<std::size_t>(d), 0);
                for (int i = 0; i < d; ++i) {
                    int vi = v[static_cast<std::size_t>(i)];
                    if (!vi) continue;
                    for (int j = 0; j < d; ++j) {
                        int aij = a.at(i, j);
                        if (!aij) continue;
                        w[static_cast<std::size_t>(j)] = f.add(w[static_cast<std::size_t>(j)], f.mul(vi, aij));
                    }
                }
                if (reduce_insert(w)) work.push_back(basis.back());
            }
            if (static_cast<int>(basis.size()) == d) break;
        }
        if (static_cast<int>(basis.size()) < d) return false;
    }
    return true;
}

// absolute irreducibility by exhaustive submodule scans: irreducible over
// F_p, and over F_{p^r} for every prime r dividing dim
bool abs_irr_oracle(const FpModule& m) {
    if (!irr_by_subspaces(m)) return false;
    for (int r : prime_factors(static_cast<std::uint64_t>(m.dim)))
        if (!irr_over_extension(m, r)) return false;
    return true;
}

}  // namespace

std::vector<CheckResult> verify_properties(const std::string& catalog_dir, std::uint64_t seed) {
    std::vector<CatalogEntry> cat = load_catalog_dir(catalog_dir);
    std::vector<CheckResult> out;

    // (i) hom-set oracle equivalence and category closure
    out.push_back(run_check("property (i): hom_f matches exhaustive conjugation and is composition-closed", 0,
                            [&](std::ostringstream& d) {
        bool ok = true;
        std::size_t npairs = 0, nhom = 0;
        for (const CatalogEntry& e : cat) {
            if (e.order > 5000) continue;
            PermGroup g = e.group();
            std::vector<Permutation> gels = g.elements(5000);
            for (int p : prime_factors(static_cast<std::uint64_t>(e.order))) {
                FusionSystem f = FusionSystem::build(g, p);
                const SmallGroup& t = f.table();
                const PermGroup& s = f.sylow();
                auto tuple_of = [&](const std::vector<Permutation>& imgs) {
                    std::optional<std::vector<int>> r{std::in_place};
                    for (const Permutation& x : imgs) {
                        int ix = t.index_of(x);
                        if (ix < 0) return std::optional<std::vector<int>>{};
                        r->push_back(ix);
                    }
                    return r;
                };
                std::vector<FusionMorphism> auts = hom_f(f, s, s);
                for (const SubgroupClass& cls : f.classes()) {
                    std::vector<Permutation> gens;
                    for (int ix : f.generating_sequence(cls.rep)) gens.push_back(t.element(ix));
                    PermGroup psub = f.subgroup(cls.rep);
                    std::vector<FusionMorphism> hom = hom_f(f, psub, s);
                    std::set<std::vector<int>> tuples;
                    for (const FusionMorphism& mo : hom) {
                        ok &= expect(d, g.contains(mo.witness), "witness lies in G");
                        bool matches = mo.source_gens == gens;
                        for (std::size_t k = 0; k < mo.images.size() && matches; ++k)
                            if (!(mo.source_gens[k].conjugated_by(mo.witness) == mo.images[k])) matches = false;
                        ok &= expect(d, matches, "witness induces the recorded images");
                        auto tp = tuple_of(mo.images);
                        ok &= expect(d, tp.has_value(), "images land in S");
                        if (tp) tuples.insert(*tp);
                    }
                    ok &= expect(d, tuples.size() == hom.size(), "induced maps pairwise distinct");
                    std::set<std::vector<int>> oracle;
                    for (const Permutation& x : gels) {
                        std::vector<Permutation> imgs;
                        for (const Permutation& y : gens) imgs.push_back(y.conjugated_by(x));
                        if (auto tp = tuple_of(imgs)) oracle.insert(*tp);
                    }
                    if (!expect(d, tuples == oracle,
                                e.name + " p=" + std::to_string(p) + " |P|=" + std::to_string(cls.rep.size())))
                        ok = false;
                    if (hom.size() <= 64 && auts.size() <= 64)
                        for (const FusionMorphism& mo : hom)
                            for (const FusionMorphism& a : auts) {
                                std::vector<Permutation> imgs;
                                for (const Permutation& y : mo.images) imgs.push_back(y.conjugated_by(a.witness));
                                auto tp = tuple_of(imgs);
                                bool closed = tp && tuples.count(*tp);
                                if (!closed) {
                                    expect(d, false, "post-composition stays in hom_f");
                                    ok = false;
                                }
                            }
                    ++nhom;
                }
                ++npairs;
            }
        }
        d << npairs << " (group, prime) pairs, " << nhom << " hom-sets against the element-scan oracle";
        return ok && expect(d, npairs >= 10, "corpus is nonempty");
    }));

    // (ii) strongly p-embedded graph criterion vs definitional search
    out.push_back(run_check("property (ii): strongly p-embedded graph criterion matches the definitional search", 0,
                            [&](std::ostringstream& d) {
        bool ok = true;
        std::size_t checked = 0;
        for (const CatalogEntry& e : cat) {
            if (e.order > 5000) continue;
            PermGroup g = e.group();
            for (int p : prime_factors(static_cast<std::uint64_t>(e.order))) {
                FusionSystem f = FusionSystem::build(g, p);
                for (const SubgroupClass& cls : f.classes()) {
                    PermGroup w = f.subgroup(cls.rep);
                    if (!is_fully_normalized(f, w) || !is_p_centric(f, w)) continue;
                    PermGroup o = out_g(f, w);
                    if (o.order() > 2000) continue;
                    bool graph = has_strongly_p_embedded(o, p);
                    bool oracle = sp_embedded_oracle(o, p);
                    if (!expect(d, graph == oracle,
                                e.name + " p=" + std::to_string(p) + " Out_G(P) of order " + o.order().str()))
                        ok = false;
                    ++checked;
                }
                for (const ZhatMember& m : z_hat(f)) {
                    if (m.aut_image.order() > 2000) continue;
                    bool graph = has_strongly_p_embedded(m.aut_image, p);
                    bool oracle = sp_embedded_oracle(m.aut_image, p);
                    if (!expect(d, graph == oracle, e.name + " automizer")) ok = false;
                    ++checked;
                }
            }
        }
        d << checked << " automizer groups against the all-subgroup search";
        return ok && expect(d, checked >= 50, "enough instances");
    }));

    // (iii) index-2 centralizers of elementary abelian subgroups
    out.push_back(run_check("property (iii): [S:C_S(W)] = 2 forces W <= Z2(S) and rk W <= 2 rk Z(S)", 0,
                            [&](std::ostringstream& d) {
        bool ok = true;
        std::size_t groups = 0, fired = 0;
        for (const CatalogEntry& e : cat) {
            if (e.order % 2 != 0) continue;
            PermGroup s = sylow(e.group(), 2);
            if (s.order_u64() > 512 || s.order_u64() < 4) continue;
            SmallGroup t = SmallGroup::from_group(s);
            std::vector<int> full = t.full_set();
            std::vector<int> z = t.center_of(full);
            std::vector<int> z2 = t.center_preimage(full, z);
            int zrank = log2_of(t.omega1_of(z, 2).size());
            SubgroupClassOptions sopt;
            sopt.elementary_only = true;
            for (const SubgroupClass& cls : subgroup_classes(t, 2, sopt)) {
                if (cls.rep.size() < 2) continue;
                std::vector<int> c = t.centralizer_in(full, cls.rep);
                if (full.size() / c.size() != 2) continue;
                ++fired;
                bool inside = true;
                for (int x : cls.rep)
                    if (!std::binary_search(z2.begin(), z2.end(), x)) inside = false;
                if (!expect(d, inside, e.name + ": W <= Z2(S)")) ok = false;
                if (!expect(d, cls.rank <= 2 * zrank, e.name + ": rk W <= 2 rk Z(S)")) ok = false;
            }
            ++groups;
        }
        d << groups << " Sylow 2-subgroups, " << fired << " index-2 instances (up to S-conjugacy)";
        return ok && expect(d, fired >= 10, "hypothesis fires");
    }));

    // (iv) restriction Out_G(P) -> Aut_G(W) for Z-hat pairs
    out.push_back(run_check("property (iv): Out_G(C_S(W)) -> Aut_G(W) is onto with kernel of odd order", 0,
                            [&](std::ostringstream& d) {
        bool ok = true;
        std::size_t npairs = 0;
        for (const CatalogEntry& e : cat) {
            PermGroup g = e.group();
            if (g.order() % 2 != 0) continue;
            FusionOptions fo;
            fo.max_lattice = 512;
            PermGroup s0 = sylow(g, 2);
            if (s0.order_u64() > 512) continue;
            fo.elementary_only = s0.order_u64() > 256;
            FusionSystem f = FusionSystem::build(g, 2, fo);
            const PermGroup& s = f.sylow();
            for (const ZhatMember& m : z_hat(f)) {
                PermGroup w = f.subgroup(f.classes()[static_cast<std::size_t>(m.class_index)].rep);
                PermGroup pc = centralizer_of_group(s, w.generators());
                std::string tag = e.name + " |W| = " + w.order().str();
                // hypotheses: W = Omega_1(Z(P)) and P Sylow in C_G(W)
                PermGroup w1 = omega1(center(pc));
                bool hyp = w1.order() == w.order();
                for (const Permutation& x : w.generators())
                    if (!w1.contains(x)) hyp = false;
                PermGroup cgw = centralizer_of_group(g, w.generators());
                hyp = hyp && p_part(cgw.order(), 2) == pc.order();
                if (!expect(d, hyp, tag + " hypotheses")) {
                    ok = false;
                    continue;
                }
                PermGroup np = normalizer(g, pc);
                PermGroup cgp = centralizer_of_group(g, pc.generators());
                PermGroup zp = center(pc);
                BigInt cgp_p = cgp.order() * pc.order() / zp.order();  // |C_G(P) P|
                PermGroup k = np;
                for (const Permutation& x : w.generators()) k = centralizer(k, x);
                bool div = k.order() % cgp_p == 0;
                BigInt kern = div ? k.order() / cgp_p : BigInt(0);
                if (!expect(d, div && kern % 2 == 1, tag + " kernel of odd order")) ok = false;
                if (!expect(d, np.order() % k.order() == 0 && np.order() / k.order() == m.aut_order,
                            tag + " restriction onto Aut_G(W)"))
                    ok = false;
                ++npairs;
            }
        }
        d << npairs << " (W, C_S(W)) pairs from Z-hat";
        return ok && expect(d, npairs >= 3, "pairs exist");
    }));

    // (v) H^1 vanishes under fixed-point-free p'-cores
    out.push_back(run_check("property (v): h1 = 0 whenever the p'-core acts without nonzero fixed points", 0,
                            [&](std::ostringstream& d) {
        std::mt19937_64 rng(seed);
        bool ok = true;
        std::size_t applicable = 0;
        struct Base {
            int p;
            std::vector<FpMat> actors;
        };
        std::vector<Base> bases;
        bases.push_back({3, {mat_rows(3, {{0, 1}, {2, 0}}), mat_rows(3, {{1, 1}, {0, 1}})}});  // SL(2,3)
        bases.push_back({2,
                         {mat_rows(2, {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 1, 1, 1}}),
                          mat_rows(2, {{1, 0, 0, 0}, {0, 0, 1, 0}, {1, 1, 1, 1}, {0, 1, 0, 0}})}});  // 5:4 on F16
        bases.push_back({2,
                         {mat_rows(2, {{0, 1, 0}, {0, 0, 1}, {1, 1, 0}}),
                          mat_rows(2, {{1, 0, 0}, {0, 0, 1}, {0, 1, 1}})}});  // 7:3 on F8
        std::vector<Base> corpus;
        for (const Base& b : bases) {
            corpus.push_back(b);
            int dd = b.actors[0].rows;
            for (int trial = 0; trial < 2; ++trial) {
                FpMat r = random_invertible(b.p, dd, rng);
                FpMat ri = inverse(r);
                Base conj{b.p, {}};
                for (const FpMat& a : b.actors) conj.actors.push_back(fp_mul(fp_mul(ri, a), r));
                corpus.push_back(std::move(conj));
            }
            // direct sum of the module with a conjugate of itself
            FpMat r = random_invertible(b.p, dd, rng);
            FpMat ri = inverse(r);
            Base sum{b.p, {}};
            for (const FpMat& a : b.actors) {
                FpMat a2 = fp_mul(fp_mul(ri, a), r);
                FpMat blk(b.p, 2 * dd, 2 * dd);
                for (int i = 0; i < dd; ++i)
                    for (int j = 0; j < dd; ++j) {
                        blk.at(i, j) = a.at(i, j);
                        blk.at(dd + i, dd + j) = a2.at(i, j);
                    }
                sum.actors.push_back(std::move(blk));
            }
            corpus.push_back(std::move(sum));
        }
        for (const Base& b : corpus) {
            int dm = b.actors[0].rows;
            std::uint64_t npoints = 1;
            for (int i = 0; i < dm; ++i) npoints *= static_cast<std::uint64_t>(b.p);
            std::vector<Permutation> perms;
            for (const FpMat& a : b.actors) perms.push_back(matrix_as_perm(a));
            PermGroup g = PermGroup::from_generators(npoints - 1, perms);
            if (!expect(d, g.generators().size() == b.actors.size(), "faithful nonidentity actors")) {
                ok = false;
                continue;
            }
            FpModule m;
            m.p = b.p;
            m.dim = dm;
            m.actors = b.actors;
            m.group = g;
            PermGroup core = p_prime_core(g, b.p);
            std::vector<FpMat> core_mats;
            for (const Permutation& x : core.generators()) core_mats.push_back(mat_of_perm(b.p, dm, x));
            if (core.is_trivial() || fixed_dim_of(b.p, dm, core_mats) != 0) continue;
            ++applicable;
            if (!expect(d, h1(m) == 0, "h1 = 0 at p = " + std::to_string(b.p) + ", dim " + std::to_string(dm)))
                ok = false;
        }
        // control: with a fixed point of the (trivial) core, h1 can be nonzero
        {
            FpModule m;
            m.p = 2;
            m.dim = 1;
            m.actors = {FpMat::identity(2, 1)};
            m.group = PermGroup::from_generators(2, {parse_cycles(2, "(1 2)")});
            ok &= expect(d, h1(m) == 1, "control: trivial C2-module has h1 = 1");
        }
        d << applicable << " fixed-point-free instances, all with vanishing h1";
        return ok && expect(d, applicable >= 9, "corpus is nonempty");
    }));

    // (vi) absolute irreducibility against exhaustive submodule scans
    out.push_back(run_check("property (vi): absolute irreducibility matches exhaustive submodule scans", 0,
                            [&](std::ostringstream& d) {
        std::mt19937_64 rng(seed + 1);
        bool ok = true;
        std::size_t nmod = 0, nabs = 0;
        std::vector<FpModule> corpus;
        auto push_mod = [&](int p, std::vector<FpMat> actors) {
            FpModule m;
            m.p = p;
            m.dim = actors[0].rows;
            m.actors = std::move(actors);
            corpus.push_back(std::move(m));
        };
        push_mod(3, {mat_rows(3, {{0, 1}, {2, 0}})});                                    // C4: irr, not abs
        push_mod(2, {mat_rows(2, {{0, 1, 0}, {0, 0, 1}, {1, 1, 0}})});                   // C7: irr, not abs
        push_mod(2, {mat_rows(2, {{0, 1}, {1, 1}})});                                    // C3: irr, not abs
        push_mod(3, {mat_rows(3, {{0, 1}, {2, 0}}), mat_rows(3, {{1, 1}, {0, 1}})});     // SL(2,3): abs
        push_mod(2, {mat_rows(2, {{0, 1, 0}, {0, 0, 1}, {1, 1, 0}}),
                     mat_rows(2, {{1, 0, 0}, {0, 0, 1}, {0, 1, 1}})});                   // 7:3: abs
        push_mod(2, {mat_rows(2, {{1, 1}, {0, 1}}), mat_rows(2, {{1, 0}, {1, 1}})});     // SL(2,2): abs
        for (int p : {2, 3})
            for (int dm = 1; dm <= 4; ++dm)
                for (int ngens = 1; ngens <= 2; ++ngens)
                    for (int trial = 0; trial < 3; ++trial) {
                        std::vector<FpMat> actors;
                        for (int i = 0; i < ngens; ++i) actors.push_back(random_invertible(p, dm, rng));
                        push_mod(p, std::move(actors));
                    }
        for (const FpModule& m : corpus) {
            bool irr = is_irreducible(m).irreducible;
            if (!expect(d, irr == irr_by_subspaces(m),
                        "irreducibility p=" + std::to_string(m.p) + " dim " + std::to_string(m.dim)))
                ok = false;
            bool abs = is_absolutely_irreducible(m);
            if (!expect(d, abs == abs_irr_oracle(m),
                        "absolute irreducibility p=" + std::to_string(m.p) + " dim " + std::to_string(m.dim)))
                ok = false;
            ++nmod;
            if (abs) ++nabs;
        }
        d << nmod << " modules (" << nabs << " absolutely irreducible) against subspace and extension scans";
        return ok && expect(d, nmod >= 50 && nabs >= 5 && nabs < nmod, "corpus covers both outcomes");
    }));

    return out;
}

}  // namespace ff
