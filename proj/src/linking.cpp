// Linking-system orders, strict p-constraint, the exact-sequence Out(H)
// bound over GL_r(p) as a permutation group, and the Ker(mu) / tameness
// verdicts.
#include "ff/linking.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ff/groupops.hpp"
#include "ff/plattice.hpp"
#include "ff/search.hpp"

namespace ff {

namespace {

bool small_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

int primitive_root(int p) {
    for (int g = 2; g < p; ++g) {
        int x = g, ord = 1;
        while (x != 1) {
            x = (x * g) % p;
            ++ord;
        }
        if (ord == p - 1) return g;
    }
    return 1;  // p = 2
}

std::uint64_t u64_pow(std::uint64_t base, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= base;
    return r;
}

// (p, rank) when q is elementary abelian of prime-power order, else rank 0
std::pair<int, int> elementary_shape(const PermGroup& q) {
    std::uint64_t n = q.order_u64();
    if (n < 2 || !q.is_abelian()) return {0, 0};
    std::uint64_t p = 2;
    while (n % p != 0) ++p;
    int rank = 0;
    std::uint64_t m = n;
    while (m % p == 0) {
        m /= p;
        ++rank;
    }
    if (m != 1) return {0, 0};
    for (const Permutation& x : q.generators()) {
        std::uint64_t o = x.order();
        if (o != 1 && o != p) return {0, 0};
    }
    return {static_cast<int>(p), rank};
}

}  // namespace

Permutation matrix_as_perm(const FpMat& m) {
    if (m.rows != m.cols || !fp_invertible(m))
        throw std::invalid_argument("matrix_as_perm: need an invertible square matrix");
    const int p = m.p, r = m.rows;
    std::size_t npts = 1;
    for (int i = 0; i < r; ++i) npts *= static_cast<std::size_t>(p);
    --npts;
    std::vector<Point> img(npts);
    std::vector<int> v(static_cast<std::size_t>(r));
    for (std::size_t code = 1; code <= npts; ++code) {
        std::size_t c = code;
        for (int i = 0; i < r; ++i) {
            v[static_cast<std::size_t>(i)] = static_cast<int>(c % static_cast<std::size_t>(p));
            c /= static_cast<std::size_t>(p);
        }
        std::size_t w = 0, place = 1;
        for (int j = 0; j < r; ++j) {
            int wj = 0;
            for (int i = 0; i < r; ++i) wj += v[static_cast<std::size_t>(i)] * m.at(i, j);
            w += static_cast<std::size_t>(wj % p) * place;
            place *= static_cast<std::size_t>(p);
        }
        img[code - 1] = static_cast<Point>(w - 1);
    }
    return Permutation(std::move(img));
}

PermGroup gl_as_perm_group(int p, int rank) {
    if (!small_prime(p) || p > 13)
        throw std::invalid_argument("gl_as_perm_group: p must be a prime <= 13");
    if (rank < 1 || rank > 4)
        throw std::invalid_argument("gl_as_perm_group: rank must be between 1 and 4");
    std::vector<FpMat> gens;
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
            if (i == j) continue;
            FpMat t = FpMat::identity(p, rank);
            t.at(i, j) = 1;
            gens.push_back(t);
        }
    if (p > 2) {
        FpMat d = FpMat::identity(p, rank);
        d.at(0, 0) = static_cast<std::uint8_t>(primitive_root(p));
        gens.push_back(d);
    }
    std::size_t degree = u64_pow(static_cast<std::uint64_t>(p), rank) - 1;
    std::vector<Permutation> perms;
    for (const FpMat& m : gens) perms.push_back(matrix_as_perm(m));
    PermGroup gl = PermGroup::from_generators(degree, perms);
    std::uint64_t expected = 1, q = u64_pow(static_cast<std::uint64_t>(p), rank);
    for (int i = 0; i < rank; ++i)
        expected *= q - u64_pow(static_cast<std::uint64_t>(p), i);
    if (gl.order_u64() != expected)
        throw std::logic_error("gl_as_perm_group: generator set failed the order check");
    return gl;
}

std::uint64_t normalizer_in_out(const PermGroup& q, const std::vector<FpMat>& h_star_action) {
    auto [p, rank] = elementary_shape(q);
    if (rank == 0) {
        ExtraspecialInfo info = is_extraspecial(q);
        if (info.is_extraspecial && info.k == 1) {
            p = info.p;
            rank = 2;
        } else {
            throw std::invalid_argument(
                "normalizer_in_out: Q must be elementary abelian or extraspecial of order p^3");
        }
    }
    if (rank > 4)
        throw std::invalid_argument("normalizer_in_out: elementary abelian rank exceeds 4");
    for (const FpMat& m : h_star_action)
        if (m.p != p || m.rows != rank || m.cols != rank || !fp_invertible(m))
            throw std::invalid_argument(
                "normalizer_in_out: action matrices must be invertible of matching shape");
    PermGroup gl = gl_as_perm_group(p, rank);
    std::vector<Permutation> perms;
    for (const FpMat& m : h_star_action) perms.push_back(matrix_as_perm(m));
    PermGroup h_star = PermGroup::from_generators(gl.degree(), perms).reduced();
    PermGroup n = normalizer(gl, h_star);
    return n.order_u64() / h_star.order_u64();
}

LinkingLocalData linking_local(const FusionSystem& f, const PermGroup& p_sub) {
    if (!is_p_centric(f, p_sub))
        throw std::invalid_argument("linking_local: P is not p-centric");
    const PermGroup& g = f.group();
    const std::uint64_t p = static_cast<std::uint64_t>(f.prime());
    PermGroup c = centralizer_of_group(g, p_sub.generators());
    std::vector<Permutation> parts;
    for (const Permutation& x : c.generators()) {
        std::uint64_t pk = static_cast<std::uint64_t>(p_part(BigInt(x.order()), p));
        parts.push_back(x.power(static_cast<std::int64_t>(pk)));
    }
    PermGroup c_prime = PermGroup::from_generators(g.degree(), parts).reduced();
    PermGroup z = center(p_sub);
    if (z.order_u64() * c_prime.order_u64() != c.order_u64() ||
        intersection(z, c_prime).order_u64() != 1)
        throw std::logic_error("linking_local: C_G(P) did not split as Z(P) x C'");
    std::uint64_t n = normalizer(g, p_sub).order_u64();
    if (n % c_prime.order_u64() != 0)
        throw std::logic_error("linking_local: |C'| does not divide |N_G(P)|");
    return {p_sub, c_prime, n / c_prime.order_u64()};
}

bool strictly_p_constrained(const PermGroup& h, int p) {
    PermGroup o = p_core(h, static_cast<std::uint64_t>(p));
    PermGroup c = centralizer_of_group(h, o.generators());
    return c.is_subgroup_of(o);
}

OutBoundReport out_bound_exact_sequence(const PermGroup& h, const PermGroup& q) {
    for (const Permutation& x : q.generators())
        if (!h.contains(x)) throw std::invalid_argument("out_bound_exact_sequence: Q is not inside H");
    for (const Permutation& hg : h.generators())
        for (const Permutation& qg : q.generators())
            if (!q.contains(qg.conjugated_by(hg)))
                throw std::invalid_argument("out_bound_exact_sequence: Q is not normal in H");
    PermGroup c = centralizer_of_group(h, q.generators());
    if (!c.is_subgroup_of(q))
        throw std::invalid_argument("out_bound_exact_sequence: C_H(Q) is not contained in Q");

    OutBoundReport rep;
    int p = 0;
    auto [ep, rank] = elementary_shape(q);
    if (rank > 0) {
        p = ep;
        FpModule m = module_from_action(h, q, ModuleSpec::natural);
        // generators acting trivially on Q lie in C_H(Q) = Q and vanish in
        // H*; drop the (matrix, permutation) pairs together so the actor
        // list stays aligned with the generator list of the attached group
        FpMat idm = FpMat::identity(p, rank);
        std::vector<FpMat> actors;
        std::vector<Permutation> perms;
        for (const FpMat& a : m.actors) {
            if (a == idm) continue;
            actors.push_back(a);
            perms.push_back(matrix_as_perm(a));
        }
        std::size_t deg = u64_pow(static_cast<std::uint64_t>(p), rank) - 1;
        PermGroup h_star = PermGroup::from_generators(deg, perms);
        FpModule mstar{p, rank, actors, h_star};
        rep.h1_dim = h1(mstar);
        rep.normalizer_quotient_order = normalizer_in_out(q, m.actors);
        rep.notes = "H* = image of H in GL_" + std::to_string(rank) + "(" + std::to_string(p) +
                    ") of order " + std::to_string(h_star.order_u64());
    } else {
        ExtraspecialInfo info = is_extraspecial(q);
        if (!info.is_extraspecial || info.k != 1)
            throw std::invalid_argument(
                "out_bound_exact_sequence: Q must be elementary abelian or extraspecial of order p^3");
        p = info.p;
        PermGroup z = center(q);
        FpModule mz = module_from_action(h, z, ModuleSpec::natural);
        CosetAction ca(h, q);
        FpMat idm = FpMat::identity(p, 1);
        std::vector<FpMat> actors;
        std::vector<Permutation> perms;
        for (std::size_t i = 0; i < mz.actors.size(); ++i) {
            const Permutation& gi = ca.generator_images()[i];
            if (gi.is_identity()) {
                if (!(mz.actors[i] == idm))
                    throw std::logic_error(
                        "out_bound_exact_sequence: generator in Q acts nontrivially on Z(Q)");
                continue;
            }
            actors.push_back(mz.actors[i]);
            perms.push_back(gi);
        }
        PermGroup h_star = PermGroup::from_generators(ca.index(), perms);
        FpModule mstar{p, 1, actors, h_star};
        rep.h1_dim = h1(mstar);
        FpModule mq = module_from_action(h, q, ModuleSpec::frattini_quotient);
        rep.normalizer_quotient_order = normalizer_in_out(q, mq.actors);
        rep.notes = "Out(Q) taken through its image in GL_2(" + std::to_string(p) +
                    ") on Q/Z(Q); H* = H/Q of order " + std::to_string(h_star.order_u64());
    }
    rep.out_h_upper_bound =
        u64_pow(static_cast<std::uint64_t>(p), rep.h1_dim) * rep.normalizer_quotient_order;
    return rep;
}

KerMuReport ker_mu_verdict(const FusionSystem& f) {
    if (f.prime() != 2)
        return {"inconclusive",
                "criterion stated for p = 2 only (p = " + std::to_string(f.prime()) + ")"};
    std::vector<ZhatMember> zh = z_hat(f);
    if (zh.empty()) return {"trivial_by_empty", "Z-hat(F) is empty"};
    if (zh.size() == 1) {
        PermGroup z = center(f.sylow());
        if (z.order_u64() == 2) return {"trivial_by_singleton", "|Z-hat(F)| = 1 and |Z(S)| = 2"};
        PermGroup w = omega1(z);
        if (hom_f(f, w, w).size() == 1)
            return {"trivial_by_singleton", "|Z-hat(F)| = 1 and Aut_F(Omega_1(Z(S))) = 1"};
        return {"inconclusive",
                "|Z-hat(F)| = 1 but |Z(S)| > 2 and Aut_F(Omega_1(Z(S))) != 1"};
    }
    return {"inconclusive", "|Z-hat(F)| = " + std::to_string(zh.size())};
}

TamenessReport tameness_verdict(const KappaBarReport& kb, int p,
                                const std::optional<KerMuReport>& ker_mu) {
    TamenessReport r;
    if (kb.verdict == "isomorphism") {
        if (p != 2) {
            r.verdict = "kappa isomorphism";
            r.statement =
                "kappa_G is an isomorphism (mu is an isomorphism at odd p); F is tamely "
                "realized by G.";
        } else if (ker_mu && (ker_mu->verdict == "trivial_by_empty" ||
                              ker_mu->verdict == "trivial_by_singleton")) {
            r.verdict = "kappa isomorphism";
            r.statement = "kappa_G is an isomorphism (Ker(mu_G) trivial: " + ker_mu->note +
                          "); F is tamely realized by G.";
        } else {
            r.verdict = "kappa-bar isomorphism, mu unresolved";
            r.statement =
                "kappa-bar_G is an isomorphism but Ker(mu_G) is unresolved; no tameness "
                "conclusion for G.";
        }
    } else if (kb.verdict == "injective-not-surjective") {
        r.verdict = "not tamely realized by G";
        r.statement = "kappa-bar_G is injective but not surjective (|Out(F)| = " +
                      kb.out_f_order.str() + ", image order " + kb.image_order.str() +
                      "); F is not tamely realized by G; a tame realization must come from "
                      "another group.";
    } else {
        r.verdict = "kappa-bar kernel-nontrivial";
        r.statement = "kappa-bar_G has a nontrivial kernel (order " + kb.kernel_order.str() +
                      "); no tameness conclusion for G.";
    }
    return r;
}

}  // namespace ff
