// Unit tests for fusion systems: hom sets against exhaustive conjugation,
// strongly p-embedded detection against a definitional subgroup search,
// essential classes, Z-hat, Aut(F)/Out(F), kappa-bar, and F-normality.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ff/fusion.hpp"
#include "ff/groupops.hpp"
#include "ff/search.hpp"

using namespace ff;

namespace {

PermGroup from_cycles(std::size_t degree, const std::vector<std::string>& cyc) {
    std::vector<Permutation> gens;
    for (const auto& c : cyc) gens.push_back(parse_cycles(degree, c));
    return PermGroup::from_generators(degree, gens);
}

PermGroup s4() { return from_cycles(4, {"(1 2)", "(1 2 3 4)"}); }
PermGroup s5() { return from_cycles(5, {"(1 2)", "(1 2 3 4 5)"}); }
PermGroup s6() { return from_cycles(6, {"(1 2)", "(1 2 3 4 5 6)"}); }
PermGroup a4() { return from_cycles(4, {"(1 2 3)", "(2 3 4)"}); }
PermGroup a5() { return from_cycles(5, {"(1 2 3)", "(1 2 3 4 5)"}); }
PermGroup a6() { return from_cycles(6, {"(1 2 3)", "(2 3 4 5 6)"}); }
PermGroup s3() { return from_cycles(3, {"(1 2)", "(1 2 3)"}); }
PermGroup c6() { return from_cycles(6, {"(1 2 3 4 5 6)"}); }
PermGroup d8() { return from_cycles(4, {"(1 2 3 4)", "(2 4)"}); }
PermGroup gl32() { return from_cycles(7, {"(1 2 4 3 6 7 5)", "(1 3)(5 7)"}); }

PermGroup m11() {
    return from_cycles(11, {"(1 2 3 4 5 6 7 8 9 10 11)", "(3 7 11 8)(4 10 5 6)"});
}

PermGroup m12() {
    return from_cycles(12, {"(1 9 7)(2 3 8)(4 6 11)(5 12 10)", "(3 4 10 8)(6 9 12 7)"});
}

// M12 and M12:2 on 24 points
PermGroup m12_in_24() {
    return from_cycles(
        24, {"(1 2 14 22)(3 15 19 7)(4 23 21 18)(6 24 12 10)(8 11)(9 13)",
             "(1 21 2 20 23 5 16 22 14 18 17)(3 9 7 13 6 11 12 19 15 24 10)"});
}

PermGroup m12_ext_24() {
    std::vector<Permutation> gens = m12_in_24().generators();
    gens.push_back(parse_cycles(24,
        "(1 11 14 3 17 7 5 10 20 19)(2 15 22 9 4 24 21 8 18 13)(6 16)(12 23)"));
    gens.push_back(parse_cycles(24,
        "(1 16 23 5 17)(2 14 20 21 4)(3 12 24 6 8)(7 11 10 13 19)"));
    return PermGroup::from_generators(24, gens);
}

PermGroup ex960() {
    return from_cycles(16, {"(1 2)(3 4)(5 6)(7 8)(9 10)(11 12)(13 14)(15 16)",
                            "(2 3 5 9 4 7 13 12 6 11 8 15 16 14 10)",
                            "(3 5 4 6)(7 8)(9 13 16 11)(10 14 15 12)"});
}

// SL(2,3) on the eight nonzero vectors of F_3^2; vector (a,b) -> index 3a+b-1.
PermGroup sl23() {
    auto act = [](int mat[4]) {
        std::vector<Point> img(8);
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) {
                if (a == 0 && b == 0) continue;
                int ra = (a * mat[0] + b * mat[2]) % 3;
                int rb = (a * mat[1] + b * mat[3]) % 3;
                img[static_cast<std::size_t>(3 * a + b - 1)] =
                    static_cast<Point>(3 * ra + rb - 1);
            }
        return Permutation(img);
    };
    int x[4] = {1, 1, 0, 1};
    int y[4] = {0, 2, 1, 0};
    return PermGroup::from_generators(8, {act(x), act(y)});
}

// PSL(2,9) and PGL(2,9) on the ten points of the projective line over
// F_9 = F_3[i], i^2 = -1.  Point indices: 0..8 encode a+bi as 3a+b (the
// affine line), 9 is infinity.
struct F9 {
    // multiplication in F_9, elements encoded 0..8 as 3a+b for a+bi
    static int mul(int u, int v) {
        int a = u / 3, b = u % 3, c = v / 3, d = v % 3;
        int ra = (a * c + 2 * b * d) % 3;  // i^2 = -1 = 2
        int rb = (a * d + b * c) % 3;
        return 3 * ra + rb;
    }
    static int add(int u, int v) { return 3 * ((u / 3 + v / 3) % 3) + (u % 3 + v % 3) % 3; }
    static int inv(int u) {
        for (int v = 1; v < 9; ++v)
            if (mul(u, v) == 1) return v;
        throw std::logic_error("F9 inverse of zero");
    }
    static int neg(int u) { return 3 * ((3 - u / 3) % 3) + (3 - u % 3) % 3; }
};

Permutation moebius_shift() {  // x -> x + 1
    std::vector<Point> img(10);
    for (int x = 0; x < 9; ++x) img[static_cast<std::size_t>(x)] = static_cast<Point>(F9::add(x, 3));
    img[9] = 9;
    return Permutation(img);
}

Permutation moebius_scale(int z) {  // x -> z*x
    std::vector<Point> img(10);
    for (int x = 0; x < 9; ++x) img[static_cast<std::size_t>(x)] = static_cast<Point>(F9::mul(z, x));
    img[9] = 9;
    return Permutation(img);
}

Permutation moebius_winv() {  // x -> -1/x
    std::vector<Point> img(10);
    img[0] = 9;
    img[9] = 0;
    for (int x = 1; x < 9; ++x)
        img[static_cast<std::size_t>(x)] = static_cast<Point>(F9::neg(F9::inv(x)));
    return Permutation(img);
}

PermGroup psl29() {
    // x+1, zeta^2 * x, -1/x  with zeta = 1+i a generator of F_9^*
    int zeta = 4;
    return PermGroup::from_generators(
        10, {moebius_shift(), moebius_scale(F9::mul(zeta, zeta)), moebius_winv()});
}

PermGroup pgl29() {
    std::vector<Permutation> gens = psl29().generators();
    gens.push_back(moebius_scale(4));
    return PermGroup::from_generators(10, gens);
}

// ---- oracles --------------------------------------------------------------

// Distinct image tuples of morphisms P -> Q by scanning every element of G.
std::set<std::vector<int>> hom_oracle(const FusionSystem& f, const PermGroup& p_sub,
                                      const PermGroup& q_sub) {
    const SmallGroup& t = f.table();
    std::vector<int> qidx = t.subgroup_indices(q_sub);
    std::vector<int> gens = f.generating_sequence(t.subgroup_indices(p_sub));
    std::set<std::vector<int>> out;
    for (const Permutation& g : f.group().elements(5000)) {
        std::vector<int> tup;
        bool ok = true;
        for (int i : gens) {
            int iy = t.index_of(t.element(i).conjugated_by(g));
            if (iy < 0 || !std::binary_search(qidx.begin(), qidx.end(), iy)) {
                ok = false;
                break;
            }
            tup.push_back(iy);
        }
        if (ok) out.insert(tup);
    }
    return out;
}

std::set<std::vector<int>> image_tuples(const FusionSystem& f,
                                        const std::vector<FusionMorphism>& homs) {
    const SmallGroup& t = f.table();
    std::set<std::vector<int>> out;
    for (const FusionMorphism& m : homs) {
        std::vector<int> tup;
        for (const Permutation& y : m.images) tup.push_back(t.index_of(y));
        out.insert(tup);
    }
    return out;
}

// Every subgroup of h as a sorted element-index list, via the
// multiplication table (small h only).
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
// p coprime to |M cap M^g| for every coset of M.
bool sp_embedded_oracle(const PermGroup& h, int p) {
    if (h.order_u64() % static_cast<std::uint64_t>(p) != 0) return false;
    SmallGroup t = SmallGroup::from_group(h, 2048);
    for (const std::vector<int>& m : all_subgroups(t)) {
        if (m.size() == static_cast<std::size_t>(t.size()) ||
            m.size() % static_cast<std::size_t>(p) != 0)
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

} // namespace

TEST_CASE("fusion of a p-group over itself") {
    FusionSystem f = FusionSystem::build(d8(), 2);
    CHECK(f.sylow().order() == 8);
    CHECK(f.group().order() == 8);
    for (const SubgroupClass& c : f.classes()) {
        if (c.rep.size() == 1) continue;
        PermGroup p = f.subgroup(c.rep);
        CHECK(image_tuples(f, hom_f(f, p, f.sylow())) == hom_oracle(f, p, f.sylow()));
    }
    CHECK(essential_classes(f).empty());
    // every automorphism of S preserves F_S(S)
    FusionAutGroup af = aut_f(f);
    CHECK(af.aut_f.order() == af.aut_s.order);
    CHECK(af.out_f_order == af.aut_s.order / af.aut_g_s.order());

    CHECK_THROWS_AS(FusionSystem::build(d8(), 3), std::invalid_argument);
    CHECK_THROWS_AS(FusionSystem::build(d8(), 6), std::invalid_argument);
}

TEST_CASE("hom sets against exhaustive conjugation") {
    struct Case {
        PermGroup g;
        int p;
    };
    std::vector<Case> corpus{{s4(), 2}, {s4(), 3},   {a5(), 2},    {a5(), 3}, {a5(), 5},
                             {sl23(), 2}, {sl23(), 3}, {ex960(), 2}, {gl32(), 2}};
    for (const Case& c : corpus) {
        CAPTURE(c.p);
        FusionSystem f = FusionSystem::build(c.g, c.p);
        for (const SubgroupClass& cls : f.classes()) {
            if (cls.rep.size() == 1) continue;
            PermGroup p_sub = f.subgroup(cls.rep);
            std::vector<FusionMorphism> homs = hom_f(f, p_sub, f.sylow());
            CHECK(image_tuples(f, homs) == hom_oracle(f, p_sub, f.sylow()));
            // witnesses realize the stored images
            for (const FusionMorphism& m : homs)
                for (std::size_t i = 0; i < m.images.size(); ++i)
                    CHECK(m.source_gens[i].conjugated_by(m.witness) == m.images[i]);
            // deterministic order
            std::vector<FusionMorphism> again = hom_f(f, p_sub, f.sylow());
            REQUIRE(again.size() == homs.size());
            for (std::size_t i = 0; i < homs.size(); ++i)
                CHECK(again[i].images == homs[i].images);
            // P -> P morphisms too
            CHECK(image_tuples(f, hom_f(f, p_sub, p_sub)) == hom_oracle(f, p_sub, p_sub));
        }
        // trivial source: exactly one morphism
        CHECK(hom_f(f, PermGroup::trivial(c.g.degree()), f.sylow()).size() == 1);
    }
}

TEST_CASE("strongly p-embedded: graph criterion against definitional search") {
    struct Case {
        PermGroup g;
        int p;
        bool expect;
    };
    std::vector<Case> corpus{
        {s3(), 2, true},    {s3(), 3, false},  {c6(), 2, false},  {c6(), 3, false},
        {a4(), 2, false},   {a4(), 3, true},   {d8(), 2, false},  {s4(), 2, false},
        {s4(), 3, true},    {sl23(), 2, false}, {sl23(), 3, true}, {a5(), 2, true},
        {a5(), 3, true},    {a5(), 5, true},   {s5(), 2, false},  {s5(), 3, true},
        {s5(), 5, true},    {gl32(), 2, false}, {gl32(), 3, true}, {gl32(), 7, true},
    };
    for (const Case& c : corpus) {
        CAPTURE(c.p);
        CAPTURE(c.g.order());
        bool got = has_strongly_p_embedded(c.g, c.p);
        CHECK(got == c.expect);
        CHECK(got == sp_embedded_oracle(c.g, c.p));
    }
    // p not dividing the order
    CHECK_FALSE(has_strongly_p_embedded(s3(), 5));
}

TEST_CASE("S4 at p = 2: essentials, normality, constraint") {
    FusionSystem f = FusionSystem::build(s4(), 2);
    REQUIRE(f.sylow().order() == 8);

    // the normal Klein four subgroup is the unique essential class
    std::vector<EssentialClass> ess = essential_classes(f);
    REQUIRE(ess.size() == 1);
    const SubgroupClass& vc = f.classes()[static_cast<std::size_t>(ess[0].class_index)];
    CHECK(vc.rep.size() == 4);
    CHECK(vc.class_size == 1);
    CHECK(vc.is_elementary_abelian);
    CHECK(ess[0].out_order == 6);

    PermGroup v4 = f.subgroup(vc.rep);
    PermGroup o = out_g(f, v4);
    CHECK(o.order() == 6);
    CHECK_FALSE(o.is_abelian());

    CHECK(normal_in_f(f, v4));
    CHECK_FALSE(normal_in_f(f, f.sylow()));
    CHECK_FALSE(normal_in_f(f, center(f.sylow())));

    ConstrainedReport cr = is_constrained(f);
    CHECK(cr.constrained);
    CHECK(f.classes()[static_cast<std::size_t>(cr.witness_class)].rep.size() == 4);

    FusionAutGroup af = aut_f(f);
    CHECK(af.out_f_order == 1);

    CHECK_FALSE(controls_fusion(f, f.sylow()));
    CHECK(controls_fusion(f, f.group()));
}

TEST_CASE("A5 at p = 2: fusion controlled by the Sylow normalizer A4") {
    FusionSystem f = FusionSystem::build(a5(), 2);
    REQUIRE(f.sylow().order() == 4);
    PermGroup n = normalizer(f.group(), f.sylow());
    CHECK(n.order() == 12);
    CHECK(controls_fusion(f, n));
    CHECK_FALSE(controls_fusion(f, f.sylow()));
    FusionAutGroup af = aut_f(f);
    CHECK(af.aut_g_s.order() == 3);
    CHECK(af.aut_f.order() == 6);
    CHECK(af.out_f_order == 2);
}

TEST_CASE("M11 at p = 2: semidihedral Sylow with two essential classes") {
    FusionSystem f = FusionSystem::build(m11(), 2);
    const SmallGroup& t = f.table();
    REQUIRE(t.size() == 16);

    // SD16: a maximal cyclic C8 and exactly five involutions
    int invol = 0, max_order = 0;
    for (int i = 0; i < t.size(); ++i) {
        if (t.order_of(i) == 2) ++invol;
        max_order = std::max(max_order, t.order_of(i));
    }
    CHECK(max_order == 8);
    CHECK(invol == 5);

    // one class of involutions: five morphisms from the center into S
    PermGroup z = f.subgroup(t.center_of(t.full_set()));
    REQUIRE(z.order() == 2);
    CHECK(hom_f(f, z, f.sylow()).size() == 5);

    std::vector<EssentialClass> ess = essential_classes(f);
    REQUIRE(ess.size() == 2);
    std::set<std::size_t> sizes;
    for (const EssentialClass& e : ess) {
        sizes.insert(f.classes()[static_cast<std::size_t>(e.class_index)].rep.size());
        CHECK(e.out_order == 6);
    }
    CHECK(sizes == std::set<std::size_t>{4, 8});

    // morphisms S -> S are exactly the Aut_G(S) maps
    CHECK(hom_f(f, f.sylow(), f.sylow()).size() == 8);

    FusionAutGroup af = aut_f(f);
    CHECK(af.out_f_order == 2);

    // Out(M11) = 1: kappa-bar with the trivial overgroup
    KappaBarReport kb = kappa_bar(m11(), m11(), 2);
    CHECK(kb.out_g_order == 1);
    CHECK(kb.out_f_order == 2);
    CHECK(kb.image_order == 1);
    CHECK(kb.kernel_order == 1);
    CHECK(kb.verdict == "injective-not-surjective");
}

TEST_CASE("M12 at p = 3: extraspecial Sylow and kappa-bar onto Out(F)") {
    FusionSystem f = FusionSystem::build(m12(), 3);
    REQUIRE(f.sylow().order() == 27);
    ExtraspecialInfo info = is_extraspecial(f.sylow());
    CHECK(info.is_extraspecial);
    CHECK(info.name == "3^{1+2}_+");

    CHECK(out_g(f, f.sylow()).order() == 4);

    KappaBarReport kb = kappa_bar(m12_in_24(), m12_ext_24(), 3);
    CHECK(kb.out_g_order == 2);
    CHECK(kb.out_f_order == 2);
    CHECK(kb.image_order == 2);
    CHECK(kb.kernel_order == 1);
    CHECK(kb.verdict == "isomorphism");

    // no outer involution centralizes a Sylow 3-subgroup
    FusionSystem f24 = FusionSystem::build(m12_in_24(), 3);
    KappaInjCriteria crit = kappa_inj_criteria(f24, m12_ext_24());
    CHECK(crit.outer_involutions_centralizing_s.empty());
}

TEST_CASE("A5 inside S5: kappa-bar is an isomorphism, witness-independent") {
    KappaBarReport kb = kappa_bar(a5(), s5(), 2);
    CHECK(kb.out_g_order == 2);
    CHECK(kb.out_f_order == 2);
    CHECK(kb.image_order == 2);
    CHECK(kb.verdict == "isomorphism");

    // the class of the restriction in Out(F) does not depend on the inner
    // adjustment used to pull alpha(S) back onto S
    FusionSystem f = FusionSystem::build(a5(), 2);
    FusionAutGroup af = aut_f(f);
    CosetAction ca(s5(), a5());
    REQUIRE(ca.index() == 2);
    const Permutation& tcos = ca.coset_rep(1);
    std::vector<Permutation> sgens;
    for (const Permutation& x : f.sylow().generators())
        sgens.push_back(x.conjugated_by(tcos));
    PermGroup st = PermGroup::from_generators(5, sgens).reduced();
    auto y = subgroup_transporter(a5(), st, f.sylow());
    REQUIRE(y.has_value());
    Permutation r0 = conjugation_on_indices(f.table(), tcos * *y);
    for (const Permutation& n : normalizer(a5(), f.sylow()).elements()) {
        Permutation r1 = conjugation_on_indices(f.table(), tcos * (*y * n));
        CHECK(af.aut_g_s.contains(r0.inverse() * r1));
    }
}

TEST_CASE("A6 under S6 and under PGL(2,9): which injectivity criterion fires") {
    REQUIRE(psl29().order() == 360);
    REQUIRE(pgl29().order() == 720);
    REQUIRE(psl29().is_subgroup_of(pgl29()));

    // S6: an outer involution centralizes S, so kappa-bar collapses; the
    // normal-subgroup comparison shows no growth anywhere.
    FusionSystem f6 = FusionSystem::build(a6(), 2);
    KappaInjCriteria c6crit = kappa_inj_criteria(f6, s6());
    CHECK_FALSE(c6crit.outer_involutions_centralizing_s.empty());
    CHECK(c6crit.normal_out_growth.empty());
    KappaBarReport kb6 = kappa_bar(a6(), s6(), 2);
    CHECK(kb6.out_g_order == 2);
    CHECK(kb6.out_f_order == 2);
    CHECK(kb6.image_order == 1);
    CHECK(kb6.kernel_order == 2);
    CHECK(kb6.verdict == "kernel-nontrivial");

    // PGL(2,9): no outer involution centralizes S, and Out grows at Q = S
    FusionSystem f9 = FusionSystem::build(psl29(), 2);
    KappaInjCriteria c9crit = kappa_inj_criteria(f9, pgl29());
    CHECK(c9crit.outer_involutions_centralizing_s.empty());
    REQUIRE_FALSE(c9crit.normal_out_growth.empty());
    bool s_fires = false;
    for (const auto& g : c9crit.normal_out_growth) {
        if (f9.classes()[static_cast<std::size_t>(g.class_index)].rep.size() == 8) {
            s_fires = true;
            CHECK(g.out_ghat == 2);
            CHECK(g.out_g == 1);
        }
    }
    CHECK(s_fires);
    KappaBarReport kb9 = kappa_bar(psl29(), pgl29(), 2);
    CHECK(kb9.out_f_order == 2);
    CHECK(kb9.image_order == 2);
    CHECK(kb9.verdict == "isomorphism");
}

TEST_CASE("z-hat and abelian types for 2^4:15:4") {
    FusionSystem f = FusionSystem::build(ex960(), 2);
    const SmallGroup& t = f.table();
    REQUIRE(t.size() == 64);

    std::vector<ZhatMember> zh = z_hat(f);
    REQUIRE(zh.size() == 2);
    std::map<int, const ZhatMember*> by_rank;
    for (const ZhatMember& m : zh)
        by_rank[f.classes()[static_cast<std::size_t>(m.class_index)].rank] = &m;
    REQUIRE(by_rank.count(2) == 1);
    REQUIRE(by_rank.count(4) == 1);

    // the rank-2 member is the second center, with Aut_G = S3
    PermGroup z2 = second_center(f.sylow());
    CHECK(t.subgroup_indices(z2) ==
          f.classes()[static_cast<std::size_t>(by_rank[2]->class_index)].rep);
    CHECK(by_rank[2]->aut_order == 6);
    CHECK_FALSE(by_rank[2]->aut_image.is_abelian());
    CHECK(by_rank[4]->aut_order == 60);

    // both centralizers C_S(W) are essential subgroups
    std::set<int> ess;
    for (const EssentialClass& e : essential_classes(f)) ess.insert(e.class_index);
    for (const ZhatMember& m : zh) {
        std::vector<int> cs =
            t.centralizer_in(t.full_set(), f.classes()[static_cast<std::size_t>(m.class_index)].rep);
        bool found = false;
        for (int i : ess) {
            std::vector<int> other = f.classes()[static_cast<std::size_t>(i)].rep;
            if (other == cs ||
                are_conjugate_subgroups(f.sylow(), t.to_group(cs), t.to_group(other)))
                found = true;
        }
        CHECK(found);
    }

    // the translation subgroup is 2a-pure; so is the second center inside it
    ClassLabeling lab;
    lab.labels.push_back(ClassLabel{"2a", std::vector<int>(8, 2), 64});
    std::vector<int> ct2b{1, 1, 1, 1, 2, 2, 2, 2, 2, 2};
    lab.labels.push_back(ClassLabel{"2b", ct2b, 48});
    PermGroup w4 = f.subgroup(f.classes()[static_cast<std::size_t>(by_rank[4]->class_index)].rep);
    CHECK(abelian_type(f, w4, lab) == "2a^4");
    CHECK(abelian_type(f, z2, lab) == "2a^2");

    ClassLabeling empty;
    CHECK_THROWS_AS(abelian_type(f, w4, empty), std::invalid_argument);
    ClassLabeling dup = lab;
    dup.labels.push_back(ClassLabel{"2c", std::vector<int>(8, 2), 64});
    CHECK_THROWS_AS(abelian_type(f, w4, dup), std::invalid_argument);
}

TEST_CASE("category axioms and fully normalized conjugates") {
    for (PermGroup g : {s4(), a5()}) {
        FusionSystem f = FusionSystem::build(g, 2);
        const SmallGroup& t = f.table();
        const auto& cls = f.classes();

        // identity morphisms, and closure under composition through Q
        for (const SubgroupClass& cp : cls) {
            if (cp.rep.size() == 1) continue;
            PermGroup p_sub = f.subgroup(cp.rep);
            std::set<std::vector<int>> into_s = image_tuples(f, hom_f(f, p_sub, f.sylow()));
            std::vector<int> idtup;
            for (int i : f.generating_sequence(cp.rep)) idtup.push_back(i);
            CHECK(image_tuples(f, hom_f(f, p_sub, p_sub)).count(idtup) == 1);
            for (const SubgroupClass& cq : cls) {
                if (cq.rep.size() == 1) continue;
                PermGroup q_sub = f.subgroup(cq.rep);
                for (const FusionMorphism& m1 : hom_f(f, p_sub, q_sub))
                    for (const FusionMorphism& m2 : hom_f(f, q_sub, f.sylow())) {
                        Permutation w = m1.witness * m2.witness;
                        std::vector<int> tup;
                        for (const Permutation& x : m1.source_gens)
                            tup.push_back(t.index_of(x.conjugated_by(w)));
                        CHECK(into_s.count(tup) == 1);
                    }
            }
        }

        // every class has a fully normalized F-conjugate
        for (const SubgroupClass& cp : cls) {
            if (cp.rep.size() == 1) continue;
            PermGroup p_sub = f.subgroup(cp.rep);
            bool found = false;
            for (const SubgroupClass& cq : cls) {
                if (cq.rep.size() != cp.rep.size()) continue;
                PermGroup q_sub = f.subgroup(cq.rep);
                if (!are_conjugate_subgroups(f.group(), p_sub, q_sub)) continue;
                if (is_fully_normalized(f, q_sub)) found = true;
            }
            CHECK(found);
        }

        // Aut_G(S) <= Aut(F) <= Aut(S)
        FusionAutGroup af = aut_f(f);
        CHECK(af.aut_g_s.is_subgroup_of(af.aut_f));
        CHECK(af.aut_f.is_subgroup_of(af.aut_s.perm));
    }
}
