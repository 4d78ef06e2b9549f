// Unit tests for backtrack searches: centralizer, transporter, normalizer,
// Sylow, p-core. Small cases are checked against brute-force enumeration.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "ff/groupops.hpp"
#include "ff/search.hpp"

using namespace ff;

namespace {

PermGroup sym(std::size_t nn) {
    std::vector<Point> cyc(nn), tr(nn);
    for (std::size_t i = 0; i < nn; ++i) {
        cyc[i] = static_cast<Point>((i + 1) % nn);
        tr[i] = static_cast<Point>(i);
    }
    std::swap(tr[0], tr[1]);
    return PermGroup::from_generators(nn, {Permutation(tr), Permutation(cyc)});
}

PermGroup brute_centralizer(const PermGroup& G, const Permutation& x) {
    std::vector<Permutation> c;
    for (const Permutation& g : G.elements())
        if (g * x == x * g) c.push_back(g);
    return PermGroup::from_generators(G.degree(), c);
}

PermGroup brute_normalizer(const PermGroup& G, const PermGroup& H) {
    std::vector<Permutation> c;
    auto helems = H.elements();
    for (const Permutation& g : G.elements()) {
        bool norm = true;
        for (const Permutation& h : H.generators())
            if (!H.contains(h.conjugated_by(g))) {
                norm = false;
                break;
            }
        if (norm) c.push_back(g);
    }
    (void)helems;
    return PermGroup::from_generators(G.degree(), c);
}

} // namespace

TEST_CASE("centralizer matches brute force on S4, S5, S6") {
    for (std::size_t nn : {4u, 5u, 6u}) {
        PermGroup G = sym(nn);
        std::mt19937_64 rng(99);
        for (int t = 0; t < 8; ++t) {
            Permutation x = random_element(G, rng);
            PermGroup C = centralizer(G, x);
            PermGroup B = brute_centralizer(G, x);
            CHECK(C.same_group_as(B));
        }
    }
}

TEST_CASE("centralizer of an outside element") {
    // Centralize a permutation not in the group.
    PermGroup a4 = PermGroup::from_generators(
        4, {parse_cycles(4, "(1 2 3)"), parse_cycles(4, "(2 3 4)")});
    Permutation x = parse_cycles(4, "(1 2)");
    PermGroup C = centralizer(a4, x);
    CHECK(C.same_group_as(brute_centralizer(a4, x)));
    CHECK(C.order() == 2); // <(1 2)(3 4)> wait: elements commuting with (1 2) in A4
}

TEST_CASE("center computations") {
    PermGroup d8 = PermGroup::from_generators(
        4, {parse_cycles(4, "(1 2 3 4)"), parse_cycles(4, "(1 3)")});
    CHECK(center(d8).order() == 2);

    PermGroup q8 = PermGroup::from_generators(
        8, {parse_cycles(8, "(1 2 3 4)(5 6 7 8)"), parse_cycles(8, "(1 5 3 7)(2 8 4 6)")});
    CHECK(q8.order() == 8);
    CHECK(center(q8).order() == 2);

    CHECK(center(sym(5)).order() == 1);
    PermGroup c6 = PermGroup::from_generators(6, {parse_cycles(6, "(1 2 3 4 5 6)")});
    CHECK(center(c6).order() == 6);
}

TEST_CASE("transporter and conjugacy of elements") {
    PermGroup s5 = sym(5);
    Permutation a = parse_cycles(5, "(1 2)");
    Permutation b = parse_cycles(5, "(3 5)");
    auto t = transporter(s5, a, b);
    REQUIRE(t.has_value());
    CHECK(a.conjugated_by(*t) == b);
    CHECK(are_conjugate(s5, a, b));

    // (1 2 3) and (1 3 2) are not conjugate in A4's subgroup <(1 2 3)> but are in S4.
    PermGroup c3 = PermGroup::from_generators(4, {parse_cycles(4, "(1 2 3)")});
    CHECK_FALSE(are_conjugate(c3, parse_cycles(4, "(1 2 3)"), parse_cycles(4, "(1 3 2)")));

    // In A5 a 5-cycle is conjugate to its inverse but not to its square
    // (the two classes of 5-cycles).
    PermGroup a5 = PermGroup::from_generators(
        5, {parse_cycles(5, "(1 2 3)"), parse_cycles(5, "(3 4 5)")});
    Permutation f = parse_cycles(5, "(1 2 3 4 5)");
    CHECK(are_conjugate(a5, f, f.inverse()));
    CHECK_FALSE(are_conjugate(a5, f, f * f));
    CHECK(are_conjugate(sym(5), f, f * f));
}

TEST_CASE("normalizer matches brute force") {
    PermGroup s4 = sym(4);
    PermGroup v4 = PermGroup::from_generators(
        4, {parse_cycles(4, "(1 2)(3 4)"), parse_cycles(4, "(1 3)(2 4)")});
    CHECK(normalizer(s4, v4).order() == 24);

    PermGroup c4 = PermGroup::from_generators(4, {parse_cycles(4, "(1 2 3 4)")});
    PermGroup n = normalizer(s4, c4);
    CHECK(n.same_group_as(brute_normalizer(s4, c4)));
    CHECK(n.order() == 8);

    PermGroup s6 = sym(6);
    PermGroup h = PermGroup::from_generators(
        6, {parse_cycles(6, "(1 2 3)"), parse_cycles(6, "(4 5 6)")});
    CHECK(normalizer(s6, h).same_group_as(brute_normalizer(s6, h)));
}

TEST_CASE("subgroup conjugacy") {
    PermGroup s4 = sym(4);
    PermGroup h1 = PermGroup::from_generators(4, {parse_cycles(4, "(1 2)")});
    PermGroup h2 = PermGroup::from_generators(4, {parse_cycles(4, "(3 4)")});
    PermGroup d1 = PermGroup::from_generators(4, {parse_cycles(4, "(1 2)(3 4)")});
    auto t = subgroup_transporter(s4, h1, h2);
    REQUIRE(t.has_value());
    CHECK(are_conjugate_subgroups(s4, h1, h2));
    CHECK_FALSE(are_conjugate_subgroups(s4, h1, d1));

    // Two E4s in S4: the normal one and a non-normal one are not conjugate.
    PermGroup v4 = PermGroup::from_generators(
        4, {parse_cycles(4, "(1 2)(3 4)"), parse_cycles(4, "(1 3)(2 4)")});
    PermGroup e4 = PermGroup::from_generators(
        4, {parse_cycles(4, "(1 2)"), parse_cycles(4, "(3 4)")});
    CHECK_FALSE(are_conjugate_subgroups(s4, v4, e4));
}

TEST_CASE("intersection") {
    PermGroup s4 = sym(4);
    PermGroup a4 = derived_subgroup(s4);
    PermGroup d8 = PermGroup::from_generators(
        4, {parse_cycles(4, "(1 2 3 4)"), parse_cycles(4, "(1 3)")});
    PermGroup i = intersection(a4, d8);
    CHECK(i.order() == 4); // V4
    CHECK(i.is_subgroup_of(a4));
    CHECK(i.is_subgroup_of(d8));
}

TEST_CASE("sylow subgroups of small groups") {
    PermGroup s4 = sym(4);
    PermGroup syl2 = sylow(s4, 2);
    CHECK(syl2.order() == 8);
    CHECK(syl2.is_pgroup(2));
    CHECK(syl2.is_subgroup_of(s4));
    CHECK(sylow(s4, 3).order() == 3);

    PermGroup s6 = sym(6);
    CHECK(sylow(s6, 2).order() == 16);
    CHECK(sylow(s6, 3).order() == 9);
    CHECK(sylow(s6, 5).order() == 5);
    CHECK(sylow(s6, 7).is_trivial());
}

TEST_CASE("sylow subgroups of M11") {
    PermGroup m11 = PermGroup::from_generators(
        11, {parse_cycles(11, "(1 2 3 4 5 6 7 8 9 10 11)"),
             parse_cycles(11, "(3 7 11 8)(4 10 5 6)")});
    PermGroup s2 = sylow(m11, 2);
    CHECK(s2.order() == 16);
    CHECK(s2.is_pgroup(2));
    CHECK(s2.is_subgroup_of(m11));
    // SD16: contains an element of order 8, is neither abelian nor of exponent 8-free dihedral type
    auto elems = s2.elements();
    int ord8 = 0, ord2 = 0;
    for (const auto& e : elems) {
        if (e.order() == 8) ++ord8;
        if (e.order() == 2) ++ord2;
    }
    CHECK(ord8 == 4);  // SD16 has 4 elements of order 8
    CHECK(ord2 == 5);  // and 5 involutions (D16 has 9, Q16 has 1)

    CHECK(sylow(m11, 3).order() == 9);
    CHECK(sylow(m11, 11).order() == 11);

    // centralizer order of an involution in M11 is 48
    Permutation inv;
    for (const auto& e : s2.elements())
        if (e.order() == 2) {
            inv = e;
            break;
        }
    CHECK(centralizer(m11, inv).order() == 48);
}

TEST_CASE("p-core") {
    PermGroup s4 = sym(4);
    CHECK(p_core(s4, 2).order() == 4); // V4
    CHECK(p_core(s4, 3).is_trivial());

    PermGroup a5 = PermGroup::from_generators(
        5, {parse_cycles(5, "(1 2 3)"), parse_cycles(5, "(3 4 5)")});
    CHECK(p_core(a5, 2).is_trivial());

    // 2^4:15:4 style: the regular elementary abelian normal subgroup survives.
    // C2 x C2 acting on 4 points has itself as 2-core.
    PermGroup v4 = PermGroup::from_generators(
        4, {parse_cycles(4, "(1 2)(3 4)"), parse_cycles(4, "(1 3)(2 4)")});
    CHECK(p_core(v4, 2).order() == 4);
}

TEST_CASE("intertwiner on pairs") {
    // Simultaneous conjugation: find g with a1^g = b1, a2^g = b2.
    PermGroup s5 = sym(5);
    Permutation a1 = parse_cycles(5, "(1 2)");
    Permutation a2 = parse_cycles(5, "(1 2 3 4 5)");
    std::mt19937_64 rng(3);
    Permutation g0 = random_element(s5, rng);
    auto g = intertwiner(s5, {a1, a2}, {a1.conjugated_by(g0), a2.conjugated_by(g0)});
    REQUIRE(g.has_value());
    CHECK(a1.conjugated_by(*g) == a1.conjugated_by(g0));
    CHECK(a2.conjugated_by(*g) == a2.conjugated_by(g0));
}
