// Small helper used while preparing the bundled group catalog: reads raw
// permutation generators (as 0-based image rows) from stdin and reports
// orders, derived subgroups, point stabilizers, or small generating sets.
//
// Input format: a line "degree count", then `count` rows of `degree` images.
#include <algorithm>
#include <cstdint>
#include <iostream>
#include <map>
#include <unordered_set>
#include <sstream>
#include <string>
#include <vector>

#include "ff/groupops.hpp"
#include "ff/permgroup.hpp"
#include "ff/search.hpp"

namespace {

ff::PermGroup read_group(std::istream& in) {
    std::size_t n = 0, k = 0;
    in >> n >> k;
    std::vector<ff::Permutation> gens;
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<ff::Point> img(n);
        for (std::size_t j = 0; j < n; ++j) {
            unsigned v;
            in >> v;
            img[j] = static_cast<ff::Point>(v);
        }
        gens.emplace_back(std::move(img));
    }
    return ff::PermGroup::from_generators(n, std::move(gens));
}

std::string cycle_type_str(const ff::Permutation& g) {
    std::string s;
    for (auto [len, cnt] : g.cycle_type()) {
        if (!s.empty()) s += ',';
        s += std::to_string(len) + "^" + std::to_string(cnt);
    }
    return s;
}

// Conjugacy classes of elements of order <= maxorder. Exhaustive when the
// group is small enough to list, otherwise by sampling powers of random
// elements and splitting fingerprint buckets with conjugacy tests.
void classes_cmd(const ff::PermGroup& G, std::uint64_t maxorder, std::size_t samples,
                 std::uint64_t seed) {
    using namespace ff;
    struct Rec {
        Permutation rep;
        std::uint64_t order;
        std::string ct;
        BigInt centralizer;
    };
    std::vector<Rec> classes;
    bool exhaustive = G.order() <= BigInt(1u << 21) && G.degree() <= 64;
    if (exhaustive) {
        auto elems = G.elements(1u << 21);
        std::unordered_set<Permutation, PermHash> unclaimed;
        for (const auto& e : elems) {
            std::uint64_t o = e.order();
            if (o > 1 && o <= maxorder) unclaimed.insert(e);
        }
        while (!unclaimed.empty()) {
            Permutation rep = *unclaimed.begin();
            // conjugation-orbit closure
            std::vector<Permutation> orb{rep};
            std::unordered_set<Permutation, PermHash> inorb{rep};
            for (std::size_t h = 0; h < orb.size(); ++h)
                for (const auto& g : G.generators()) {
                    Permutation c = orb[h].conjugated_by(g);
                    if (inorb.insert(c).second) orb.push_back(c);
                }
            for (const auto& c : orb) unclaimed.erase(c);
            classes.push_back({rep, rep.order(), cycle_type_str(rep), G.order() / orb.size()});
        }
    } else {
        std::mt19937_64 rng(seed);
        std::map<std::pair<std::uint64_t, std::string>, std::vector<Permutation>> buckets;
        for (std::size_t i = 0; i < samples; ++i) {
            Permutation x = random_element(G, rng);
            std::uint64_t o = x.order();
            Permutation ppow = x;
            for (std::uint64_t k = 1; k < o; ++k) {
                std::uint64_t po = o / std::gcd(o, k);
                if (po > 1 && po <= maxorder) {
                    auto key = std::make_pair(po, cycle_type_str(ppow));
                    auto& bucket = buckets[key];
                    bool dup = false;
                    for (const auto& r : bucket)
                        if (r == ppow) dup = true;
                    if (!dup && bucket.size() < 8) bucket.push_back(ppow);
                }
                ppow = ppow * x;
            }
        }
        for (auto& [key, reps] : buckets) {
            std::vector<std::size_t> newclass;
            for (std::size_t i = 0; i < reps.size(); ++i) {
                bool matched = false;
                for (std::size_t j : newclass)
                    if (are_conjugate(G, reps[j], reps[i])) {
                        matched = true;
                        break;
                    }
                if (!matched) newclass.push_back(i);
            }
            for (std::size_t i : newclass) {
                BigInt c = centralizer(G, reps[i]).order();
                classes.push_back({reps[i], key.first, key.second, c});
            }
        }
    }
    std::sort(classes.begin(), classes.end(), [](const Rec& a, const Rec& b) {
        if (a.order != b.order) return a.order < b.order;
        if (a.centralizer != b.centralizer) return a.centralizer > b.centralizer;
        return a.ct < b.ct;
    });
    std::cout << (exhaustive ? "exhaustive" : "sampled") << ' ' << classes.size() << '\n';
    for (const auto& r : classes)
        std::cout << r.order << ' ' << r.ct << ' ' << r.centralizer << ' '
                  << (G.order() / r.centralizer) << '\n';
}

void print_gens(const ff::PermGroup& G) {
    std::cout << G.degree() << ' ' << G.generators().size() << '\n';
    for (const auto& g : G.generators()) {
        for (std::size_t i = 0; i < G.degree(); ++i)
            std::cout << (i ? " " : "") << g[static_cast<ff::Point>(i)];
        std::cout << '\n';
    }
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: grptool order|derived|stab <pt>|classes <maxorder> [samples seed]|sylow <p>|twogen <order> <seed>\n";
        return 2;
    }
    std::string cmd = argv[1];
    ff::PermGroup G = read_group(std::cin);
    if (cmd == "order") {
        std::cout << G.order() << '\n';
    } else if (cmd == "derived") {
        ff::PermGroup D = ff::derived_subgroup(G).reduced();
        std::cout << D.order() << '\n';
        print_gens(D);
    } else if (cmd == "stab" && argc >= 3) {
        ff::PermGroup S = G.point_stabilizer(static_cast<ff::Point>(std::stoul(argv[2])));
        std::cout << S.order() << '\n';
        print_gens(S);
    } else if (cmd == "classes" && argc >= 3) {
        std::uint64_t maxorder = std::stoull(argv[2]);
        std::size_t samples = argc >= 4 ? std::stoull(argv[3]) : 4000;
        std::uint64_t seed = argc >= 5 ? std::stoull(argv[4]) : 1;
        classes_cmd(G, maxorder, samples, seed);
    } else if (cmd == "sylow" && argc >= 3) {
        ff::PermGroup S = ff::sylow(G, std::stoull(argv[2]));
        std::cout << S.order() << '\n';
        print_gens(S);
    } else if (cmd == "twogen" && argc >= 4) {
        ff::BigInt target(argv[2]);
        auto gens = ff::find_small_generating_set(G, target, 2, std::stoull(argv[3]));
        if (gens.empty()) {
            std::cout << "none\n";
            return 1;
        }
        ff::PermGroup H = ff::PermGroup::from_generators(G.degree(), gens);
        print_gens(H);
    } else {
        std::cerr << "unknown command\n";
        return 2;
    }
    return 0;
}
