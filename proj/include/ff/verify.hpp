// Named verification suites over the bundled catalog: the desk-scale results
// table, the large opt-in case, and the seeded property suite with
// independent oracles.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ff {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

// Desk-scale results over the bundled catalog, one result per claim
// (M11, J1, M12, J2, HS, 2^4:15:4, M22).  Each check also carries a wall
// clock budget; exceeding it fails the check.
std::vector<CheckResult> verify_paper_small(const std::string& catalog_dir);

// The large opt-in case: Z-hat and the Thompson subgroup of M24 at p = 2.
std::vector<CheckResult> verify_stretch(const std::string& catalog_dir);

// Property suite: fusion category closure and hom oracle equivalence,
// strongly-p-embedded graph test against the definitional search, the
// second-center containment law for index-2 centralizers, the
// automizer-restriction parity law on Z-hat pairs, vanishing first
// cohomology under fixed-point-free cores, and absolute irreducibility
// against exhaustive submodule scans.  Deterministic for a fixed seed.
std::vector<CheckResult> verify_properties(const std::string& catalog_dir, std::uint64_t seed);

}  // namespace ff
