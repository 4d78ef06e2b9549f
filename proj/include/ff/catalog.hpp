// Bundled group catalog: strict parser and byte-exact renderer for the .grp
// format, the analysis pipeline producing deterministic reports, JSON
// serialization, and the on-disk report cache.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ff/fusion.hpp"

namespace ff {

inline constexpr const char* library_version = "1.0.0";
inline constexpr const char* report_schema_version = "1";

// One `class =` line: a conjugacy-class fingerprint (cycle type with fixed
// points, centralizer order) under a short label such as "2a".
struct CatalogClass {
    std::string label;
    std::vector<std::pair<int, int>> cycle_type;  // (length, multiplicity), ascending
    BigInt centralizer_order;

    std::vector<int> expanded_type() const;  // lengths with multiplicity, ascending
    std::uint64_t element_order() const;     // lcm of the cycle lengths
};

// One `[out]` section: an explicit overgroup realizing Out(G) (out_order = 1
// with no generators means the group itself).
struct CatalogOutData {
    std::uint64_t out_order = 1;
    std::size_t overgroup_degree = 0;          // 0: same degree as the group
    std::vector<std::string> generators;       // overgroup generators, cycle text
    std::vector<std::string> base_generators;  // group generators at overgroup_degree
};

struct CatalogEntry {
    std::string name;
    std::size_t degree = 0;
    BigInt order;
    std::vector<std::string> generators;  // cycle text, canonical form
    std::vector<CatalogClass> classes;
    std::optional<CatalogOutData> out_data;

    PermGroup group() const;
    // (overgroup, base group inside it); requires out_data
    std::pair<PermGroup, PermGroup> overgroup() const;
    ClassLabeling labeling() const;
};

// Strict line-oriented parse; diagnostics carry origin:line.  Validates the
// grammar, generator degrees, the stated order against the computed one, the
// overgroup index against out_order, and pairwise-distinct class
// fingerprints (element order, cycle type, centralizer order).
std::vector<CatalogEntry> parse_catalog_text(const std::string& text,
                                             const std::string& origin);
std::vector<CatalogEntry> parse_catalog(const std::string& path);

// Canonical text of an entry; render(parse(file)) is byte-identical for
// canonical files.
std::string render(const CatalogEntry& entry);
std::string render_file(const std::vector<CatalogEntry>& entries);

// All entries of every .grp file under a directory, sorted by file name;
// duplicate entry names are rejected.
std::vector<CatalogEntry> load_catalog_dir(const std::string& dir);
CatalogEntry find_entry(const std::string& dir, const std::string& name);

// --- analysis pipeline ---

struct AnalyzeOptions {
    std::size_t max_lattice = 256;  // |S| cap for subgroup-class stages
    std::size_t max_aut = 64;       // |S| cap for Aut(F)/Out(F) and kappa-bar
    bool elementary_only = false;   // enumerate only elementary abelian classes
    bool use_overgroup = true;      // consume [out] data when present
};

struct EssentialRow {
    std::uint64_t order = 0;       // |P|
    std::uint64_t index_in_s = 0;  // [S : P]
    std::uint64_t class_size = 1;  // S-conjugates of P
    std::string out_order;         // |Out_G(P)|
};

struct ZHatRow {
    std::uint64_t order = 0;
    int rank = 0;
    std::string aut_order;  // |Aut_G(W)|
    std::string type;       // class-label multiset, e.g. "2a^2"; empty if unlabeled
};

struct AnalysisReport {
    std::string version = report_schema_version;
    std::string name;
    int prime = 2;
    std::size_t degree = 0;
    std::string group_order;

    std::uint64_t sylow_order = 0;
    bool s_abelian = false;
    bool s_extraspecial = false;
    std::string s_extraspecial_name;
    std::uint64_t center_order = 0;
    std::string center_shape;
    std::uint64_t second_center_order = 0;
    std::string second_center_shape;  // "nonabelian" with the order when not abelian

    std::string fusion_status;  // ok | skipped(bound) | elementary-only
    std::vector<EssentialRow> essentials;
    std::vector<ZHatRow> z_hat;
    std::vector<std::string> label_gaps;  // element orders with no class label

    std::string local_status;
    std::uint64_t normalizer_order = 0;  // |N_G(S)|
    bool controls = false;               // N_G(S) controls fusion
    bool strictly_constrained = false;   // N_G(S) strictly p-constrained
    std::uint64_t out_g_s_order = 0;     // |Out_G(S)|
    bool out_g_s_cyclic = false;

    std::string out_bound_status;  // ok | not-applicable | skipped(...)
    int out_bound_h1 = 0;
    std::string out_bound;  // upper bound for |Out(N_G(S))|
    std::string out_bound_notes;

    std::string aut_status;
    std::string aut_g_s_order;  // |Aut_G(S)|
    std::string out_f_order;    // |Out(F)|

    std::string kappa_status;  // ok | absent | skipped(...)
    std::string kappa_out_g;
    std::string kappa_out_f;
    std::string kappa_image;
    std::string kappa_kernel;
    std::string kappa_verdict;

    std::string ker_mu_status;
    std::string ker_mu;  // trivial_by_empty | trivial_by_singleton | inconclusive
    std::string ker_mu_note;

    std::string tameness_status;
    std::string tameness;  // verdict token, e.g. "not tamely realized by G"
    std::string tameness_statement;

    double seconds = 0;  // wall clock; never serialized
};

// Full pipeline over one entry at one prime.  Throws std::invalid_argument
// when the prime does not divide the group order; stages beyond the
// feasibility bounds are marked skipped rather than attempted.
AnalysisReport analyze(const CatalogEntry& entry, int prime,
                       const AnalyzeOptions& opt = {});

// Deterministic JSON (stable key order, no timing field).
std::string report_json(const AnalysisReport& r);
// Human-readable summary, including timing.
std::string report_text(const AnalysisReport& r);

// --- report cache ---

struct CacheOptions {
    bool enabled = true;
    std::string dir;      // empty: $FUSIONFORGE_CACHE, else ~/.cache/fusionforge
    std::string version;  // empty: library_version
};

std::string cache_directory(const CacheOptions& opt);

// analyze() through the cache: hit when a stored report matches the entry's
// content hash, prime, options, and library version; corrupt or stale files
// are recomputed (a warning is appended for corrupt ones).  Writes are
// atomic (write-temp-rename).
AnalysisReport analyze_cached(const CatalogEntry& entry, int prime,
                              const AnalyzeOptions& opt, const CacheOptions& cache,
                              bool* cache_hit = nullptr,
                              std::string* warning = nullptr);

}  // namespace ff
