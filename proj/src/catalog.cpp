// Catalog parsing/rendering, the per-entry analysis pipeline, report JSON,
// and the on-disk report cache.
#include "ff/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "ff/groupops.hpp"
#include "ff/linking.hpp"
#include "ff/search.hpp"

namespace ff {

namespace {

using json = nlohmann::ordered_json;

// canonical cycle text: cycles by smallest moved point, each starting at its
// smallest element, points space-separated, fixed points omitted
std::string cycle_text(const Permutation& g) {
    const auto& img = g.images();
    std::vector<bool> seen(img.size(), false);
    std::string out;
    for (std::size_t i = 0; i < img.size(); ++i) {
        if (seen[i] || img[i] == i) continue;
        out += '(';
        std::size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) out += ' ';
            out += std::to_string(j + 1);
            first = false;
            j = img[j];
        }
        out += ')';
    }
    if (out.empty()) out = "()";
    return out;
}

bool is_prime_int(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

[[noreturn]] void fail_at(const std::string& origin, std::size_t lineno, const std::string& msg) {
    throw std::runtime_error(origin + ":" + std::to_string(lineno) + ": " + msg);
}

struct Cursor {
    std::vector<std::string> lines;
    std::size_t i = 0;  // next line index
    std::string origin;

    bool done() const { return i >= lines.size(); }
    std::size_t lineno() const { return i + 1; }
    const std::string& peek() const { return lines[i]; }
    [[noreturn]] void fail(const std::string& msg) const { fail_at(origin, lineno(), msg); }
};

// "key = value" with key exactly as given; nullopt when the line has a
// different key
std::optional<std::string> match_key(const std::string& line, const std::string& key) {
    std::string prefix = key + " = ";
    if (line.rfind(prefix, 0) != 0) return std::nullopt;
    return line.substr(prefix.size());
}

std::string require_key(Cursor& c, const std::string& key) {
    if (c.done()) fail_at(c.origin, c.lineno(), "expected '" + key + " = ...', got end of file");
    auto v = match_key(c.peek(), key);
    if (!v) c.fail("expected '" + key + " = ...', got '" + c.peek() + "'");
    if (v->empty()) c.fail("empty value for '" + key + "'");
    ++c.i;
    return *v;
}

std::uint64_t parse_u64(const Cursor& c, const std::string& text, const std::string& what) {
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char ch) { return std::isdigit(ch); }))
        fail_at(c.origin, c.lineno() - 1, what + " must be a positive integer, got '" + text + "'");
    std::uint64_t v = 0;
    for (char ch : text) {
        if (v > (UINT64_MAX - 9) / 10) fail_at(c.origin, c.lineno() - 1, what + " out of range");
        v = v * 10 + static_cast<std::uint64_t>(ch - '0');
    }
    if (v == 0) fail_at(c.origin, c.lineno() - 1, what + " must be positive");
    return v;
}

BigInt parse_bigint(const Cursor& c, const std::string& text, const std::string& what) {
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char ch) { return std::isdigit(ch); }))
        fail_at(c.origin, c.lineno() - 1, what + " must be a positive integer, got '" + text + "'");
    BigInt v(text);
    if (v == 0) fail_at(c.origin, c.lineno() - 1, what + " must be positive");
    return v;
}

Permutation parse_gen(const Cursor& c, std::size_t degree, const std::string& text,
                      const std::string& key) {
    Permutation g;
    try {
        g = parse_cycles(degree, text);
    } catch (const std::invalid_argument& e) {
        fail_at(c.origin, c.lineno() - 1, std::string(e.what()));
    }
    if (g.is_identity()) fail_at(c.origin, c.lineno() - 1, key + " is the identity");
    if (cycle_text(g) != text)
        fail_at(c.origin, c.lineno() - 1, key + " not in canonical cycle form (want '" + cycle_text(g) + "')");
    return g;
}

CatalogClass parse_class_line(const Cursor& c, const std::string& value, std::size_t degree,
                              const BigInt& group_order) {
    std::istringstream in(value);
    CatalogClass cc;
    std::string type_text, cent_text, extra;
    if (!(in >> cc.label >> type_text >> cent_text) || (in >> extra))
        fail_at(c.origin, c.lineno() - 1, "expected 'class = <label> <cycletype> <centralizer>'");
    std::size_t covered = 0;
    int prev_len = 0;
    std::size_t pos = 0;
    while (pos < type_text.size()) {
        std::size_t comma = type_text.find(',', pos);
        std::string tok = type_text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::size_t caret = tok.find('^');
        if (caret == std::string::npos || caret == 0 || caret + 1 >= tok.size())
            fail_at(c.origin, c.lineno() - 1, "cycle type token '" + tok + "' is not <len>^<mult>");
        int len = 0, mult = 0;
        try {
            len = std::stoi(tok.substr(0, caret));
            mult = std::stoi(tok.substr(caret + 1));
        } catch (const std::exception&) {
            fail_at(c.origin, c.lineno() - 1, "cycle type token '" + tok + "' is not <len>^<mult>");
        }
        if (len < 1 || mult < 1) fail_at(c.origin, c.lineno() - 1, "cycle type token '" + tok + "' is not positive");
        if (len <= prev_len) fail_at(c.origin, c.lineno() - 1, "cycle lengths must be strictly ascending");
        prev_len = len;
        cc.cycle_type.emplace_back(len, mult);
        covered += static_cast<std::size_t>(len) * static_cast<std::size_t>(mult);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (covered != degree)
        fail_at(c.origin, c.lineno() - 1, "cycle type covers " + std::to_string(covered) + " points, degree is " + std::to_string(degree));
    if (cc.element_order() == 1) fail_at(c.origin, c.lineno() - 1, "class describes the identity");
    {
        Cursor tmp = c;  // error position: the consumed line
        cc.centralizer_order = parse_bigint(tmp, cent_text, "centralizer order");
    }
    if (group_order % cc.centralizer_order != 0)
        fail_at(c.origin, c.lineno() - 1, "centralizer order does not divide the group order");
    return cc;
}

CatalogEntry parse_entry(Cursor& c) {
    if (c.done() || c.peek() != "[group]") c.fail("expected '[group]'");
    ++c.i;
    CatalogEntry e;
    e.name = require_key(c, "name");
    std::size_t degree_line = c.lineno();
    e.degree = parse_u64(c, require_key(c, "degree"), "degree");
    std::size_t order_line = c.lineno();
    e.order = parse_bigint(c, require_key(c, "order"), "order");

    std::vector<Permutation> gens;
    while (!c.done()) {
        auto v = match_key(c.peek(), "gen");
        if (!v) break;
        ++c.i;
        gens.push_back(parse_gen(c, e.degree, *v, "gen"));
        e.generators.push_back(*v);
    }
    if (gens.empty()) c.fail("expected at least one 'gen = ...'");

    PermGroup g = PermGroup::from_generators(e.degree, gens);
    if (g.order() != e.order)
        fail_at(c.origin, order_line, "stated order " + e.order.str() + " but the generators give " + g.order().str());
    (void)degree_line;

    // optional sections, each preceded by exactly one blank line
    while (!c.done() && c.peek().empty()) {
        std::size_t blank_line = c.lineno();
        ++c.i;
        if (c.done()) fail_at(c.origin, blank_line, "trailing blank line");
        if (c.peek() == "[group]") {
            --c.i;  // next entry; leave the blank for the caller
            break;
        }
        if (c.peek() == "[classes]") {
            if (!e.classes.empty()) c.fail("duplicate [classes] section");
            if (e.out_data) c.fail("[classes] must precede [out]");
            ++c.i;
            while (!c.done()) {
                auto v = match_key(c.peek(), "class");
                if (!v) break;
                ++c.i;
                e.classes.push_back(parse_class_line(c, *v, e.degree, e.order));
            }
            if (e.classes.empty()) c.fail("expected at least one 'class = ...'");
            for (std::size_t a = 0; a < e.classes.size(); ++a)
                for (std::size_t b = 0; b < a; ++b) {
                    if (e.classes[a].label == e.classes[b].label)
                        c.fail("duplicate class label '" + e.classes[a].label + "'");
                    if (e.classes[a].cycle_type == e.classes[b].cycle_type &&
                        e.classes[a].centralizer_order == e.classes[b].centralizer_order)
                        c.fail("classes '" + e.classes[b].label + "' and '" + e.classes[a].label +
                               "' share a fingerprint (cycle type and centralizer order)");
                }
        } else if (c.peek() == "[out]") {
            if (e.out_data) c.fail("duplicate [out] section");
            ++c.i;
            CatalogOutData od;
            std::size_t out_order_line = c.lineno();
            od.out_order = parse_u64(c, require_key(c, "out_order"), "out_order");
            if (!c.done())
                if (auto v = match_key(c.peek(), "overgroup_degree")) {
                    ++c.i;
                    od.overgroup_degree = parse_u64(c, *v, "overgroup_degree");
                    if (od.overgroup_degree == e.degree)
                        fail_at(c.origin, c.lineno() - 1, "overgroup_degree equals the group degree; omit it");
                }
            std::size_t ov_deg = od.overgroup_degree ? od.overgroup_degree : e.degree;
            std::vector<Permutation> ov_gens;
            while (!c.done()) {
                auto v = match_key(c.peek(), "gen");
                if (!v) break;
                ++c.i;
                ov_gens.push_back(parse_gen(c, ov_deg, *v, "gen"));
                od.generators.push_back(*v);
            }
            std::vector<Permutation> base_gens;
            while (!c.done()) {
                auto v = match_key(c.peek(), "base_gen");
                if (!v) break;
                ++c.i;
                base_gens.push_back(parse_gen(c, ov_deg, *v, "base_gen"));
                od.base_generators.push_back(*v);
            }
            if (od.overgroup_degree && od.base_generators.size() != e.generators.size())
                c.fail("need one base_gen per gen when the overgroup acts at another degree");
            if (!od.overgroup_degree && !od.base_generators.empty())
                c.fail("base_gen requires overgroup_degree");
            if (od.generators.empty()) {
                if (od.out_order != 1)
                    fail_at(c.origin, out_order_line, "out_order > 1 needs overgroup generators");
            } else {
                PermGroup ghat = PermGroup::from_generators(ov_deg, ov_gens);
                PermGroup base = od.overgroup_degree ? PermGroup::from_generators(ov_deg, base_gens) : g;
                if (base.order() != e.order)
                    fail_at(c.origin, out_order_line, "base_gen group has order " + base.order().str() +
                                                          ", expected " + e.order.str());
                for (const Permutation& b : base.generators())
                    if (!ghat.contains(b))
                        fail_at(c.origin, out_order_line, "overgroup does not contain the base group");
                if (ghat.order() != e.order * od.out_order)
                    fail_at(c.origin, out_order_line, "overgroup has order " + ghat.order().str() + ", expected " +
                                                          (e.order * od.out_order).str());
            }
            e.out_data = std::move(od);
        } else {
            c.fail("expected '[classes]', '[out]', or '[group]' after blank line");
        }
    }
    return e;
}

}  // namespace

std::vector<int> CatalogClass::expanded_type() const {
    std::vector<int> out;
    for (auto [len, mult] : cycle_type)
        out.insert(out.end(), static_cast<std::size_t>(mult), len);
    return out;
}

std::uint64_t CatalogClass::element_order() const {
    std::uint64_t o = 1;
    for (auto [len, mult] : cycle_type) o = std::lcm(o, static_cast<std::uint64_t>(len));
    return o;
}

PermGroup CatalogEntry::group() const {
    std::vector<Permutation> gens;
    for (const std::string& t : generators) gens.push_back(parse_cycles(degree, t));
    return PermGroup::from_generators(degree, gens);
}

std::pair<PermGroup, PermGroup> CatalogEntry::overgroup() const {
    if (!out_data) throw std::invalid_argument(name + ": no [out] data");
    const CatalogOutData& od = *out_data;
    if (od.generators.empty()) {
        PermGroup g = group();
        return {g, g};
    }
    std::size_t ov_deg = od.overgroup_degree ? od.overgroup_degree : degree;
    std::vector<Permutation> ov_gens, base_gens;
    for (const std::string& t : od.generators) ov_gens.push_back(parse_cycles(ov_deg, t));
    PermGroup ghat = PermGroup::from_generators(ov_deg, ov_gens);
    if (!od.overgroup_degree) return {ghat, group()};
    for (const std::string& t : od.base_generators) base_gens.push_back(parse_cycles(ov_deg, t));
    return {ghat, PermGroup::from_generators(ov_deg, base_gens)};
}

ClassLabeling CatalogEntry::labeling() const {
    ClassLabeling lab;
    for (const CatalogClass& cc : classes) {
        ClassLabel l;
        l.name = cc.label;
        for (int len : cc.expanded_type()) l.cycle_type.push_back(len);
        l.centralizer_order = cc.centralizer_order;
        lab.labels.push_back(std::move(l));
    }
    return lab;
}

std::vector<CatalogEntry> parse_catalog_text(const std::string& text, const std::string& origin) {
    Cursor c;
    c.origin = origin;
    std::string line;
    for (std::size_t pos = 0; pos <= text.size(); ++pos) {
        if (pos == text.size() || text[pos] == '\n') {
            if (pos == text.size() && line.empty()) break;
            c.lines.push_back(line);
            line.clear();
        } else {
            line += text[pos];
        }
    }
    for (std::size_t k = 0; k < c.lines.size(); ++k) {
        const std::string& l = c.lines[k];
        if (!l.empty() && (std::isspace(static_cast<unsigned char>(l.back())) ||
                           std::isspace(static_cast<unsigned char>(l.front()))))
            fail_at(origin, k + 1, "leading or trailing whitespace");
    }
    std::vector<CatalogEntry> entries;
    while (!c.done()) {
        if (c.peek().empty()) {
            std::size_t blank_line = c.lineno();
            ++c.i;
            if (c.done() || c.peek() != "[group]") fail_at(c.origin, blank_line, "stray blank line");
            if (entries.empty()) fail_at(c.origin, blank_line, "file starts with a blank line");
        }
        entries.push_back(parse_entry(c));
    }
    if (entries.empty()) throw std::runtime_error(origin + ": no [group] entries");
    return entries;
}

std::vector<CatalogEntry> parse_catalog(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open catalog file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_catalog_text(buf.str(), path);
}

std::string render(const CatalogEntry& e) {
    std::string out = "[group]\n";
    out += "name = " + e.name + "\n";
    out += "degree = " + std::to_string(e.degree) + "\n";
    out += "order = " + e.order.str() + "\n";
    for (const std::string& g : e.generators) out += "gen = " + g + "\n";
    if (!e.classes.empty()) {
        out += "\n[classes]\n";
        for (const CatalogClass& cc : e.classes) {
            out += "class = " + cc.label + " ";
            for (std::size_t k = 0; k < cc.cycle_type.size(); ++k) {
                if (k) out += ",";
                out += std::to_string(cc.cycle_type[k].first) + "^" + std::to_string(cc.cycle_type[k].second);
            }
            out += " " + cc.centralizer_order.str() + "\n";
        }
    }
    if (e.out_data) {
        const CatalogOutData& od = *e.out_data;
        out += "\n[out]\n";
        out += "out_order = " + std::to_string(od.out_order) + "\n";
        if (od.overgroup_degree) out += "overgroup_degree = " + std::to_string(od.overgroup_degree) + "\n";
        for (const std::string& g : od.generators) out += "gen = " + g + "\n";
        for (const std::string& g : od.base_generators) out += "base_gen = " + g + "\n";
    }
    return out;
}

std::string render_file(const std::vector<CatalogEntry>& entries) {
    std::string out;
    for (std::size_t k = 0; k < entries.size(); ++k) {
        if (k) out += "\n";
        out += render(entries[k]);
    }
    return out;
}

std::vector<CatalogEntry> load_catalog_dir(const std::string& dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw std::runtime_error("catalog directory not found: " + dir);
    std::vector<fs::path> files;
    for (const auto& de : fs::directory_iterator(dir))
        if (de.is_regular_file() && de.path().extension() == ".grp") files.push_back(de.path());
    std::sort(files.begin(), files.end());
    std::vector<CatalogEntry> entries;
    std::set<std::string> names;
    for (const fs::path& f : files)
        for (CatalogEntry& e : parse_catalog(f.string())) {
            if (!names.insert(e.name).second)
                throw std::runtime_error(f.string() + ": duplicate catalog entry name '" + e.name + "'");
            entries.push_back(std::move(e));
        }
    if (entries.empty()) throw std::runtime_error("no .grp files under " + dir);
    return entries;
}

CatalogEntry find_entry(const std::string& dir, const std::string& name) {
    std::vector<CatalogEntry> entries = load_catalog_dir(dir);
    for (CatalogEntry& e : entries)
        if (e.name == name) return std::move(e);
    std::string known;
    for (const CatalogEntry& e : entries) known += (known.empty() ? "" : ", ") + e.name;
    throw std::runtime_error("no catalog entry named '" + name + "' (have: " + known + ")");
}

// --- analysis ---

namespace {

std::string shape_of(const SmallGroup& t, const std::vector<int>& sub, int p) {
    if (!t.is_abelian_set(sub)) return "nonabelian";
    return abelian_shape(t.abelian_invariants(sub, p));
}

// element orders (> 1) occurring in the given element-index sets
std::set<std::uint64_t> element_orders(const SmallGroup& t, const std::vector<std::vector<int>>& sets) {
    std::set<std::uint64_t> orders;
    for (const auto& s : sets)
        for (int x : s)
            if (x != 0) orders.insert(static_cast<std::uint64_t>(t.order_of(x)));
    return orders;
}

}  // namespace

AnalysisReport analyze(const CatalogEntry& entry, int prime, const AnalyzeOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    if (!is_prime_int(prime)) throw std::invalid_argument("not a prime: " + std::to_string(prime));
    if (entry.order % prime != 0)
        throw std::invalid_argument(std::to_string(prime) + " does not divide |" + entry.name +
                                    "| = " + entry.order.str());

    AnalysisReport r;
    r.name = entry.name;
    r.prime = prime;
    r.degree = entry.degree;
    r.group_order = entry.order.str();

    PermGroup g = entry.group();
    FusionOptions fopt;
    fopt.max_lattice = opt.max_lattice;
    fopt.elementary_only = opt.elementary_only;
    FusionSystem f = FusionSystem::build(g, prime, fopt);
    const PermGroup& s = f.sylow();
    const SmallGroup& t = f.table();
    r.sylow_order = s.order_u64();

    r.s_abelian = s.is_abelian();
    ExtraspecialInfo ei = is_extraspecial(s);
    r.s_extraspecial = ei.is_extraspecial;
    r.s_extraspecial_name = ei.name;
    std::vector<int> full = t.full_set();
    std::vector<int> z = t.center_of(full);
    std::vector<int> z2 = t.center_preimage(full, z);
    r.center_order = static_cast<std::uint64_t>(z.size());
    r.center_shape = shape_of(t, z, prime);
    r.second_center_order = static_cast<std::uint64_t>(z2.size());
    r.second_center_shape = shape_of(t, z2, prime);

    bool have_classes = f.classes_enumerated();
    bool full_classes = have_classes && !opt.elementary_only;
    r.fusion_status = !have_classes ? "skipped(bound)" : (opt.elementary_only ? "elementary-only" : "ok");
    std::vector<ZhatMember> zh;
    if (have_classes) {
        if (full_classes)
            for (const EssentialClass& ec : essential_classes(f)) {
                const SubgroupClass& cls = f.classes()[static_cast<std::size_t>(ec.class_index)];
                EssentialRow row;
                row.order = static_cast<std::uint64_t>(cls.rep.size());
                row.index_in_s = r.sylow_order / row.order;
                row.class_size = cls.class_size;
                row.out_order = ec.out_order.str();
                r.essentials.push_back(std::move(row));
            }
        zh = z_hat(f);
        ClassLabeling lab = entry.labeling();
        std::vector<std::vector<int>> member_sets{z2};
        for (const ZhatMember& m : zh) {
            const SubgroupClass& cls = f.classes()[static_cast<std::size_t>(m.class_index)];
            member_sets.push_back(cls.rep);
            ZHatRow row;
            row.order = static_cast<std::uint64_t>(cls.rep.size());
            row.rank = cls.rank;
            row.aut_order = m.aut_order.str();
            if (!lab.labels.empty()) {
                try {
                    row.type = abelian_type(f, f.subgroup(cls.rep), lab);
                } catch (const std::exception&) {
                    row.type.clear();
                }
            }
            r.z_hat.push_back(std::move(row));
        }
        std::set<std::uint64_t> needed = element_orders(t, member_sets);
        for (std::uint64_t o : needed) {
            bool covered = false;
            for (const CatalogClass& cc : entry.classes)
                if (cc.element_order() == o) covered = true;
            if (!covered)
                r.label_gaps.push_back(entry.classes.empty()
                                           ? "no class labels bundled (element order " + std::to_string(o) + " occurs)"
                                           : "no class label for element order " + std::to_string(o));
        }
    }

    if (full_classes) {
        r.local_status = "ok";
        PermGroup n = normalizer(g, s);
        r.normalizer_order = n.order_u64();
        r.controls = controls_fusion(f, n);
        r.strictly_constrained = strictly_p_constrained(n, prime);
        PermGroup outgs = out_g(f, s);
        r.out_g_s_order = outgs.order_u64();
        if (r.out_g_s_order <= 4096) {
            for (const Permutation& x : outgs.elements(4096))
                if (x.order() == r.out_g_s_order) r.out_g_s_cyclic = true;
        }
        bool q_ok = t.is_elementary_abelian_set(full, prime) || (ei.is_extraspecial && ei.k == 1);
        if (r.strictly_constrained && q_ok) {
            try {
                OutBoundReport ob = out_bound_exact_sequence(n, s);
                r.out_bound_status = "ok";
                r.out_bound_h1 = ob.h1_dim;
                r.out_bound = std::to_string(ob.out_h_upper_bound);
                r.out_bound_notes = ob.notes;
            } catch (const std::exception& ex) {
                r.out_bound_status = std::string("not-applicable(") + ex.what() + ")";
            }
        } else {
            r.out_bound_status = "not-applicable";
        }
    } else {
        r.local_status = r.fusion_status;
        r.out_bound_status = r.fusion_status;
    }

    bool aut_ok = full_classes && r.sylow_order <= opt.max_aut;
    std::optional<KappaBarReport> kb;
    if (aut_ok) {
        r.aut_status = "ok";
        FusionAutGroup af = aut_f(f);
        r.aut_g_s_order = af.aut_g_s.order().str();
        r.out_f_order = af.out_f_order.str();
        if (entry.out_data && opt.use_overgroup) {
            auto [ghat, base] = entry.overgroup();
            kb = kappa_bar(base, ghat, prime, fopt);
            r.kappa_status = "ok";
            r.kappa_out_g = kb->out_g_order.str();
            r.kappa_out_f = kb->out_f_order.str();
            r.kappa_image = kb->image_order.str();
            r.kappa_kernel = kb->kernel_order.str();
            r.kappa_verdict = kb->verdict;
        } else {
            r.kappa_status = "absent";
        }
    } else {
        r.aut_status = full_classes ? "skipped(bound)" : r.fusion_status;
        r.kappa_status = r.aut_status;
    }

    std::optional<KerMuReport> km;
    if (have_classes) {
        km = ker_mu_verdict(f);
        r.ker_mu_status = "ok";
        r.ker_mu = km->verdict;
        r.ker_mu_note = km->note;
    } else {
        r.ker_mu_status = r.fusion_status;
    }

    if (kb) {
        TamenessReport tn = tameness_verdict(*kb, prime, km);
        r.tameness_status = "ok";
        r.tameness = tn.verdict;
        r.tameness_statement = tn.statement;
    } else {
        r.tameness_status = r.kappa_status == "absent" ? "unknown(no outer data)" : r.kappa_status;
    }

    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

// --- JSON ---

namespace {

json report_to_json(const AnalysisReport& r) {
    json j;
    j["version"] = r.version;
    j["name"] = r.name;
    j["prime"] = r.prime;
    j["degree"] = r.degree;
    j["group_order"] = r.group_order;
    json s;
    s["order"] = r.sylow_order;
    s["abelian"] = r.s_abelian;
    s["extraspecial"] = r.s_extraspecial;
    s["extraspecial_name"] = r.s_extraspecial_name;
    s["center_order"] = r.center_order;
    s["center"] = r.center_shape;
    s["second_center_order"] = r.second_center_order;
    s["second_center"] = r.second_center_shape;
    j["sylow"] = std::move(s);
    json fu;
    fu["status"] = r.fusion_status;
    fu["essentials"] = json::array();
    for (const EssentialRow& row : r.essentials) {
        json e;
        e["order"] = row.order;
        e["index"] = row.index_in_s;
        e["class_size"] = row.class_size;
        e["out"] = row.out_order;
        fu["essentials"].push_back(std::move(e));
    }
    fu["z_hat"] = json::array();
    for (const ZHatRow& row : r.z_hat) {
        json zr;
        zr["order"] = row.order;
        zr["rank"] = row.rank;
        zr["aut"] = row.aut_order;
        zr["type"] = row.type;
        fu["z_hat"].push_back(std::move(zr));
    }
    fu["label_gaps"] = r.label_gaps;
    j["fusion"] = std::move(fu);
    json lo;
    lo["status"] = r.local_status;
    lo["normalizer_order"] = r.normalizer_order;
    lo["controls_fusion"] = r.controls;
    lo["strictly_p_constrained"] = r.strictly_constrained;
    lo["out_g_s"] = r.out_g_s_order;
    lo["out_g_s_cyclic"] = r.out_g_s_cyclic;
    j["local"] = std::move(lo);
    json ob;
    ob["status"] = r.out_bound_status;
    ob["h1"] = r.out_bound_h1;
    ob["bound"] = r.out_bound;
    ob["notes"] = r.out_bound_notes;
    j["out_bound"] = std::move(ob);
    json au;
    au["status"] = r.aut_status;
    au["aut_g_s"] = r.aut_g_s_order;
    au["out_f"] = r.out_f_order;
    j["aut"] = std::move(au);
    json kp;
    kp["status"] = r.kappa_status;
    kp["out_g"] = r.kappa_out_g;
    kp["out_f"] = r.kappa_out_f;
    kp["image"] = r.kappa_image;
    kp["kernel"] = r.kappa_kernel;
    kp["verdict"] = r.kappa_verdict;
    j["kappa_bar"] = std::move(kp);
    json km;
    km["status"] = r.ker_mu_status;
    km["verdict"] = r.ker_mu;
    km["note"] = r.ker_mu_note;
    j["ker_mu"] = std::move(km);
    json tn;
    tn["status"] = r.tameness_status;
    tn["verdict"] = r.tameness;
    tn["statement"] = r.tameness_statement;
    j["tameness"] = std::move(tn);
    return j;
}

AnalysisReport report_from_json(const json& j) {
    AnalysisReport r;
    r.version = j.at("version").get<std::string>();
    r.name = j.at("name").get<std::string>();
    r.prime = j.at("prime").get<int>();
    r.degree = j.at("degree").get<std::size_t>();
    r.group_order = j.at("group_order").get<std::string>();
    const json& s = j.at("sylow");
    r.sylow_order = s.at("order").get<std::uint64_t>();
    r.s_abelian = s.at("abelian").get<bool>();
    r.s_extraspecial = s.at("extraspecial").get<bool>();
    r.s_extraspecial_name = s.at("extraspecial_name").get<std::string>();
    r.center_order = s.at("center_order").get<std::uint64_t>();
    r.center_shape = s.at("center").get<std::string>();
    r.second_center_order = s.at("second_center_order").get<std::uint64_t>();
    r.second_center_shape = s.at("second_center").get<std::string>();
    const json& fu = j.at("fusion");
    r.fusion_status = fu.at("status").get<std::string>();
    for (const json& e : fu.at("essentials")) {
        EssentialRow row;
        row.order = e.at("order").get<std::uint64_t>();
        row.index_in_s = e.at("index").get<std::uint64_t>();
        row.class_size = e.at("class_size").get<std::uint64_t>();
        row.out_order = e.at("out").get<std::string>();
        r.essentials.push_back(std::move(row));
    }
    for (const json& zr : fu.at("z_hat")) {
        ZHatRow row;
        row.order = zr.at("order").get<std::uint64_t>();
        row.rank = zr.at("rank").get<int>();
        row.aut_order = zr.at("aut").get<std::string>();
        row.type = zr.at("type").get<std::string>();
        r.z_hat.push_back(std::move(row));
    }
    r.label_gaps = fu.at("label_gaps").get<std::vector<std::string>>();
    const json& lo = j.at("local");
    r.local_status = lo.at("status").get<std::string>();
    r.normalizer_order = lo.at("normalizer_order").get<std::uint64_t>();
    r.controls = lo.at("controls_fusion").get<bool>();
    r.strictly_constrained = lo.at("strictly_p_constrained").get<bool>();
    r.out_g_s_order = lo.at("out_g_s").get<std::uint64_t>();
    r.out_g_s_cyclic = lo.at("out_g_s_cyclic").get<bool>();
    const json& ob = j.at("out_bound");
    r.out_bound_status = ob.at("status").get<std::string>();
    r.out_bound_h1 = ob.at("h1").get<int>();
    r.out_bound = ob.at("bound").get<std::string>();
    r.out_bound_notes = ob.at("notes").get<std::string>();
    const json& au = j.at("aut");
    r.aut_status = au.at("status").get<std::string>();
    r.aut_g_s_order = au.at("aut_g_s").get<std::string>();
    r.out_f_order = au.at("out_f").get<std::string>();
    const json& kp = j.at("kappa_bar");
    r.kappa_status = kp.at("status").get<std::string>();
    r.kappa_out_g = kp.at("out_g").get<std::string>();
    r.kappa_out_f = kp.at("out_f").get<std::string>();
    r.kappa_image = kp.at("image").get<std::string>();
    r.kappa_kernel = kp.at("kernel").get<std::string>();
    r.kappa_verdict = kp.at("verdict").get<std::string>();
    const json& km = j.at("ker_mu");
    r.ker_mu_status = km.at("status").get<std::string>();
    r.ker_mu = km.at("verdict").get<std::string>();
    r.ker_mu_note = km.at("note").get<std::string>();
    const json& tn = j.at("tameness");
    r.tameness_status = tn.at("status").get<std::string>();
    r.tameness = tn.at("verdict").get<std::string>();
    r.tameness_statement = tn.at("statement").get<std::string>();
    return r;
}

}  // namespace

std::string report_json(const AnalysisReport& r) { return report_to_json(r).dump(2) + "\n"; }

std::string report_text(const AnalysisReport& r) {
    std::ostringstream out;
    out << r.name << " at p = " << r.prime << " (degree " << r.degree << ", |G| = " << r.group_order << ")\n";
    out << "  |S| = " << r.sylow_order;
    if (r.s_abelian) out << ", abelian";
    if (r.s_extraspecial) out << ", extraspecial " << r.s_extraspecial_name;
    out << "; Z(S) = " << r.center_shape << "; Z2(S) = " << r.second_center_shape;
    if (r.second_center_shape == "nonabelian") out << " (order " << r.second_center_order << ")";
    out << "\n";
    out << "  fusion [" << r.fusion_status << "]";
    if (r.fusion_status == "ok") {
        out << ": " << r.essentials.size() << " essential class" << (r.essentials.size() == 1 ? "" : "es");
        for (const EssentialRow& e : r.essentials)
            out << " {|P| = " << e.order << ", [S:P] = " << e.index_in_s << ", |Out_G(P)| = " << e.out_order << "}";
    }
    out << "\n";
    if (r.fusion_status == "ok" || r.fusion_status == "elementary-only") {
        out << "  Z-hat: " << r.z_hat.size() << " class" << (r.z_hat.size() == 1 ? "" : "es");
        for (const ZHatRow& zr : r.z_hat) {
            out << " {|W| = " << zr.order << ", rank " << zr.rank << ", |Aut_G(W)| = " << zr.aut_order;
            if (!zr.type.empty()) out << ", type " << zr.type;
            out << "}";
        }
        out << "\n";
        for (const std::string& gap : r.label_gaps) out << "  label gap: " << gap << "\n";
    }
    out << "  local [" << r.local_status << "]";
    if (r.local_status == "ok") {
        out << ": |N_G(S)| = " << r.normalizer_order << ", controls fusion: " << (r.controls ? "yes" : "no")
            << ", strictly " << r.prime << "-constrained: " << (r.strictly_constrained ? "yes" : "no")
            << ", |Out_G(S)| = " << r.out_g_s_order << (r.out_g_s_cyclic ? " (cyclic)" : "");
    }
    out << "\n";
    if (r.out_bound_status == "ok")
        out << "  |Out(N_G(S))| <= " << r.out_bound << " (h1 = " << r.out_bound_h1 << "; " << r.out_bound_notes
            << ")\n";
    out << "  aut [" << r.aut_status << "]";
    if (r.aut_status == "ok") out << ": |Aut_G(S)| = " << r.aut_g_s_order << ", |Out(F)| = " << r.out_f_order;
    out << "\n";
    out << "  kappa-bar [" << r.kappa_status << "]";
    if (r.kappa_status == "ok")
        out << ": |Out(G)| = " << r.kappa_out_g << " -> |Out(F)| = " << r.kappa_out_f << ", image " << r.kappa_image
            << ", kernel " << r.kappa_kernel << ", " << r.kappa_verdict;
    out << "\n";
    out << "  Ker(mu) [" << r.ker_mu_status << "]";
    if (r.ker_mu_status == "ok") out << ": " << r.ker_mu << " (" << r.ker_mu_note << ")";
    out << "\n";
    out << "  tameness [" << r.tameness_status << "]";
    if (r.tameness_status == "ok") out << ": " << r.tameness << " -- " << r.tameness_statement;
    out << "\n";
    out << "  elapsed: " << r.seconds << " s\n";
    return out.str();
}

// --- cache ---

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int k = 15; k >= 0; --k) {
        out[static_cast<std::size_t>(k)] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

std::string sanitize(const std::string& name) {
    std::string out;
    for (char c : name)
        out += (std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
    return out;
}

json options_json(const AnalyzeOptions& opt) {
    json o;
    o["max_lattice"] = opt.max_lattice;
    o["max_aut"] = opt.max_aut;
    o["elementary_only"] = opt.elementary_only;
    o["use_overgroup"] = opt.use_overgroup;
    return o;
}

}  // namespace

std::string cache_directory(const CacheOptions& opt) {
    if (!opt.dir.empty()) return opt.dir;
    if (const char* env = std::getenv("FUSIONFORGE_CACHE")) return env;
    if (const char* home = std::getenv("HOME")) return std::string(home) + "/.cache/fusionforge";
    return ".fusionforge-cache";
}

AnalysisReport analyze_cached(const CatalogEntry& entry, int prime, const AnalyzeOptions& opt,
                              const CacheOptions& cache, bool* cache_hit, std::string* warning) {
    if (cache_hit) *cache_hit = false;
    if (!cache.enabled) return analyze(entry, prime, opt);

    namespace fs = std::filesystem;
    std::string version = cache.version.empty() ? library_version : cache.version;
    std::string hash = hex64(fnv1a(render(entry)));
    fs::path dir = cache_directory(cache);
    fs::path file = dir / (sanitize(entry.name) + "-p" + std::to_string(prime) + "-" + hash + ".json");

    if (fs::exists(file)) {
        bool corrupt = false;
        try {
            std::ifstream in(file, std::ios::binary);
            std::ostringstream buf;
            buf << in.rdbuf();
            json env = json::parse(buf.str());
            if (env.at("cache_version").get<std::string>() == "1" &&
                env.at("library_version").get<std::string>() == version &&
                env.at("content_hash").get<std::string>() == hash && env.at("prime").get<int>() == prime &&
                env.at("options") == options_json(opt)) {
                auto t0 = std::chrono::steady_clock::now();
                AnalysisReport r = report_from_json(env.at("report"));
                r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                if (cache_hit) *cache_hit = true;
                return r;
            }
        } catch (const std::exception& ex) {
            corrupt = true;
            if (warning) *warning = "corrupt cache file " + file.string() + " (" + ex.what() + "); recomputing";
        }
        (void)corrupt;
    }

    AnalysisReport r = analyze(entry, prime, opt);
    try {
        fs::create_directories(dir);
        json env;
        env["cache_version"] = "1";
        env["library_version"] = version;
        env["content_hash"] = hash;
        env["prime"] = prime;
        env["options"] = options_json(opt);
        env["report"] = report_to_json(r);
        fs::path tmp = file;
        tmp += ".tmp" + std::to_string(static_cast<unsigned long>(fnv1a(file.string())) % 100000);
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            out << env.dump(2) << "\n";
        }
        fs::rename(tmp, file);
    } catch (const std::exception& ex) {
        if (warning && warning->empty()) *warning = std::string("cache write failed (") + ex.what() + ")";
    }
    return r;
}

}  // namespace ff
