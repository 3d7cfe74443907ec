#include "omega/catalog.hpp"

#include <algorithm>
#include <array>

#include "json.hpp"

#include "omega/closure.hpp"
#include "omega/zariski.hpp"

namespace omega {

std::string_view to_string(EntryKind kind) {
    switch (kind) {
        case EntryKind::Group: return "group";
        case EntryKind::Ring: return "ring";
        case EntryKind::LieRing: return "lie-ring";
        case EntryKind::Raw: return "raw";
    }
    return "raw";
}

namespace {

using Table = std::vector<Element>;

Table binary_table(std::size_t n, const std::function<Element(Element, Element)>& f) {
    Table t(n * n);
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) t[a * n + b] = f(a, b);
    return t;
}

Table cyclic_add(std::size_t n) {
    return binary_table(n, [n](Element a, Element b) { return static_cast<Element>((a + b) % n); });
}

Table xor_add(std::size_t n) {
    return binary_table(n, [](Element a, Element b) { return a ^ b; });
}

// Permutation group on the listed elements (identity first); a+b applies a, then b.
FiniteOmegaGroup permutation_group(std::string name, const std::vector<std::vector<int>>& elements) {
    const std::size_t n = elements.size();
    auto index_of = [&](const std::vector<int>& p) {
        return static_cast<Element>(std::find(elements.begin(), elements.end(), p) - elements.begin());
    };
    Table add = binary_table(n, [&](Element a, Element b) {
        std::vector<int> composed(elements[a].size());
        for (std::size_t i = 0; i < composed.size(); ++i) composed[i] = elements[b][elements[a][i]];
        return index_of(composed);
    });
    return make_group(std::move(name), n, std::move(add));
}

FiniteOmegaGroup make_s3() {
    // id, (01), (02), (12), (012), (021)
    return permutation_group("S3", {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}});
}

FiniteOmegaGroup make_d4() {
    // Symmetries of a square with vertices 0..3: rotations r^k, then reflections.
    return permutation_group("D4", {{0, 1, 2, 3},
                                    {1, 2, 3, 0},
                                    {2, 3, 0, 1},
                                    {3, 0, 1, 2},
                                    {0, 3, 2, 1},
                                    {2, 1, 0, 3},
                                    {1, 0, 3, 2},
                                    {3, 2, 1, 0}});
}

FiniteOmegaGroup make_q8() {
    // Index 2k + s is (-1)^s e_k with e = 1, i, j, k.
    static constexpr std::array<std::array<int, 4>, 4> basis{{{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}};
    static constexpr std::array<std::array<int, 4>, 4> sign{{{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}}};
    Table add = binary_table(8, [](Element a, Element b) {
        const unsigned ka = a / 2, kb = b / 2;
        const unsigned s = (a % 2 + b % 2 + static_cast<unsigned>(sign[ka][kb])) % 2;
        return static_cast<Element>(2 * basis[ka][kb] + s);
    });
    return make_group("Q8", 8, std::move(add));
}

FiniteOmegaGroup make_zn_ring(std::size_t n) {
    return make_ring("Z" + std::to_string(n) + "-ring", n, cyclic_add(n),
                     binary_table(n, [n](Element a, Element b) { return static_cast<Element>((a * b) % n); }));
}

FiniteOmegaGroup make_f4() {
    // a + bω with ω^2 = ω + 1, stored at a + 2b.
    return make_ring("F4", 4, xor_add(4), binary_table(4, [](Element x, Element y) {
                         const Element a = x & 1, b = x >> 1, c = y & 1, d = y >> 1;
                         const Element lo = (a & c) ^ (b & d);
                         const Element hi = (a & d) ^ (b & c) ^ (b & d);
                         return lo | (hi << 1);
                     }));
}

FiniteOmegaGroup make_dual_numbers() {
    // a + bx with x^2 = 0, stored at a + 2b.
    return make_ring("F2[x]/(x^2)", 4, xor_add(4), binary_table(4, [](Element x, Element y) {
                         const Element a = x & 1, b = x >> 1, c = y & 1, d = y >> 1;
                         return (a & c) | (((a & d) ^ (b & c)) << 1);
                     }));
}

FiniteOmegaGroup make_m2f2() {
    // [[a,b],[c,d]] stored at a + 2b + 4c + 8d.
    return make_ring("M2(F2)", 16, xor_add(16), binary_table(16, [](Element x, Element y) {
                         auto bit = [](Element v, int i) { return (v >> i) & 1U; };
                         const Element a = bit(x, 0), b = bit(x, 1), c = bit(x, 2), d = bit(x, 3);
                         const Element e = bit(y, 0), f = bit(y, 1), g = bit(y, 2), h = bit(y, 3);
                         const Element r00 = (a & e) ^ (b & g), r01 = (a & f) ^ (b & h);
                         const Element r10 = (c & e) ^ (d & g), r11 = (c & f) ^ (d & h);
                         return r00 | (r01 << 1) | (r10 << 2) | (r11 << 3);
                     }));
}

FiniteOmegaGroup make_null_ring() {
    return make_ring("null-ring-Z2xZ2", 4, xor_add(4), Table(16, 0));
}

FiniteOmegaGroup make_abelian_lie() {
    return make_lie_ring("abelian-lie-2", 4, xor_add(4), Table(16, 0), 2);
}

FiniteOmegaGroup make_heisenberg() {
    // Strictly upper triangular 3x3 over F2: x12 + 2*x13 + 4*x23.
    return make_lie_ring("heisenberg", 8, xor_add(8), binary_table(8, [](Element x, Element y) {
                             const Element x12 = x & 1, x23 = (x >> 2) & 1, y12 = y & 1, y23 = (y >> 2) & 1;
                             return ((x12 & y23) ^ (y12 & x23)) << 1;
                         }),
                         2);
}

FiniteOmegaGroup make_sl2() {
    // [[a,b],[c,a]] over F2 stored at a + 2b + 4c; bracket XY - YX.
    return make_lie_ring("sl2(F2)", 8, xor_add(8), binary_table(8, [](Element x, Element y) {
                             // Off-diagonal entries of XY - YX cancel in characteristic 2;
                             // both diagonal entries equal bg + cf.
                             const Element b = (x >> 1) & 1, c = (x >> 2) & 1;
                             const Element f = (y >> 1) & 1, g = (y >> 2) & 1;
                             return (b & g) ^ (c & f);
                         }),
                         2);
}

FiniteOmegaGroup make_trivial() {
    return validate_algebra(RawAlgebra{"trivial", 1, {0}, {}});
}

ExpectedValue derived(bool v, std::string note = "exhaustive check") { return {v, Provenance::Derived, std::move(note)}; }
ExpectedValue paper(bool v, std::string note) { return {v, Provenance::Paper, std::move(note)}; }

CatalogEntry group_entry(std::string name, std::function<FiniteOmegaGroup()> make, bool abelian) {
    CatalogEntry e{std::move(name), EntryKind::Group, std::move(make), {}};
    e.expected[property::kAbelian] = derived(abelian);
    e.expected[property::kDomain] = derived(false);
    e.expected[property::kAnticommutative] = derived(false);
    e.expected[property::kCAnticommutative] = paper(false, "a nontrivial cyclic subgroup is abelian");
    e.expected[property::kEquationalDomain] = paper(false, "nontrivial groups are not equational domains");
    e.expected[property::kRemark1] = paper(true, "conjugating one side suffices");
    return e;
}

CatalogEntry ring_entry(std::string name, std::function<FiniteOmegaGroup()> make, bool field_like) {
    CatalogEntry e{std::move(name), EntryKind::Ring, std::move(make), {}};
    e.expected[property::kAbelian] = derived(false);
    for (const char* p : {property::kDomain, property::kAnticommutative, property::kCAnticommutative,
                          property::kEquationalDomain, property::kFormula5})
        e.expected[p] = derived(field_like);
    return e;
}

}  // namespace

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> out;
    for (std::size_t n : {2, 3, 4}) {
        out.push_back(group_entry("Z" + std::to_string(n) + "-group",
                                  [n] { return make_group("Z" + std::to_string(n) + "-group", n, cyclic_add(n)); },
                                  true));
    }
    out.push_back(group_entry("Klein", [] { return make_group("Klein", 4, xor_add(4)); }, true));
    out.push_back(group_entry("S3", make_s3, false));
    out.push_back(group_entry("D4", make_d4, false));
    out.push_back(group_entry("Q8", make_q8, false));
    out.back().expected[property::kCAnticommutative] = derived(false, "the centre {1,-1} is abelian");

    for (std::size_t n : {2, 3, 4, 5, 6}) {
        const bool prime = n != 4 && n != 6;
        out.push_back(ring_entry("Z" + std::to_string(n) + "-ring", [n] { return make_zn_ring(n); }, prime));
    }
    out.push_back(ring_entry("F4", make_f4, true));
    out.push_back(ring_entry("F2[x]/(x^2)", make_dual_numbers, false));

    CatalogEntry null_ring = ring_entry("null-ring-Z2xZ2", make_null_ring, false);
    null_ring.expected[property::kAbelian] = derived(true);
    null_ring.expected[property::kEquationalDomain] = paper(false, "abelian Ω-groups are not equational domains");
    out.push_back(std::move(null_ring));

    // Simple, so every nonzero principal ideal is the whole ring: a domain.
    // E11 and E22 annihilate each other, so formula (5) and the criterion fail.
    CatalogEntry m2 = ring_entry("M2(F2)", make_m2f2, false);
    m2.expected[property::kDomain] = derived(true, "simple ring: every nonzero ideal is M2(F2)");
    m2.expected[property::kAnticommutative] = derived(true, "simple nonabelian ring");
    m2.expected[property::kCAnticommutative] = derived(false, "E11*E22 = E22*E11 = 0");
    m2.expected[property::kEquationalDomain] = derived(false, "same witness as formula5; outside the default guard");
    m2.expected[property::kFormula5] = derived(false, "witness (E11,E22) = (1,8)");
    out.push_back(std::move(m2));

    auto lie = [](std::string name, std::function<FiniteOmegaGroup()> make, bool abelian) {
        CatalogEntry e{std::move(name), EntryKind::LieRing, std::move(make), {}};
        e.expected[property::kAbelian] = derived(abelian);
        for (const char* p : {property::kDomain, property::kAnticommutative, property::kCAnticommutative})
            e.expected[p] = derived(false);
        e.expected[property::kEquationalDomain] = derived(false);
        return e;
    };
    out.push_back(lie("abelian-lie-2", make_abelian_lie, true));
    out.push_back(lie("heisenberg", make_heisenberg, false));
    out.push_back(lie("sl2(F2)", make_sl2, false));

    out.push_back(CatalogEntry{"trivial", EntryKind::Raw, make_trivial, {}});
    return out;
}

std::optional<CatalogEntry> find_catalog_entry(const std::string& name) {
    for (auto& e : build_catalog())
        if (e.name == name) return e;
    return std::nullopt;
}

const PropertyResult* EntryReport::find(const std::string& property) const {
    for (const auto& p : properties)
        if (p.property == property) return &p;
    return nullptr;
}

std::size_t ClassificationReport::violation_count() const {
    std::size_t total = 0;
    for (const auto& e : entries) total += e.violations.size();
    return total;
}

namespace {

PropertyResult computed(std::string name, WitnessedVerdict v) { return {std::move(name), true, std::move(v), {}}; }

PropertyResult skipped(std::string name, std::string reason) { return {std::move(name), false, {}, std::move(reason)}; }

WitnessedVerdict remark1_verdict(const FiniteOmegaGroup& group) {
    const GroupZeroDivisorSets sets = group_zero_divisor_sets(group);
    WitnessedVerdict v{sets.by_two_conjugates == sets.by_one_conjugate, {}, "conjugate-commutation-sets"};
    if (!v.verdict) {
        for (Element a = 1; a < group.size(); ++a) {
            if (sets.by_two_conjugates.test(a) != sets.by_one_conjugate.test(a)) {
                v.witness.emplace_back("a", a);
                break;
            }
        }
    }
    return v;
}

EntryReport classify(const CatalogEntry& entry, const ClassificationGuards& guards) {
    EntryReport r;
    r.name = entry.name;
    r.kind = entry.kind;
    const FiniteOmegaGroup h = entry.construct();
    r.size = h.size();
    if (h.size() == 1) {
        r.skipped = true;
        return r;
    }

    r.properties.push_back(computed(property::kAbelian, is_abelian(h)));
    WitnessedVerdict zd = zero_divisor_witness(h);
    zd.verdict = !zd.verdict;
    r.properties.push_back(computed(property::kDomain, zd));
    r.properties.push_back(computed(property::kAnticommutative, is_anticommutative(h)));
    try {
        r.properties.push_back(computed(property::kCAnticommutative, is_c_anticommutative(h, guards.max_oracle_size)));
    } catch (const Error& e) {
        r.violations.push_back(std::string("oracle: ") + e.what());
        r.properties.push_back(skipped(property::kCAnticommutative, e.what()));
    }
    if (h.size() <= guards.max_zariski_size) {
        r.properties.push_back(computed(property::kEquationalDomain, equational_domain_check(h)));
    } else {
        r.properties.push_back(skipped(property::kEquationalDomain,
                                       "GuardExceeded: |H| = " + std::to_string(h.size()) + " > max-zariski-size " +
                                           std::to_string(guards.max_zariski_size)));
    }
    if (entry.kind == EntryKind::Ring) r.properties.push_back(computed(property::kFormula5, ring_satisfies_formula5(h)));
    if (entry.kind == EntryKind::Group) r.properties.push_back(computed(property::kRemark1, remark1_verdict(h)));

    auto value = [&](const char* p) -> std::optional<bool> {
        const PropertyResult* res = r.find(p);
        if (!res || !res->computed) return std::nullopt;
        return res->verdict.verdict;
    };
    auto show = [](bool b) { return b ? "true" : "false"; };
    auto equal = [&](const std::string& check, const char* p, const char* q) {
        const auto a = value(p), b = value(q);
        if (a && b && *a != *b)
            r.violations.push_back(check + ": " + p + "=" + show(*a) + " but " + q + "=" + show(*b));
    };
    auto implies = [&](const std::string& check, const char* p, const char* q) {
        const auto a = value(p), b = value(q);
        if (a && b && *a && !*b)
            r.violations.push_back(check + ": " + p + "=true but " + q + "=false");
    };

    equal("theorem-1", property::kDomain, property::kEquationalDomain);
    equal("proposition-2", property::kDomain, property::kAnticommutative);
    equal("proposition-3", property::kCAnticommutative, property::kEquationalDomain);
    // Theorem 1 and Proposition 3 together identify domains with the
    // criterion; this is the only route to M2(F2) under the default guard.
    if (!value(property::kEquationalDomain)) equal("theorem-1+proposition-3", property::kDomain, property::kCAnticommutative);
    equal("example-2-5", property::kFormula5, property::kDomain);
    implies("chain", property::kCAnticommutative, property::kAnticommutative);
    implies("chain", property::kAnticommutative, property::kDomain);
    if (const auto c = value(property::kCAnticommutative); c && *c) {
        const WitnessedVerdict ab = has_nontrivial_abelian_subgroup(h);
        if (ab.verdict)
            r.violations.push_back("example-2-2: nontrivial abelian Ω-subgroup at a=" + std::to_string(ab.witness[0].second) +
                                   " but c-anticommutative=true");
    }
    if (const auto rem = value(property::kRemark1); rem && !*rem) r.violations.push_back("remark-1: sets differ");

    for (const auto& [p, expected] : entry.expected) {
        const auto got = value(p.c_str());
        if (got && *got != expected.value)
            r.violations.push_back("expected: " + p + "=" + show(expected.value) + " but computed " + show(*got));
    }
    return r;
}

}  // namespace

ClassificationReport run_classification(const std::vector<CatalogEntry>& entries, const ClassificationGuards& guards) {
    ClassificationReport report{guards, {}};
    for (const auto& e : entries) report.entries.push_back(classify(e, guards));
    return report;
}

std::string report_to_text(const ClassificationReport& report) {
    std::string out;
    auto line = [&](const std::string& key, const std::string& value) { out += key + ": " + value + "\n"; };
    line("max-zariski-size", std::to_string(report.guards.max_zariski_size));
    line("max-oracle-size", std::to_string(report.guards.max_oracle_size));
    for (const auto& e : report.entries) {
        out += "\n";
        line("entry", e.name);
        line("kind", std::string(to_string(e.kind)));
        line("size", std::to_string(e.size));
        if (e.skipped) {
            line("skipped", "trivial algebra");
            continue;
        }
        for (const auto& p : e.properties) {
            if (!p.computed) {
                line(p.property, "skipped (" + p.skipped + ")");
                continue;
            }
            std::string value = p.verdict.verdict ? "true" : "false";
            if (p.verdict.has_witness()) value += " witness " + p.verdict.witness_tuple();
            line(p.property, value);
        }
        for (const auto& v : e.violations) line("violation", v);
    }
    out += "\n";
    line("violations", std::to_string(report.violation_count()));
    return out;
}

std::string report_to_json(const ClassificationReport& report) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : report.entries) {
        nlohmann::json props = nlohmann::json::object();
        for (const auto& p : e.properties) {
            nlohmann::json j;
            j["computed"] = p.computed;
            if (p.computed) {
                j["value"] = p.verdict.verdict;
                j["method"] = p.verdict.method;
                nlohmann::json w = nlohmann::json::object();
                for (const auto& [label, element] : p.verdict.witness) w[label] = element;
                j["witness"] = w;
            } else {
                j["value"] = nullptr;
                j["reason"] = p.skipped;
            }
            props[p.property] = j;
        }
        entries.push_back({{"name", e.name},
                           {"kind", std::string(to_string(e.kind))},
                           {"size", e.size},
                           {"skipped", e.skipped},
                           {"properties", props},
                           {"violations", e.violations}});
    }
    nlohmann::json root{{"guards",
                         {{"max-zariski-size", report.guards.max_zariski_size},
                          {"max-oracle-size", report.guards.max_oracle_size}}},
                        {"entries", entries},
                        {"violation-count", report.violation_count()}};
    return root.dump(2) + "\n";
}

}  // namespace omega
