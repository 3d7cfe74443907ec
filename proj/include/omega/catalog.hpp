#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "omega/algebra.hpp"
#include "omega/domains.hpp"

namespace omega {

enum class EntryKind { Group, Ring, LieRing, Raw };

std::string_view to_string(EntryKind kind);

/// Where an expected value comes from.
enum class Provenance {
    Paper,    // a general statement of the theory
    Derived,  // brute force, re-derived on every run
};

struct ExpectedValue {
    bool value = false;
    Provenance provenance = Provenance::Derived;
    std::string note;
};

/// Property names used in expectations and reports.
namespace property {
inline constexpr const char* kAbelian = "abelian";
inline constexpr const char* kDomain = "domain";
inline constexpr const char* kAnticommutative = "anticommutative";
inline constexpr const char* kCAnticommutative = "c-anticommutative";
inline constexpr const char* kEquationalDomain = "equational-domain";
inline constexpr const char* kFormula5 = "formula5";
inline constexpr const char* kRemark1 = "remark1";
}  // namespace property

struct CatalogEntry {
    std::string name;
    EntryKind kind = EntryKind::Raw;
    std::function<FiniteOmegaGroup()> construct;
    std::map<std::string, ExpectedValue> expected;
};

/// Groups Z2, Z3, Z4, Klein, S3, D4, Q8; rings Z2..Z6, F4, F2[x]/(x^2), M2(F2),
/// the null ring on Z2xZ2; Lie rings over Z2: abelian of dimension 2,
/// Heisenberg, sl2(F2). Every constructor validates.
std::vector<CatalogEntry> build_catalog();

/// Looks up an entry by name; nullopt when absent.
std::optional<CatalogEntry> find_catalog_entry(const std::string& name);

struct ClassificationGuards {
    /// Largest |H| for which the equational-domain (Zariski) check runs.
    std::size_t max_zariski_size = 8;
    /// Largest |H| for which the exhaustive Ω-subgroup oracle runs.
    std::size_t max_oracle_size = 8;
};

struct PropertyResult {
    std::string property;
    bool computed = false;
    WitnessedVerdict verdict;  // verdict.verdict is the property value
    std::string skipped;       // reason when not computed
};

struct EntryReport {
    std::string name;
    EntryKind kind = EntryKind::Raw;
    std::size_t size = 0;
    bool skipped = false;  // the trivial algebra
    std::vector<PropertyResult> properties;
    /// One line per failed cross-check or expectation mismatch.
    std::vector<std::string> violations;

    const PropertyResult* find(const std::string& property) const;
};

struct ClassificationReport {
    ClassificationGuards guards;
    std::vector<EntryReport> entries;

    std::size_t violation_count() const;
};

/// Classifies every entry and cross-checks the equivalences between the
/// properties. Checks outside a guard are recorded as GuardExceeded.
ClassificationReport run_classification(const std::vector<CatalogEntry>& entries,
                                        const ClassificationGuards& guards = {});

std::string report_to_text(const ClassificationReport& report);
/// Keys sorted, no timings: byte-identical for identical inputs.
std::string report_to_json(const ClassificationReport& report);

}  // namespace omega
