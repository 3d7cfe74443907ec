#pragma once

#include <string>
#include <utility>
#include <vector>

#include "omega/algebra.hpp"
#include "omega/subset_mask.hpp"

namespace omega {

/// A decided predicate plus the evidence behind it.
struct WitnessedVerdict {
    bool verdict = false;
    /// Labelled carrier elements, e.g. {"a", 2}, {"b", 2}.
    std::vector<std::pair<std::string, Element>> witness;
    /// Which criterion produced the verdict.
    std::string method;

    bool has_witness() const noexcept { return !witness.empty(); }
    /// "(2,2)"
    std::string witness_tuple() const;
};

/// [P,P] = 0. Witness: smallest nonzero generator of [P,P].
WitnessedVerdict is_abelian(const FiniteOmegaGroup& algebra);
WitnessedVerdict is_abelian(const FiniteOmegaGroup& algebra, const SubsetMask& subgroup);

/// verdict = true iff a zero divisor exists: the lexicographically first
/// nonzero (a,b) with [id⟨a⟩, id⟨b⟩] = 0.
WitnessedVerdict zero_divisor_witness(const FiniteOmegaGroup& algebra);
bool is_domain(const FiniteOmegaGroup& algebra);

/// Anticommutativity of P decided on principal ideals id_P⟨a⟩:
/// (1) none is abelian, (2) any two meet nontrivially.
WitnessedVerdict is_anticommutative(const FiniteOmegaGroup& algebra);
WitnessedVerdict is_anticommutative(const FiniteOmegaGroup& algebra, const SubsetMask& subgroup);

/// The same predicate quantified over every ideal from enumerate_ideals (|H| <= 16).
bool is_anticommutative_by_all_ideals(const FiniteOmegaGroup& algebra);

/// Criterion: [⟨a⟩,⟨b⟩] != 0 for all nonzero a, b. With |H| <= oracle_limit the
/// verdict is also checked against anticommutativity of every nonzero
/// Ω-subgroup; disagreement throws OracleDisagreement.
WitnessedVerdict is_c_anticommutative(const FiniteOmegaGroup& algebra, std::size_t oracle_limit = 8);

/// Every nonzero Ω-subgroup is anticommutative (exhaustive).
WitnessedVerdict c_anticommutative_by_subgroups(const FiniteOmegaGroup& algebra);

/// Some ⟨a⟩, a != 0, is abelian (equivalently: a nontrivial abelian Ω-subgroup exists).
WitnessedVerdict has_nontrivial_abelian_subgroup(const FiniteOmegaGroup& algebra);

/// (xy = yx = 0) ⇒ (x = 0 or y = 0). Throws NotARing.
WitnessedVerdict ring_satisfies_formula5(const FiniteOmegaGroup& ring);

struct GroupZeroDivisorSets {
    /// a != 0 with some b != 0 whose conjugates all commute with a's conjugates.
    SubsetMask by_two_conjugates;
    /// a != 0 with some b != 0 commuting with every conjugate of a.
    SubsetMask by_one_conjugate;
};

/// Throws NotAGroup when Ω is nonempty.
GroupZeroDivisorSets group_zero_divisor_sets(const FiniteOmegaGroup& group);

}  // namespace omega
