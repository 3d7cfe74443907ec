#pragma once

#include <vector>

#include "omega/algebra.hpp"
#include "omega/subset_mask.hpp"

namespace omega {

/// ⟨S⟩: least Ω-subgroup containing S.
SubsetMask omega_subgroup_closure(const FiniteOmegaGroup& algebra, const SubsetMask& generators);
SubsetMask omega_subgroup_closure(const FiniteOmegaGroup& algebra, std::initializer_list<Element> generators);

bool is_omega_subgroup(const FiniteOmegaGroup& algebra, const SubsetMask& subset);

/// True iff `subset` is an ideal of the Ω-subgroup `ambient`: closed under every
/// ω, normal in (ambient,+), and absorbing [a;b;ω] for a over subset, b over ambient.
bool is_ideal(const FiniteOmegaGroup& algebra, const SubsetMask& ambient, const SubsetMask& subset);

/// id_P⟨S⟩. Throws NotASubgroup if P is not an Ω-subgroup, NotContained if S ⊄ P.
SubsetMask ideal_closure(const FiniteOmegaGroup& algebra, const SubsetMask& ambient, const SubsetMask& generators);
/// id⟨S⟩ = id_H⟨S⟩.
SubsetMask ideal_closure(const FiniteOmegaGroup& algebra, const SubsetMask& generators);

/// Generator set of [A,B]: the values -a-b+a+b and [ā;b̄;ω] with ā over A,
/// b̄ over B. Sorted ascending, duplicates removed.
std::vector<Element> commutator_generators(const FiniteOmegaGroup& algebra, const SubsetMask& a,
                                           const SubsetMask& b);

/// [A,B]: the ideal of {A,B} = ⟨A ∪ B⟩ generated by commutator_generators(A,B).
/// Throws NotASubgroup unless both arguments are Ω-subgroups.
SubsetMask commutator_group(const FiniteOmegaGroup& algebra, const SubsetMask& a, const SubsetMask& b);

/// Every ideal of H in mask order. Throws TooLarge above |H| = 16.
std::vector<SubsetMask> enumerate_ideals(const FiniteOmegaGroup& algebra);

/// Every Ω-subgroup of H in mask order. Throws TooLarge above `max_size`.
std::vector<SubsetMask> enumerate_omega_subgroups(const FiniteOmegaGroup& algebra, std::size_t max_size = 64);

}  // namespace omega
