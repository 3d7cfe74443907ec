#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "omega/common.hpp"

namespace omega {

inline constexpr unsigned kMaxArity = 3;

/// An extra operation ω, stored row-major: the tuple (i1,...,ik) lives at
/// flat index i1*n^(k-1) + ... + ik.
struct OperationTable {
    std::string name;
    unsigned arity = 0;
    std::vector<Element> table;

    friend bool operator==(const OperationTable&, const OperationTable&) = default;
};

/// Operation name and arity, in signature order.
struct OperationSymbol {
    std::string name;
    unsigned arity = 0;

    friend bool operator==(const OperationSymbol&, const OperationSymbol&) = default;
};

using Signature = std::vector<OperationSymbol>;

/// Unvalidated input to validate_algebra().
struct RawAlgebra {
    std::string name;
    std::size_t size = 0;
    std::vector<Element> add;
    std::vector<OperationTable> operations;
};

/// A finite Ω-group: a (not necessarily commutative) group written additively
/// with identity 0, plus zero-preserving operations of arity 1..3.
/// Immutable after construction; only validate_algebra() builds one.
class FiniteOmegaGroup {
public:
    const std::string& name() const noexcept { return name_; }
    std::size_t size() const noexcept { return size_; }

    Element add(Element a, Element b) const noexcept { return add_[a * size_ + b]; }
    Element neg(Element a) const noexcept { return neg_[a]; }
    /// -a - b + a + b
    Element commutator(Element a, Element b) const noexcept {
        return add(add(neg(a), neg(b)), add(a, b));
    }
    /// -p + u + p
    Element conjugate(Element u, Element p) const noexcept { return add(add(neg(p), u), p); }

    std::size_t operation_count() const noexcept { return operations_.size(); }
    const OperationTable& operation(std::size_t index) const { return operations_.at(index); }
    const std::vector<OperationTable>& operations() const noexcept { return operations_; }
    std::optional<std::size_t> find_operation(const std::string& name) const;
    Signature signature() const;

    /// Applies the index-th ω to `args` (arity must already match).
    Element apply(std::size_t index, std::span<const Element> args) const noexcept {
        const OperationTable& op = operations_[index];
        std::size_t flat = 0;
        for (unsigned i = 0; i < op.arity; ++i) flat = flat * size_ + args[i];
        return op.table[flat];
    }
    Element apply_unary(std::size_t index, Element a) const noexcept { return operations_[index].table[a]; }
    Element apply_binary(std::size_t index, Element a, Element b) const noexcept {
        return operations_[index].table[a * size_ + b];
    }

    /// Checked entry point: `op` is "add", "neg" or an ω name.
    Element apply_operation(const std::string& op, std::span<const Element> args) const;

    /// The ω-commutator [a;b;ω] = -ω(a) - ω(b) + ω(a+b), componentwise a+b.
    Element omega_commutator(std::size_t index, std::span<const Element> a, std::span<const Element> b) const;

    const std::vector<Element>& add_table() const noexcept { return add_; }
    bool is_commutative() const noexcept;

    friend bool operator==(const FiniteOmegaGroup&, const FiniteOmegaGroup&) = default;

private:
    friend FiniteOmegaGroup validate_algebra(RawAlgebra raw);

    std::string name_;
    std::size_t size_ = 0;
    std::vector<Element> add_;
    std::vector<Element> neg_;
    std::vector<OperationTable> operations_;
};

/// Checks the group axioms, table shapes and ω(0,...,0) = 0, then derives neg.
/// Throws Error{MalformedTable | NotAGroup | OmegaZeroViolation}.
FiniteOmegaGroup validate_algebra(RawAlgebra raw);

/// Checked apply by name: throws ArityMismatch or UnknownOperation.
Element apply_operation(const FiniteOmegaGroup& algebra, const std::string& op, std::span<const Element> args);

struct Homomorphism {
    FiniteOmegaGroup source;
    FiniteOmegaGroup target;
    std::vector<Element> map;

    Element operator()(Element a) const { return map.at(a); }
};

/// True iff `map` preserves add, neg, zero and every ω. Signatures must agree.
bool is_homomorphism(const FiniteOmegaGroup& source, const FiniteOmegaGroup& target,
                     std::span<const Element> map);
bool is_homomorphism(const Homomorphism& hom);

struct DirectProduct {
    FiniteOmegaGroup algebra;
    Homomorphism first;
    Homomorphism second;

    /// (a,b) is stored at index a * |H2| + b.
    Element pair(Element a, Element b) const { return a * static_cast<Element>(second.target.size()) + b; }
};

/// Componentwise product; throws SignatureMismatch.
DirectProduct direct_product(const FiniteOmegaGroup& left, const FiniteOmegaGroup& right);

// Classical structures as Ω-groups. Each throws LawViolation naming the law
// and a witnessing tuple when the tables do not form the claimed structure.

FiniteOmegaGroup make_group(std::string name, std::size_t size, std::vector<Element> add);

/// Associative ring (not necessarily unital); Ω = {mul}.
FiniteOmegaGroup make_ring(std::string name, std::size_t size, std::vector<Element> add,
                           std::vector<Element> mul);

/// Lie ring over Z_p; Ω = {bracket, s0, ..., s(p-1)} with s_c(x) = c·x.
FiniteOmegaGroup make_lie_ring(std::string name, std::size_t size, std::vector<Element> add,
                               std::vector<Element> bracket, unsigned p);

enum class ClassicalKind { Group, Ring, LieRing };

struct ClassicalTables {
    std::string name;
    std::size_t size = 0;
    std::vector<Element> add;
    std::vector<Element> product;  // mul for rings, bracket for Lie rings
    unsigned characteristic = 0;   // p for Lie rings over Z_p
};

FiniteOmegaGroup embed_classical(ClassicalKind kind, ClassicalTables tables);

/// True iff the signature is a single binary operation satisfying the ring laws.
bool is_ring(const FiniteOmegaGroup& algebra);

}  // namespace omega
