#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "omega/algebra.hpp"

namespace omega {

/// An element of the free Ω-group F(X): an immutable tree over variables
/// x1, x2, ..., zero, negation, addition and named Ω-operations.
/// Subtrees may be shared; equality is structural.
class Term {
public:
    enum class Kind { Zero, Var, Neg, Add, Op };

    Term();  // Zero

    static Term zero();
    static Term var(std::size_t index);  // 1-based
    static Term neg(Term t);
    static Term add(Term lhs, Term rhs);
    static Term op(std::string name, std::vector<Term> children);

    Kind kind() const noexcept { return node_->kind; }
    std::size_t var_index() const noexcept { return node_->index; }
    const std::string& op_name() const noexcept { return node_->name; }
    const std::vector<Term>& children() const noexcept { return node_->children; }

    /// Number of levels; Zero and Var have depth 1.
    std::size_t depth() const;
    /// Largest variable index occurring, 0 if none.
    std::size_t max_var() const;
    bool contains_op() const;

    /// Canonical fully-parenthesized form in the CLI grammar.
    std::string to_string() const;

    friend bool operator==(const Term& a, const Term& b);

private:
    struct Node {
        Kind kind = Kind::Zero;
        std::size_t index = 0;
        std::string name;
        std::vector<Term> children;
    };
    explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

/// Values of the variables x1..xn, in order.
using Assignment = std::vector<Element>;

/// Evaluates t at p. Throws UnboundVariable, UnknownOperation, ArityMismatch.
Element eval_term(const FiniteOmegaGroup& algebra, const Term& t, std::span<const Element> point);

/// The term function of t on H^n, listed over all points in lexicographic
/// order (point index = sum p_i |H|^(n-i)). Throws TooLarge above `max_points`.
std::vector<Element> term_function(const FiniteOmegaGroup& algebra, const Term& t, std::size_t n_vars,
                                   std::size_t max_points = 1'000'000);

/// -ω(a) - ω(b) + ω(a+b) for the named ω.
Element omega_commutator(const FiniteOmegaGroup& algebra, const std::string& op, std::span<const Element> a,
                         std::span<const Element> b);

/// Semantic check over H: t vanishes whenever the Y-block is zero and
/// whenever the X-block is zero. `in_x_block[i]` describes variable x(i+1).
bool is_commutator_word(const FiniteOmegaGroup& algebra, const Term& t, const std::vector<bool>& in_x_block,
                        std::size_t max_points = 1'000'000);

/// lhs = rhs becomes lhs + (-rhs) = 0.
Term normalize_equation(const Term& lhs, const Term& rhs);

/// Deterministic random term of depth <= max_depth. At every node the kind is
/// drawn uniformly among those admissible with the remaining depth budget.
Term random_term(std::uint64_t seed, const Signature& signature, std::size_t n_vars, std::size_t max_depth);

/// Parses `0`, `x<k>`, `(t + t)`, `(- t)`, `name(t,...,t)`, with `a + b + c`
/// and prefix `-t` accepted as shorthand. `t1 = t2` is normalized.
/// Throws ParseError with a column.
Term parse_term(std::string_view text);

}  // namespace omega
