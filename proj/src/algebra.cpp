#include "omega/algebra.hpp"

#include <array>
#include <sstream>
#include <utility>

namespace omega {

namespace {

std::size_t power(std::size_t base, unsigned exponent) {
    std::size_t r = 1;
    for (unsigned i = 0; i < exponent; ++i) r *= base;
    return r;
}

void check_table(const std::string& what, const std::vector<Element>& table, std::size_t size, unsigned arity) {
    const std::size_t expected = power(size, arity);
    if (table.size() != expected) {
        throw Error(ErrorKind::MalformedTable, what + " has " + std::to_string(table.size()) +
                                                  " entries, expected " + std::to_string(expected));
    }
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (table[i] >= size) {
            throw Error(ErrorKind::MalformedTable, what + " entry " + std::to_string(i) + " = " +
                                                      std::to_string(table[i]) + " is outside [0," +
                                                      std::to_string(size) + ")");
        }
    }
}

// Calls fn(tuple) for every tuple in {0..n-1}^arity, lexicographically.
template <typename Fn>
void for_each_tuple(std::size_t n, unsigned arity, Fn&& fn) {
    std::array<Element, kMaxArity> t{};
    const std::size_t total = power(n, arity);
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::size_t rest = flat;
        for (unsigned i = arity; i-- > 0;) {
            t[i] = static_cast<Element>(rest % n);
            rest /= n;
        }
        fn(std::span<const Element>(t.data(), arity));
    }
}

[[noreturn]] void law_violation(const std::string& algebra, const std::string& law,
                                std::initializer_list<Element> witness) {
    std::ostringstream out;
    out << algebra << ": " << law << " fails at (";
    bool first = true;
    for (Element e : witness) {
        out << (first ? "" : ",") << e;
        first = false;
    }
    out << ')';
    throw Error(ErrorKind::LawViolation, out.str());
}

}  // namespace

std::optional<std::size_t> FiniteOmegaGroup::find_operation(const std::string& name) const {
    for (std::size_t i = 0; i < operations_.size(); ++i)
        if (operations_[i].name == name) return i;
    return std::nullopt;
}

Signature FiniteOmegaGroup::signature() const {
    Signature sig;
    sig.reserve(operations_.size());
    for (const auto& op : operations_) sig.push_back({op.name, op.arity});
    return sig;
}

bool FiniteOmegaGroup::is_commutative() const noexcept {
    for (Element a = 0; a < size_; ++a)
        for (Element b = a + 1; b < size_; ++b)
            if (add(a, b) != add(b, a)) return false;
    return true;
}

Element FiniteOmegaGroup::apply_operation(const std::string& op, std::span<const Element> args) const {
    auto check = [&](std::size_t arity) {
        if (args.size() != arity) {
            throw Error(ErrorKind::ArityMismatch, op + " expects " + std::to_string(arity) + " arguments, got " +
                                                      std::to_string(args.size()));
        }
        for (Element a : args)
            if (a >= size_) {
                throw Error(ErrorKind::MalformedTable,
                            "argument " + std::to_string(a) + " outside carrier of " + name_);
            }
    };
    if (op == "add") {
        check(2);
        return add(args[0], args[1]);
    }
    if (op == "neg") {
        check(1);
        return neg(args[0]);
    }
    auto index = find_operation(op);
    if (!index) throw Error(ErrorKind::UnknownOperation, "no operation '" + op + "' in " + name_);
    check(operations_[*index].arity);
    return apply(*index, args);
}

Element FiniteOmegaGroup::omega_commutator(std::size_t index, std::span<const Element> a,
                                           std::span<const Element> b) const {
    const OperationTable& op = operations_.at(index);
    if (a.size() != op.arity || b.size() != op.arity) {
        throw Error(ErrorKind::ArityMismatch, "omega-commutator for " + op.name + " needs two " +
                                                  std::to_string(op.arity) + "-tuples");
    }
    std::array<Element, kMaxArity> sum{};
    for (unsigned i = 0; i < op.arity; ++i) sum[i] = add(a[i], b[i]);
    const Element wa = apply(index, a);
    const Element wb = apply(index, b);
    const Element wsum = apply(index, std::span<const Element>(sum.data(), op.arity));
    return add(add(neg(wa), neg(wb)), wsum);
}

FiniteOmegaGroup validate_algebra(RawAlgebra raw) {
    const std::size_t n = raw.size;
    if (n == 0) throw Error(ErrorKind::MalformedTable, raw.name + ": size must be positive");
    check_table("add table of " + raw.name, raw.add, n, 2);

    auto add = [&](Element a, Element b) { return raw.add[a * n + b]; };
    for (Element a = 0; a < n; ++a) {
        if (add(0, a) != a || add(a, 0) != a) {
            throw Error(ErrorKind::NotAGroup, raw.name + ": element 0 is not the identity (witness a=" +
                                                  std::to_string(a) + ")");
        }
    }
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            for (Element c = 0; c < n; ++c)
                if (add(add(a, b), c) != add(a, add(b, c))) {
                    throw Error(ErrorKind::NotAGroup, raw.name + ": addition is not associative at (" +
                                                          std::to_string(a) + "," + std::to_string(b) + "," +
                                                          std::to_string(c) + ")");
                }
    std::vector<Element> neg(n, 0);
    for (Element a = 0; a < n; ++a) {
        bool found = false;
        for (Element b = 0; b < n && !found; ++b) {
            if (add(a, b) == 0 && add(b, a) == 0) {
                neg[a] = b;
                found = true;
            }
        }
        if (!found) throw Error(ErrorKind::NotAGroup, raw.name + ": element " + std::to_string(a) + " has no inverse");
    }

    for (std::size_t i = 0; i < raw.operations.size(); ++i) {
        const OperationTable& op = raw.operations[i];
        if (op.arity == 0 || op.arity > kMaxArity) {
            throw Error(ErrorKind::MalformedTable,
                        "operation '" + op.name + "' has unsupported arity " + std::to_string(op.arity));
        }
        if (op.name.empty() || op.name == "add" || op.name == "neg") {
            throw Error(ErrorKind::MalformedTable, "invalid operation name '" + op.name + "'");
        }
        for (std::size_t j = 0; j < i; ++j)
            if (raw.operations[j].name == op.name)
                throw Error(ErrorKind::MalformedTable, "duplicate operation '" + op.name + "'");
        check_table("table of '" + op.name + "'", op.table, n, op.arity);
        if (op.table[0] != 0) {
            throw Error(ErrorKind::OmegaZeroViolation,
                        "operation '" + op.name + "' maps the zero tuple to " + std::to_string(op.table[0]));
        }
    }

    FiniteOmegaGroup h;
    h.name_ = std::move(raw.name);
    h.size_ = n;
    h.add_ = std::move(raw.add);
    h.neg_ = std::move(neg);
    h.operations_ = std::move(raw.operations);
    return h;
}

Element apply_operation(const FiniteOmegaGroup& algebra, const std::string& op, std::span<const Element> args) {
    return algebra.apply_operation(op, args);
}

bool is_homomorphism(const FiniteOmegaGroup& source, const FiniteOmegaGroup& target, std::span<const Element> map) {
    if (source.signature() != target.signature()) return false;
    if (map.size() != source.size()) return false;
    for (Element m : map)
        if (m >= target.size()) return false;
    if (map[0] != 0) return false;
    const std::size_t n = source.size();
    for (Element a = 0; a < n; ++a) {
        if (map[source.neg(a)] != target.neg(map[a])) return false;
        for (Element b = 0; b < n; ++b)
            if (map[source.add(a, b)] != target.add(map[a], map[b])) return false;
    }
    for (std::size_t i = 0; i < source.operation_count(); ++i) {
        bool ok = true;
        for_each_tuple(n, source.operation(i).arity, [&](std::span<const Element> t) {
            if (!ok) return;
            std::array<Element, kMaxArity> image{};
            for (std::size_t k = 0; k < t.size(); ++k) image[k] = map[t[k]];
            ok = map[source.apply(i, t)] == target.apply(i, std::span<const Element>(image.data(), t.size()));
        });
        if (!ok) return false;
    }
    return true;
}

bool is_homomorphism(const Homomorphism& hom) { return is_homomorphism(hom.source, hom.target, hom.map); }

DirectProduct direct_product(const FiniteOmegaGroup& left, const FiniteOmegaGroup& right) {
    if (left.signature() != right.signature()) {
        throw Error(ErrorKind::SignatureMismatch, left.name() + " and " + right.name() + " have different signatures");
    }
    const std::size_t n1 = left.size();
    const std::size_t n2 = right.size();
    const std::size_t n = n1 * n2;
    auto first = [&](std::size_t x) { return static_cast<Element>(x / n2); };
    auto second = [&](std::size_t x) { return static_cast<Element>(x % n2); };
    auto pair = [&](Element a, Element b) { return static_cast<Element>(a * n2 + b); };

    RawAlgebra raw;
    raw.name = left.name() + "x" + right.name();
    raw.size = n;
    raw.add.resize(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            raw.add[x * n + y] = pair(left.add(first(x), first(y)), right.add(second(x), second(y)));
    for (std::size_t i = 0; i < left.operation_count(); ++i) {
        const unsigned arity = left.operation(i).arity;
        OperationTable op{left.operation(i).name, arity, std::vector<Element>(power(n, arity))};
        std::size_t flat = 0;
        for_each_tuple(n, arity, [&](std::span<const Element> t) {
            std::array<Element, kMaxArity> l{}, r{};
            for (unsigned k = 0; k < arity; ++k) {
                l[k] = first(t[k]);
                r[k] = second(t[k]);
            }
            op.table[flat++] = pair(left.apply(i, std::span<const Element>(l.data(), arity)),
                                    right.apply(i, std::span<const Element>(r.data(), arity)));
        });
        raw.operations.push_back(std::move(op));
    }

    DirectProduct product{validate_algebra(std::move(raw)), {}, {}};
    std::vector<Element> p1(n), p2(n);
    for (std::size_t x = 0; x < n; ++x) {
        p1[x] = first(x);
        p2[x] = second(x);
    }
    product.first = Homomorphism{product.algebra, left, std::move(p1)};
    product.second = Homomorphism{product.algebra, right, std::move(p2)};
    return product;
}

FiniteOmegaGroup make_group(std::string name, std::size_t size, std::vector<Element> add) {
    return validate_algebra(RawAlgebra{std::move(name), size, std::move(add), {}});
}

FiniteOmegaGroup make_ring(std::string name, std::size_t size, std::vector<Element> add, std::vector<Element> mul) {
    RawAlgebra raw{name, size, std::move(add), {}};
    raw.operations.push_back(OperationTable{"mul", 2, std::move(mul)});
    FiniteOmegaGroup h = validate_algebra(std::move(raw));
    const std::size_t n = h.size();
    auto mul_ = [&](Element a, Element b) { return h.apply_binary(0, a, b); };
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            if (h.add(a, b) != h.add(b, a)) law_violation(name, "additive commutativity", {a, b});
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            for (Element c = 0; c < n; ++c) {
                if (mul_(mul_(a, b), c) != mul_(a, mul_(b, c))) law_violation(name, "associativity", {a, b, c});
                if (mul_(a, h.add(b, c)) != h.add(mul_(a, b), mul_(a, c)))
                    law_violation(name, "left distributivity", {a, b, c});
                if (mul_(h.add(a, b), c) != h.add(mul_(a, c), mul_(b, c)))
                    law_violation(name, "right distributivity", {a, b, c});
            }
    return h;
}

FiniteOmegaGroup make_lie_ring(std::string name, std::size_t size, std::vector<Element> add,
                               std::vector<Element> bracket, unsigned p) {
    if (p < 2) throw Error(ErrorKind::LawViolation, name + ": characteristic must be a prime >= 2");
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) throw Error(ErrorKind::LawViolation, name + ": characteristic " + std::to_string(p) + " is not prime");

    // Scalars act by repeated addition, so the tables are derived from add.
    const FiniteOmegaGroup group = make_group(name, size, add);
    const std::size_t n = group.size();
    RawAlgebra raw{name, size, std::move(add), {}};
    raw.operations.push_back(OperationTable{"bracket", 2, std::move(bracket)});
    for (unsigned c = 0; c < p; ++c) {
        OperationTable scalar{"s" + std::to_string(c), 1, std::vector<Element>(n, 0)};
        for (Element x = 0; x < n; ++x) {
            Element acc = 0;
            for (unsigned k = 0; k < c; ++k) acc = group.add(acc, x);
            scalar.table[x] = acc;
        }
        raw.operations.push_back(std::move(scalar));
    }
    FiniteOmegaGroup h = validate_algebra(std::move(raw));
    auto br = [&](Element a, Element b) { return h.apply_binary(0, a, b); };
    auto scale = [&](unsigned c, Element a) { return h.apply_unary(1 + c, a); };

    for (Element a = 0; a < n; ++a) {
        Element acc = 0;
        for (unsigned k = 0; k < p; ++k) acc = h.add(acc, a);
        if (acc != 0) law_violation(name, "characteristic p", {a});
        if (br(a, a) != 0) law_violation(name, "alternation [x,x]=0", {a});
        for (Element b = 0; b < n; ++b) {
            if (h.add(a, b) != h.add(b, a)) law_violation(name, "additive commutativity", {a, b});
            for (unsigned c = 0; c < p; ++c) {
                if (br(scale(c, a), b) != scale(c, br(a, b))) law_violation(name, "scalar compatibility", {c, a, b});
                if (scale(c, h.add(a, b)) != h.add(scale(c, a), scale(c, b)))
                    law_violation(name, "scalar additivity", {c, a, b});
            }
            for (Element c = 0; c < n; ++c) {
                if (br(a, h.add(b, c)) != h.add(br(a, b), br(a, c))) law_violation(name, "bilinearity (left)", {a, b, c});
                if (br(h.add(a, b), c) != h.add(br(a, c), br(b, c))) law_violation(name, "bilinearity (right)", {a, b, c});
                const Element jacobi = h.add(h.add(br(a, br(b, c)), br(b, br(c, a))), br(c, br(a, b)));
                if (jacobi != 0) law_violation(name, "Jacobi identity", {a, b, c});
            }
        }
    }
    return h;
}

FiniteOmegaGroup embed_classical(ClassicalKind kind, ClassicalTables tables) {
    switch (kind) {
        case ClassicalKind::Group:
            if (!tables.product.empty())
                throw Error(ErrorKind::LawViolation, tables.name + ": a group takes no product table");
            return make_group(std::move(tables.name), tables.size, std::move(tables.add));
        case ClassicalKind::Ring:
            return make_ring(std::move(tables.name), tables.size, std::move(tables.add), std::move(tables.product));
        case ClassicalKind::LieRing:
            return make_lie_ring(std::move(tables.name), tables.size, std::move(tables.add), std::move(tables.product),
                                 tables.characteristic);
    }
    throw Error(ErrorKind::LawViolation, "unknown classical kind");
}

bool is_ring(const FiniteOmegaGroup& algebra) {
    if (algebra.operation_count() != 1 || algebra.operation(0).arity != 2) return false;
    try {
        make_ring(algebra.name(), algebra.size(), algebra.add_table(), algebra.operation(0).table);
    } catch (const Error&) {
        return false;
    }
    return true;
}

}  // namespace omega
