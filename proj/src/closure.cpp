#include "omega/closure.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace omega {

namespace {

std::size_t power(std::size_t base, unsigned exponent) {
    std::size_t r = 1;
    for (unsigned i = 0; i < exponent; ++i) r *= base;
    return r;
}

// Calls fn(tuple) for every tuple over items[0..last] that uses items[last]
// at least once. Position p is the first occurrence of items[last]: earlier
// coordinates range over items[0..last), later ones over items[0..last].
template <typename Fn>
void for_each_tuple_using_last(const std::vector<Element>& items, std::size_t last, unsigned arity, Fn&& fn) {
    std::array<Element, kMaxArity> t{};
    for (unsigned p = 0; p < arity; ++p) {
        std::array<std::size_t, kMaxArity> radix{};
        std::size_t total = 1;
        for (unsigned i = 0; i < arity; ++i) {
            radix[i] = i < p ? last : (i == p ? 1 : last + 1);
            total *= radix[i];
        }
        for (std::size_t flat = 0; flat < total; ++flat) {
            std::size_t rest = flat;
            for (unsigned i = arity; i-- > 0;) {
                t[i] = i == p ? items[last] : items[rest % radix[i]];
                rest /= radix[i];
            }
            fn(std::span<const Element>(t.data(), arity));
        }
    }
}

// Calls fn(tuple) for every tuple in items^arity.
template <typename Fn>
void for_each_tuple(const std::vector<Element>& items, unsigned arity, Fn&& fn) {
    std::array<Element, kMaxArity> t{};
    const std::size_t total = power(items.size(), arity);
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::size_t rest = flat;
        for (unsigned i = arity; i-- > 0;) {
            t[i] = items[rest % items.size()];
            rest /= items.size();
        }
        fn(std::span<const Element>(t.data(), arity));
    }
}

// Growing member list with a bitmask for O(1) membership.
struct Worklist {
    explicit Worklist(std::size_t n) : in(n) {}
    void push(Element e) {
        if (!in.test(e)) {
            in.set(e);
            order.push_back(e);
        }
    }
    SubsetMask in;
    std::vector<Element> order;
};

}  // namespace

SubsetMask omega_subgroup_closure(const FiniteOmegaGroup& algebra, const SubsetMask& generators) {
    Worklist w(algebra.size());
    w.push(0);
    for (Element g : generators.elements()) w.push(g);
    for (std::size_t next = 0; next < w.order.size(); ++next) {
        const Element e = w.order[next];
        w.push(algebra.neg(e));
        for (std::size_t j = 0; j <= next; ++j) {
            const Element m = w.order[j];
            w.push(algebra.add(e, m));
            w.push(algebra.add(m, e));
        }
        for (std::size_t op = 0; op < algebra.operation_count(); ++op) {
            // Snapshot: for_each_tuple_using_last reads w.order while we push.
            const std::vector<Element> prefix(w.order.begin(), w.order.begin() + static_cast<std::ptrdiff_t>(next) + 1);
            for_each_tuple_using_last(prefix, next, algebra.operation(op).arity,
                                      [&](std::span<const Element> t) { w.push(algebra.apply(op, t)); });
        }
    }
    return w.in;
}

SubsetMask omega_subgroup_closure(const FiniteOmegaGroup& algebra, std::initializer_list<Element> generators) {
    SubsetMask s(algebra.size());
    for (Element g : generators) s.set(g);
    return omega_subgroup_closure(algebra, s);
}

bool is_omega_subgroup(const FiniteOmegaGroup& algebra, const SubsetMask& subset) {
    return subset.size() == algebra.size() && subset.test(0) && omega_subgroup_closure(algebra, subset) == subset;
}

bool is_ideal(const FiniteOmegaGroup& algebra, const SubsetMask& ambient, const SubsetMask& subset) {
    if (!subset.test(0) || !subset.is_subset_of(ambient)) return false;
    const auto u = subset.elements();
    const auto p = ambient.elements();
    for (Element a : u) {
        if (!subset.test(algebra.neg(a))) return false;
        for (Element b : u)
            if (!subset.test(algebra.add(a, b))) return false;
        for (Element g : p)
            if (!subset.test(algebra.conjugate(a, g))) return false;
    }
    for (std::size_t op = 0; op < algebra.operation_count(); ++op) {
        const unsigned arity = algebra.operation(op).arity;
        bool ok = true;
        for_each_tuple(u, arity, [&](std::span<const Element> t) {
            if (ok && !subset.test(algebra.apply(op, t))) ok = false;
        });
        if (!ok) return false;
        for_each_tuple(u, arity, [&](std::span<const Element> a) {
            if (!ok) return;
            const std::array<Element, kMaxArity> abar{a.size() > 0 ? a[0] : 0, a.size() > 1 ? a[1] : 0,
                                                      a.size() > 2 ? a[2] : 0};
            for_each_tuple(p, arity, [&](std::span<const Element> b) {
                if (ok && !subset.test(algebra.omega_commutator(op, std::span<const Element>(abar.data(), arity), b)))
                    ok = false;
            });
        });
        if (!ok) return false;
    }
    return true;
}

SubsetMask ideal_closure(const FiniteOmegaGroup& algebra, const SubsetMask& ambient, const SubsetMask& generators) {
    if (!is_omega_subgroup(algebra, ambient))
        throw Error(ErrorKind::NotASubgroup, ambient.to_string() + " is not an Ω-subgroup of " + algebra.name());
    if (!generators.is_subset_of(ambient))
        throw Error(ErrorKind::NotContained, generators.to_string() + " is not contained in " + ambient.to_string());

    const auto p = ambient.elements();
    Worklist w(algebra.size());
    w.push(0);
    for (Element g : generators.elements()) w.push(g);
    for (std::size_t next = 0; next < w.order.size(); ++next) {
        const Element e = w.order[next];
        w.push(algebra.neg(e));
        for (std::size_t j = 0; j <= next; ++j) {
            const Element m = w.order[j];
            w.push(algebra.add(e, m));
            w.push(algebra.add(m, e));
        }
        for (Element g : p) w.push(algebra.conjugate(e, g));
        const std::vector<Element> prefix(w.order.begin(), w.order.begin() + static_cast<std::ptrdiff_t>(next) + 1);
        for (std::size_t op = 0; op < algebra.operation_count(); ++op) {
            const unsigned arity = algebra.operation(op).arity;
            for_each_tuple_using_last(prefix, next, arity, [&](std::span<const Element> a) {
                w.push(algebra.apply(op, a));
                const std::array<Element, kMaxArity> abar{a[0], arity > 1 ? a[1] : 0, arity > 2 ? a[2] : 0};
                for_each_tuple(p, arity, [&](std::span<const Element> b) {
                    w.push(algebra.omega_commutator(op, std::span<const Element>(abar.data(), arity), b));
                });
            });
        }
    }
    return w.in;
}

SubsetMask ideal_closure(const FiniteOmegaGroup& algebra, const SubsetMask& generators) {
    return ideal_closure(algebra, SubsetMask::full(algebra.size()), generators);
}

std::vector<Element> commutator_generators(const FiniteOmegaGroup& algebra, const SubsetMask& a,
                                           const SubsetMask& b) {
    SubsetMask gens(algebra.size());
    const auto as = a.elements();
    const auto bs = b.elements();
    for (Element x : as)
        for (Element y : bs) gens.set(algebra.commutator(x, y));
    for (std::size_t op = 0; op < algebra.operation_count(); ++op) {
        const unsigned arity = algebra.operation(op).arity;
        for_each_tuple(as, arity, [&](std::span<const Element> abar) {
            const std::array<Element, kMaxArity> copy{abar[0], arity > 1 ? abar[1] : 0, arity > 2 ? abar[2] : 0};
            for_each_tuple(bs, arity, [&](std::span<const Element> bbar) {
                gens.set(algebra.omega_commutator(op, std::span<const Element>(copy.data(), arity), bbar));
            });
        });
    }
    return gens.elements();
}

SubsetMask commutator_group(const FiniteOmegaGroup& algebra, const SubsetMask& a, const SubsetMask& b) {
    if (!is_omega_subgroup(algebra, a))
        throw Error(ErrorKind::NotASubgroup, a.to_string() + " is not an Ω-subgroup of " + algebra.name());
    if (!is_omega_subgroup(algebra, b))
        throw Error(ErrorKind::NotASubgroup, b.to_string() + " is not an Ω-subgroup of " + algebra.name());
    const SubsetMask joined = omega_subgroup_closure(algebra, a | b);
    SubsetMask gens(algebra.size());
    for (Element g : commutator_generators(algebra, a, b)) gens.set(g);
    return ideal_closure(algebra, joined, gens);
}

std::vector<SubsetMask> enumerate_ideals(const FiniteOmegaGroup& algebra) {
    const std::size_t n = algebra.size();
    if (n > 16) throw Error(ErrorKind::TooLarge, algebra.name() + " has " + std::to_string(n) + " > 16 elements");
    const SubsetMask whole = SubsetMask::full(n);
    std::vector<SubsetMask> ideals;
    std::vector<Element> members;
    for (std::uint64_t rest = 0; rest < (std::uint64_t{1} << (n - 1)); ++rest) {
        const std::uint64_t bits = (rest << 1) | 1U;
        members.clear();
        for (Element e = 0; e < n; ++e)
            if ((bits >> e) & 1U) members.push_back(e);
        bool closed = true;
        for (std::size_t i = 0; i < members.size() && closed; ++i)
            for (std::size_t j = 0; j < members.size() && closed; ++j)
                closed = (bits >> algebra.add(members[i], members[j])) & 1U;
        if (!closed) continue;
        SubsetMask candidate = SubsetMask::from_bits(n, bits);
        if (is_ideal(algebra, whole, candidate)) ideals.push_back(std::move(candidate));
    }
    return ideals;
}

std::vector<SubsetMask> enumerate_omega_subgroups(const FiniteOmegaGroup& algebra, std::size_t max_size) {
    const std::size_t n = algebra.size();
    if (n > max_size)
        throw Error(ErrorKind::TooLarge, algebra.name() + " has " + std::to_string(n) + " > " +
                                             std::to_string(max_size) + " elements");
    // Every Ω-subgroup is ⟨S ∪ {a}⟩ for a smaller one S, starting from {0}.
    std::set<SubsetMask> seen{SubsetMask::zero(n)};
    std::vector<SubsetMask> frontier{SubsetMask::zero(n)};
    while (!frontier.empty()) {
        std::vector<SubsetMask> next;
        for (const SubsetMask& s : frontier) {
            for (Element a = 1; a < n; ++a) {
                if (s.test(a)) continue;
                SubsetMask grown = s;
                grown.set(a);
                grown = omega_subgroup_closure(algebra, grown);
                if (seen.insert(grown).second) next.push_back(std::move(grown));
            }
        }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

}  // namespace omega
