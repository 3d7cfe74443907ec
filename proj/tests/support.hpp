#pragma once

// Brute-force oracles shared by the test binaries. They follow the
// definitions literally and share no code with the library's closures.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "omega/algebra.hpp"
#include "omega/catalog.hpp"
#include "omega/subset_mask.hpp"
#include "omega/zariski.hpp"

namespace oracle {

using omega::Element;
using omega::FiniteOmegaGroup;
using omega::SubsetMask;

inline FiniteOmegaGroup catalog_algebra(const std::string& name) {
    const auto entry = omega::find_catalog_entry(name);
    if (!entry) throw std::runtime_error("no catalog entry " + name);
    return entry->construct();
}

// Every tuple of `arity` elements drawn from `items`.
template <typename F>
void tuples(const std::vector<Element>& items, unsigned arity, F&& f) {
    std::vector<std::size_t> idx(arity, 0);
    std::vector<Element> t(arity);
    if (items.empty()) return;
    for (;;) {
        for (unsigned i = 0; i < arity; ++i) t[i] = items[idx[i]];
        f(t);
        unsigned i = arity;
        while (i > 0 && ++idx[i - 1] == items.size()) idx[--i] = 0;
        if (i == 0) return;
    }
}

// Least subset containing S ∪ {0} closed under +, - and every ω; naive rounds.
inline SubsetMask subgroup_closure(const FiniteOmegaGroup& h, SubsetMask s) {
    s.set(0);
    for (bool changed = true; changed;) {
        changed = false;
        const auto items = s.elements();
        auto put = [&](Element e) {
            if (!s.test(e)) {
                s.set(e);
                changed = true;
            }
        };
        for (Element a : items) {
            put(h.neg(a));
            for (Element b : items) put(h.add(a, b));
        }
        for (std::size_t op = 0; op < h.operation_count(); ++op)
            tuples(items, h.operation(op).arity, [&](const std::vector<Element>& t) { put(h.apply(op, t)); });
    }
    return s;
}

inline Element omega_comm(const FiniteOmegaGroup& h, std::size_t op, const std::vector<Element>& a,
                          const std::vector<Element>& b) {
    std::vector<Element> sum(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) sum[i] = h.add(a[i], b[i]);
    return h.add(h.add(h.neg(h.apply(op, a)), h.neg(h.apply(op, b))), h.apply(op, sum));
}

// The three ideal conditions relative to P, checked element by element.
inline bool is_ideal(const FiniteOmegaGroup& h, const SubsetMask& p, const SubsetMask& u) {
    if (!u.test(0) || !u.is_subset_of(p)) return false;
    const auto us = u.elements(), ps = p.elements();
    for (Element a : us) {
        if (!u.test(h.neg(a))) return false;
        for (Element b : us)
            if (!u.test(h.add(a, b))) return false;
        for (Element q : ps)
            if (!u.test(h.add(h.add(h.neg(q), a), q))) return false;
    }
    for (std::size_t op = 0; op < h.operation_count(); ++op) {
        const unsigned k = h.operation(op).arity;
        bool ok = true;
        tuples(us, k, [&](const std::vector<Element>& t) { ok = ok && u.test(h.apply(op, t)); });
        tuples(us, k, [&](const std::vector<Element>& a) {
            tuples(ps, k, [&](const std::vector<Element>& b) { ok = ok && u.test(omega_comm(h, op, a, b)); });
        });
        if (!ok) return false;
    }
    return true;
}

// Intersection of every ideal of P containing S (2^|P| subsets; |P| <= 12).
inline SubsetMask ideal_closure(const FiniteOmegaGroup& h, const SubsetMask& p, const SubsetMask& s) {
    const auto ps = p.elements();
    if (ps.size() > 12) throw std::runtime_error("oracle ideal_closure limited to |P| <= 12");
    SubsetMask best = p;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << ps.size()); ++bits) {
        SubsetMask u(h.size());
        for (std::size_t i = 0; i < ps.size(); ++i)
            if ((bits >> i) & 1U) u.set(ps[i]);
        if (s.is_subset_of(u) && oracle::is_ideal(h, p, u)) best &= u;
    }
    return best;
}

inline SubsetMask commutator_group(const FiniteOmegaGroup& h, const SubsetMask& a, const SubsetMask& b) {
    const SubsetMask p = subgroup_closure(h, a | b);
    SubsetMask gens(h.size());
    gens.set(0);
    for (Element x : a.elements())
        for (Element y : b.elements()) gens.set(h.add(h.add(h.neg(x), h.neg(y)), h.add(x, y)));
    for (std::size_t op = 0; op < h.operation_count(); ++op) {
        const unsigned k = h.operation(op).arity;
        tuples(a.elements(), k, [&](const std::vector<Element>& x) {
            tuples(b.elements(), k, [&](const std::vector<Element>& y) { gens.set(omega_comm(h, op, x, y)); });
        });
    }
    return oracle::ideal_closure(h, p, gens);
}

// Exact Zariski closure from the full set of term functions on H^n, grown
// as the Ω-subgroup of H^(H^n) generated by the coordinate functions.
inline omega::PointSet zariski_closure(const FiniteOmegaGroup& h, const omega::PointSet& a) {
    const std::size_t width = a.space_size();
    using Fn = std::vector<Element>;
    std::set<Fn> seen;
    std::vector<Fn> all;
    auto offer = [&](Fn f) {
        if (seen.insert(f).second) all.push_back(std::move(f));
    };
    offer(Fn(width, 0));
    for (std::size_t i = 0; i < a.n_vars(); ++i) {
        Fn f(width);
        for (std::size_t p = 0; p < width; ++p) f[p] = a.point_at(p)[i];
        offer(f);
    }
    for (std::size_t next = 0; next < all.size(); ++next) {
        if (all.size() > 200000) throw std::runtime_error("oracle zariski_closure: clone too large");
        Fn f(width);
        for (std::size_t p = 0; p < width; ++p) f[p] = h.neg(all[next][p]);
        offer(f);
        for (std::size_t j = 0; j <= next; ++j) {
            for (std::size_t p = 0; p < width; ++p) f[p] = h.add(all[next][p], all[j][p]);
            offer(f);
            for (std::size_t p = 0; p < width; ++p) f[p] = h.add(all[j][p], all[next][p]);
            offer(f);
        }
        for (std::size_t op = 0; op < h.operation_count(); ++op) {
            const unsigned k = h.operation(op).arity;
            std::vector<Element> ids;
            for (std::size_t j = 0; j <= next; ++j) ids.push_back(static_cast<Element>(j));
            tuples(ids, k, [&](const std::vector<Element>& t) {
                if (std::find(t.begin(), t.end(), static_cast<Element>(next)) == t.end()) return;
                std::vector<Element> args(k);
                for (std::size_t p = 0; p < width; ++p) {
                    for (unsigned i = 0; i < k; ++i) args[i] = all[t[i]][p];
                    f[p] = h.apply(op, args);
                }
                offer(f);
            });
        }
    }
    omega::PointSet result(h.size(), a.n_vars());
    for (std::size_t p = 0; p < width; ++p) {
        bool keep = true;
        for (const Fn& g : all) {
            bool vanishes = true;
            for (Element q : a.mask().elements()) vanishes = vanishes && g[q] == 0;
            if (vanishes && g[p] != 0) {
                keep = false;
                break;
            }
        }
        if (keep) result.insert_index(p);
    }
    return result;
}

inline SubsetMask random_subset(std::mt19937_64& rng, std::size_t n) {
    SubsetMask s(n);
    for (std::size_t i = 0; i < n; ++i)
        if (rng() & 1U) s.set(i);
    return s;
}

inline omega::PointSet random_points(std::mt19937_64& rng, std::size_t n, std::size_t vars) {
    omega::PointSet s(n, vars);
    for (std::size_t i = 0; i < s.space_size(); ++i)
        if (rng() % 3 == 0) s.insert_index(i);
    return s;
}

}  // namespace oracle
