#pragma once

// Sub-Ω-group generation inside a power H^width, with rows keyed by a prefix.

#include <cstdint>
#include <algorithm>
#include <cstring>
#include <string>
#include <unordered_set>
#include <vector>

#include "omega/algebra.hpp"

namespace omega::detail {

/// H's tables narrowed to bytes for row-wise application.
struct ByteTables {
    explicit ByteTables(const FiniteOmegaGroup& algebra);

    std::size_t n;
    std::vector<std::uint8_t> add;
    std::vector<std::uint8_t> neg;
    std::vector<unsigned> arity;
    std::vector<std::vector<std::uint8_t>> ops;
    /// Abelian addition and every ω additive in each argument. The generated
    /// Ω-subgroup is then the additive span of the ω-monomials in the seeds.
    bool multilinear = false;
};

/// Generates the sub-Ω-group of H^width spanned by the seed rows.
///
/// Rows are identified by their first `key_width` coordinates. A new row whose
/// key already exists is not stored; instead on_collision(existing_id, row) is
/// called. on_insert(id) is called for every stored row. Either callback may
/// return false to stop generation early. With key_width == width this is the
/// plain subalgebra; with a shorter key it generates the projection onto the
/// key coordinates while carrying the remaining coordinates along.
class TupleClosure {
public:
    TupleClosure(const ByteTables& tables, std::size_t width, std::size_t key_width, std::size_t limit);

    std::size_t width() const noexcept { return width_; }
    std::size_t size() const noexcept { return count_; }
    const std::uint8_t* row(std::size_t id) const noexcept { return rows_.data() + id * width_; }

    enum class Status { Complete, Stopped };

    /// Seeds with the zero row and `seeds`, then runs to a fixed point.
    /// Throws TooLarge once more than `limit` rows are stored.
    template <typename OnInsert, typename OnCollision>
    Status run(const std::vector<std::vector<std::uint8_t>>& seeds, OnInsert&& on_insert, OnCollision&& on_collision);

private:
    std::uint64_t hash(const std::uint8_t* r) const noexcept;
    // Returns the id of the row with r's key, or npos.
    std::size_t find(const std::uint8_t* r) const noexcept;
    std::size_t store(const std::uint8_t* r);
    void grow_table();

    template <typename OnInsert, typename OnCollision>
    bool offer(const std::uint8_t* r, OnInsert& on_insert, OnCollision& on_collision);

    template <typename OnInsert, typename OnCollision>
    Status run_linear(const std::vector<std::vector<std::uint8_t>>& seeds, OnInsert& on_insert, OnCollision& on_collision);

    // Calls f(op, args) for every ω-tuple over rows [0, count) that uses row
    // `next` and otherwise only rows before or equal to it; stops when f does.
    template <typename RowAt, typename F>
    bool for_each_tuple_with(std::size_t next, RowAt&& row_at, F&& f) const;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    const ByteTables& tables_;
    std::size_t width_;
    std::size_t key_width_;
    std::size_t limit_;
    std::size_t count_ = 0;
    std::vector<std::uint8_t> rows_;
    std::vector<std::uint32_t> slots_;  // id + 1, 0 = empty
};

template <typename OnInsert, typename OnCollision>
bool TupleClosure::offer(const std::uint8_t* r, OnInsert& on_insert, OnCollision& on_collision) {
    const std::size_t existing = find(r);
    if (existing != npos) return on_collision(existing, r);
    return on_insert(store(r));
}

template <typename OnInsert, typename OnCollision>
TupleClosure::Status TupleClosure::run(const std::vector<std::vector<std::uint8_t>>& seeds, OnInsert&& on_insert,
                                       OnCollision&& on_collision) {
    if (tables_.multilinear) return run_linear(seeds, on_insert, on_collision);
    std::vector<std::uint8_t> scratch(width_, 0);
    if (!offer(scratch.data(), on_insert, on_collision)) return Status::Stopped;
    for (const auto& s : seeds)
        if (!offer(s.data(), on_insert, on_collision)) return Status::Stopped;

    std::vector<std::uint8_t> e(width_), m(width_);
    for (std::size_t next = 0; next < count_; ++next) {
        std::memcpy(e.data(), row(next), width_);
        for (std::size_t c = 0; c < width_; ++c) scratch[c] = tables_.neg[e[c]];
        if (!offer(scratch.data(), on_insert, on_collision)) return Status::Stopped;
        for (std::size_t j = 0; j <= next; ++j) {
            std::memcpy(m.data(), row(j), width_);
            for (std::size_t c = 0; c < width_; ++c) scratch[c] = tables_.add[e[c] * tables_.n + m[c]];
            if (!offer(scratch.data(), on_insert, on_collision)) return Status::Stopped;
            if (j == next) continue;
            for (std::size_t c = 0; c < width_; ++c) scratch[c] = tables_.add[m[c] * tables_.n + e[c]];
            if (!offer(scratch.data(), on_insert, on_collision)) return Status::Stopped;
        }
        const bool go = for_each_tuple_with(
            next, [&](std::size_t id) { return row(id); },
            [&](const std::uint8_t* r) { return offer(r, on_insert, on_collision); });
        if (!go) return Status::Stopped;
    }
    return Status::Complete;
}

template <typename RowAt, typename F>
bool TupleClosure::for_each_tuple_with(std::size_t next, RowAt&& row_at, F&& f) const {
    std::vector<std::uint8_t> out(width_);
    std::vector<std::size_t> idx(3), radix(3);
    std::vector<std::vector<std::uint8_t>> operand(3, std::vector<std::uint8_t>(width_));
    for (std::size_t op = 0; op < tables_.ops.size(); ++op) {
        const unsigned arity = tables_.arity[op];
        const auto& table = tables_.ops[op];
        // p is the first position holding `next`.
        for (unsigned p = 0; p < arity; ++p) {
            std::size_t total = 1;
            for (unsigned i = 0; i < arity; ++i) {
                radix[i] = i < p ? next : (i == p ? 1 : next + 1);
                total *= radix[i];
            }
            for (std::size_t flat = 0; flat < total; ++flat) {
                std::size_t rest = flat;
                for (unsigned i = arity; i-- > 0;) {
                    idx[i] = i == p ? next : rest % radix[i];
                    rest /= radix[i];
                }
                // Copy operands: f may append rows and reallocate.
                for (unsigned i = 0; i < arity; ++i) std::memcpy(operand[i].data(), row_at(idx[i]), width_);
                for (std::size_t c = 0; c < width_; ++c) {
                    std::size_t flat_arg = 0;
                    for (unsigned i = 0; i < arity; ++i) flat_arg = flat_arg * tables_.n + operand[i][c];
                    out[c] = table[flat_arg];
                }
                if (!f(out.data())) return false;
            }
        }
    }
    return true;
}

template <typename OnInsert, typename OnCollision>
TupleClosure::Status TupleClosure::run_linear(const std::vector<std::vector<std::uint8_t>>& seeds, OnInsert& on_insert,
                                              OnCollision& on_collision) {
    // Monomials: seeds closed under ω alone, deduplicated on the full row.
    std::vector<std::uint8_t> mono;
    std::unordered_set<std::string> seen;
    std::size_t mono_count = 0;
    auto add_mono = [&](const std::uint8_t* r) {
        if (std::all_of(r, r + width_, [](std::uint8_t v) { return v == 0; })) return true;
        if (!seen.emplace(reinterpret_cast<const char*>(r), width_).second) return true;
        if (mono_count >= limit_) {
            throw Error(ErrorKind::TooLarge, "generated subalgebra exceeds " + std::to_string(limit_) + " elements");
        }
        mono.insert(mono.end(), r, r + width_);
        ++mono_count;
        return true;
    };
    for (const auto& s : seeds) add_mono(s.data());
    for (std::size_t next = 0; next < mono_count; ++next)
        for_each_tuple_with(next, [&](std::size_t id) { return mono.data() + id * width_; }, add_mono);

    // Additive span: every stored row plus every monomial.
    std::vector<std::uint8_t> scratch(width_, 0), e(width_);
    if (!offer(scratch.data(), on_insert, on_collision)) return Status::Stopped;
    for (std::size_t next = 0; next < count_; ++next) {
        std::memcpy(e.data(), row(next), width_);
        for (std::size_t m = 0; m < mono_count; ++m) {
            const std::uint8_t* g = mono.data() + m * width_;
            for (std::size_t c = 0; c < width_; ++c) scratch[c] = tables_.add[e[c] * tables_.n + g[c]];
            if (!offer(scratch.data(), on_insert, on_collision)) return Status::Stopped;
        }
    }
    return Status::Complete;
}

}  // namespace omega::detail
