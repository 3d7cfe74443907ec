#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "omega/common.hpp"

namespace omega {

/// Fixed-size bitset over the carrier {0..n-1}. Used for Ω-subgroups,
/// ideals, commutator groups and (over H^n) point sets.
class SubsetMask {
public:
    SubsetMask() = default;
    explicit SubsetMask(std::size_t size);
    SubsetMask(std::size_t size, std::initializer_list<Element> members);

    static SubsetMask full(std::size_t size);
    static SubsetMask zero(std::size_t size);  // {0}

    std::size_t size() const noexcept { return size_; }
    bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    std::size_t count() const noexcept;
    bool none() const noexcept;
    /// Empty or exactly {0}.
    bool is_trivial() const noexcept;
    bool is_subset_of(const SubsetMask& other) const noexcept;
    /// Smallest nonzero member, or size() when there is none.
    std::size_t first_nonzero() const noexcept;

    std::vector<Element> elements() const;

    SubsetMask& operator|=(const SubsetMask& other) noexcept;
    SubsetMask& operator&=(const SubsetMask& other) noexcept;
    friend SubsetMask operator|(SubsetMask a, const SubsetMask& b) noexcept { return a |= b; }
    friend SubsetMask operator&(SubsetMask a, const SubsetMask& b) noexcept { return a &= b; }

    friend bool operator==(const SubsetMask&, const SubsetMask&) = default;
    /// Mask order: compares the masks as unsigned integers with bit i of weight 2^i.
    friend std::strong_ordering operator<=>(const SubsetMask& a, const SubsetMask& b) noexcept;

    /// "{0,2}"
    std::string to_string() const;

    /// Builds the mask whose bit i is bit i of `bits` (size <= 64).
    static SubsetMask from_bits(std::size_t size, std::uint64_t bits);

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace omega
