#include "omega/subset_mask.hpp"

#include <bit>

namespace omega {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotAGroup: return "NotAGroup";
        case ErrorKind::OmegaZeroViolation: return "OmegaZeroViolation";
        case ErrorKind::MalformedTable: return "MalformedTable";
        case ErrorKind::ArityMismatch: return "ArityMismatch";
        case ErrorKind::UnknownOperation: return "UnknownOperation";
        case ErrorKind::SignatureMismatch: return "SignatureMismatch";
        case ErrorKind::LawViolation: return "LawViolation";
        case ErrorKind::UnboundVariable: return "UnboundVariable";
        case ErrorKind::NotASubgroup: return "NotASubgroup";
        case ErrorKind::NotContained: return "NotContained";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::NotARing: return "NotARing";
        case ErrorKind::OracleDisagreement: return "OracleDisagreement";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::GuardExceeded: return "GuardExceeded";
    }
    return "Unknown";
}

SubsetMask::SubsetMask(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

SubsetMask::SubsetMask(std::size_t size, std::initializer_list<Element> members) : SubsetMask(size) {
    for (Element e : members) set(e);
}

SubsetMask SubsetMask::full(std::size_t size) {
    SubsetMask m(size);
    for (std::size_t i = 0; i < size; ++i) m.set(i);
    return m;
}

SubsetMask SubsetMask::zero(std::size_t size) {
    SubsetMask m(size);
    if (size > 0) m.set(0);
    return m;
}

SubsetMask SubsetMask::from_bits(std::size_t size, std::uint64_t bits) {
    SubsetMask m(size);
    if (!m.words_.empty()) m.words_[0] = size >= 64 ? bits : bits & ((std::uint64_t{1} << size) - 1);
    return m;
}

std::size_t SubsetMask::count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool SubsetMask::none() const noexcept {
    for (auto w : words_)
        if (w != 0) return false;
    return true;
}

bool SubsetMask::is_trivial() const noexcept { return first_nonzero() == size_; }

bool SubsetMask::is_subset_of(const SubsetMask& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
}

std::size_t SubsetMask::first_nonzero() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t bits = words_[w];
        if (w == 0) bits &= ~std::uint64_t{1};
        if (bits != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
    }
    return size_;
}

std::vector<Element> SubsetMask::elements() const {
    std::vector<Element> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t bits = words_[w];
        while (bits != 0) {
            out.push_back(static_cast<Element>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
            bits &= bits - 1;
        }
    }
    return out;
}

SubsetMask& SubsetMask::operator|=(const SubsetMask& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

SubsetMask& SubsetMask::operator&=(const SubsetMask& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

std::strong_ordering operator<=>(const SubsetMask& a, const SubsetMask& b) noexcept {
    if (a.size_ != b.size_) return a.size_ <=> b.size_;
    for (std::size_t i = a.words_.size(); i-- > 0;)
        if (a.words_[i] != b.words_[i]) return a.words_[i] <=> b.words_[i];
    return std::strong_ordering::equal;
}

std::string SubsetMask::to_string() const {
    std::string out = "{";
    bool first = true;
    for (Element e : elements()) {
        if (!first) out += ',';
        out += std::to_string(e);
        first = false;
    }
    return out + "}";
}

}  // namespace omega
