#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace deltakit {

inline constexpr int kMaxElements = 64;

/// Subset of a ground set, stored as a 64-bit word. Bit i is element i.
struct ElemSet {
    std::uint64_t bits = 0;

    constexpr ElemSet() = default;
    constexpr explicit ElemSet(std::uint64_t b) : bits(b) {}

    static constexpr ElemSet single(int i) { return ElemSet{std::uint64_t{1} << i}; }
    /// The set {0, ..., n-1}.
    static constexpr ElemSet full(int n) {
        return ElemSet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
    }

    constexpr int size() const { return std::popcount(bits); }
    constexpr bool empty() const { return bits == 0; }
    constexpr bool contains(int i) const { return (bits >> i) & 1u; }
    constexpr bool subset_of(ElemSet o) const { return (bits & ~o.bits) == 0; }
    constexpr int lowest() const { return std::countr_zero(bits); }

    constexpr ElemSet with(int i) const { return ElemSet{bits | (std::uint64_t{1} << i)}; }
    constexpr ElemSet without(int i) const { return ElemSet{bits & ~(std::uint64_t{1} << i)}; }

    friend constexpr ElemSet operator|(ElemSet a, ElemSet b) { return ElemSet{a.bits | b.bits}; }
    friend constexpr ElemSet operator&(ElemSet a, ElemSet b) { return ElemSet{a.bits & b.bits}; }
    friend constexpr ElemSet operator^(ElemSet a, ElemSet b) { return ElemSet{a.bits ^ b.bits}; }
    friend constexpr ElemSet operator-(ElemSet a, ElemSet b) { return ElemSet{a.bits & ~b.bits}; }
    friend constexpr bool operator==(ElemSet a, ElemSet b) = default;

    template <typename F>
    void for_each(F&& f) const {
        for (std::uint64_t b = bits; b; b &= b - 1) f(std::countr_zero(b));
    }
};

/// Canonical order: cardinality first, then numeric value of the bit word.
struct CanonicalLess {
    constexpr bool operator()(ElemSet a, ElemSet b) const {
        const int ca = a.size(), cb = b.size();
        return ca != cb ? ca < cb : a.bits < b.bits;
    }
};

/// Drop bit `i` and shift higher bits down by one.
constexpr ElemSet remove_position(ElemSet s, int i) {
    const std::uint64_t low = s.bits & ((std::uint64_t{1} << i) - 1);
    const std::uint64_t high = i >= 63 ? 0 : (s.bits >> (i + 1)) << i;
    return ElemSet{low | high};
}

/// Enumerate every subset of `mask` (including the empty set and `mask` itself).
template <typename F>
void for_each_subset(ElemSet mask, F&& f) {
    std::uint64_t sub = 0;
    while (true) {
        f(ElemSet{sub});
        if (sub == mask.bits) break;
        sub = (sub - mask.bits) & mask.bits;
    }
}

/// Ordered list of distinct element labels. Cheap to copy.
class GroundSet {
public:
    GroundSet();
    explicit GroundSet(std::vector<std::string> labels);

    /// Labels "0", "1", ... or custom prefix-free names for quick construction.
    static GroundSet numbered(int n, int first = 1);
    static GroundSet from_chars(std::string_view chars);

    int size() const { return static_cast<int>(data_->labels.size()); }
    const std::string& label(int i) const { return data_->labels[static_cast<std::size_t>(i)]; }
    const std::vector<std::string>& labels() const { return data_->labels; }

    /// Position of a label, or -1.
    int find(std::string_view label) const;
    /// Position of a label; throws DomainError if absent.
    int index(std::string_view label) const;

    ElemSet all() const { return ElemSet::full(size()); }
    ElemSet set_of(std::span<const std::string> labels) const;
    ElemSet set_of(std::initializer_list<std::string_view> labels) const;

    /// Ground set with position i removed.
    GroundSet without(int i) const;
    /// Ground set restricted to `keep`, preserving order.
    GroundSet restricted(ElemSet keep) const;

    /// "{a,b,c}" with elements in ground order.
    std::string format(ElemSet s) const;

    friend bool operator==(const GroundSet& a, const GroundSet& b) {
        return a.data_ == b.data_ || a.data_->labels == b.data_->labels;
    }

private:
    struct Data {
        std::vector<std::string> labels;
        std::unordered_map<std::string, int> index;
    };
    std::shared_ptr<const Data> data_;
};

/// Shrink a subset of `ground` to the positions kept in `keep` (compacting bit positions).
ElemSet compress(ElemSet s, ElemSet keep);

}  // namespace deltakit
