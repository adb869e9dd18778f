#ifndef COXSPLIT_SUBSET_HPP
#define COXSPLIT_SUBSET_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace coxsplit {

/// A subset of the generator set S, stored as a bit mask over generator
/// indices. Canonically ordered: by size first, then by the sorted index
/// sequence lexicographically.
class Subset {
public:
    constexpr Subset() = default;
    constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}

    static constexpr Subset full(int rank) {
        return Subset(rank == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rank) - 1);
    }
    static constexpr Subset single(int i) { return Subset(std::uint64_t{1} << i); }

    static Subset of(std::initializer_list<int> indices) {
        std::uint64_t b = 0;
        for (int i : indices) b |= std::uint64_t{1} << i;
        return Subset(b);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int i) const { return (bits_ >> i) & 1; }
    constexpr bool subset_of(Subset o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool proper_subset_of(Subset o) const { return subset_of(o) && bits_ != o.bits_; }
    constexpr bool intersects(Subset o) const { return (bits_ & o.bits_) != 0; }

    constexpr Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
    constexpr Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
    constexpr Subset operator-(Subset o) const { return Subset(bits_ & ~o.bits_); }
    constexpr Subset with(int i) const { return Subset(bits_ | (std::uint64_t{1} << i)); }
    constexpr Subset without(int i) const { return Subset(bits_ & ~(std::uint64_t{1} << i)); }

    constexpr bool operator==(const Subset&) const = default;

    /// Least generator index, or -1 if empty.
    constexpr int least() const { return bits_ ? std::countr_zero(bits_) : -1; }

    std::vector<int> indices() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

    /// Canonical order: smaller sets first; among equal sizes, the set owning
    /// the smallest non-shared index comes first (== lexicographic order on
    /// sorted index sequences).
    friend bool canonical_less(Subset a, Subset b) {
        if (a.size() != b.size()) return a.size() < b.size();
        std::uint64_t diff = a.bits_ ^ b.bits_;
        if (!diff) return false;
        return a.contains(std::countr_zero(diff));
    }

private:
    std::uint64_t bits_ = 0;
};

struct SubsetCanonicalLess {
    bool operator()(Subset a, Subset b) const { return canonical_less(a, b); }
};

}  // namespace coxsplit

#endif
