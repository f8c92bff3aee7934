#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace cprime {

/// Element index into a ring or module carrier.
using Index = std::int32_t;

/// A subset of {0..universe-1}, stored as a bitset.
///
/// The bitset is the canonical form: two sets with the same members compare
/// equal regardless of how they were built.  `members()` is always sorted.
/// Lists of sets are ordered by (cardinality, lexicographic members) via
/// `canonical_less`.
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(Index universe);
    ElementSet(Index universe, std::initializer_list<Index> members);
    ElementSet(Index universe, std::span<const Index> members);

    static ElementSet full(Index universe);

    [[nodiscard]] Index universe() const noexcept { return universe_; }
    [[nodiscard]] bool contains(Index x) const noexcept
    {
        return (words_[static_cast<std::size_t>(x) >> 6] >> (x & 63)) & 1U;
    }
    void insert(Index x) noexcept { words_[static_cast<std::size_t>(x) >> 6] |= std::uint64_t{1} << (x & 63); }
    void erase(Index x) noexcept { words_[static_cast<std::size_t>(x) >> 6] &= ~(std::uint64_t{1} << (x & 63)); }

    [[nodiscard]] Index count() const noexcept;
    [[nodiscard]] bool empty() const noexcept { return count() == 0; }
    [[nodiscard]] bool is_full() const noexcept { return count() == universe_; }
    [[nodiscard]] std::vector<Index> members() const;
    /// Least member, or -1 when empty.
    [[nodiscard]] Index first() const noexcept;

    [[nodiscard]] bool subset_of(const ElementSet& other) const noexcept;
    [[nodiscard]] ElementSet operator&(const ElementSet& other) const;
    [[nodiscard]] ElementSet operator|(const ElementSet& other) const;
    ElementSet& operator&=(const ElementSet& other) noexcept;
    ElementSet& operator|=(const ElementSet& other) noexcept;

    friend bool operator==(const ElementSet&, const ElementSet&) = default;

    /// "{0,2,4}"
    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] std::size_t hash() const noexcept;

private:
    Index universe_ = 0;
    std::vector<std::uint64_t> words_;
};

/// (cardinality, lexicographic members) ordering used for every list of sets.
bool canonical_less(const ElementSet& a, const ElementSet& b);

void sort_canonical(std::vector<ElementSet>& sets);

struct ElementSetHash {
    std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

}  // namespace cprime
