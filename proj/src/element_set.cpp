#include "cprime/element_set.hpp"

#include <algorithm>
#include <bit>

namespace cprime {

ElementSet::ElementSet(Index universe)
    : universe_(universe), words_((static_cast<std::size_t>(universe) + 63) / 64, 0)
{
}

ElementSet::ElementSet(Index universe, std::initializer_list<Index> members)
    : ElementSet(universe)
{
    for (Index x : members) insert(x);
}

ElementSet::ElementSet(Index universe, std::span<const Index> members)
    : ElementSet(universe)
{
    for (Index x : members) insert(x);
}

ElementSet ElementSet::full(Index universe)
{
    ElementSet s(universe);
    for (Index x = 0; x < universe; ++x) s.insert(x);
    return s;
}

Index ElementSet::count() const noexcept
{
    Index n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
}

std::vector<Index> ElementSet::members() const
{
    std::vector<Index> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (std::size_t w = 0; w < words_.size(); ++w) {
        auto bits = words_[w];
        while (bits != 0) {
            int b = std::countr_zero(bits);
            out.push_back(static_cast<Index>(w * 64 + static_cast<std::size_t>(b)));
            bits &= bits - 1;
        }
    }
    return out;
}

Index ElementSet::first() const noexcept
{
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] != 0) return static_cast<Index>(w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w])));
    }
    return -1;
}

bool ElementSet::subset_of(const ElementSet& other) const noexcept
{
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if ((words_[w] & ~other.words_[w]) != 0) return false;
    }
    return true;
}

ElementSet ElementSet::operator&(const ElementSet& other) const
{
    ElementSet r = *this;
    r &= other;
    return r;
}

ElementSet ElementSet::operator|(const ElementSet& other) const
{
    ElementSet r = *this;
    r |= other;
    return r;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) noexcept
{
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) noexcept
{
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
}

std::string ElementSet::to_string() const
{
    std::string s = "{";
    bool first_member = true;
    for (Index x : members()) {
        if (!first_member) s += ',';
        s += std::to_string(x);
        first_member = false;
    }
    s += '}';
    return s;
}

std::size_t ElementSet::hash() const noexcept
{
    std::size_t h = static_cast<std::size_t>(universe_) * 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

bool canonical_less(const ElementSet& a, const ElementSet& b)
{
    auto ca = a.count();
    auto cb = b.count();
    if (ca != cb) return ca < cb;
    auto ma = a.members();
    auto mb = b.members();
    return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

void sort_canonical(std::vector<ElementSet>& sets)
{
    std::sort(sets.begin(), sets.end(), canonical_less);
}

}  // namespace cprime
