#include "pirick/element_set.hpp"

#include <algorithm>
#include <bit>

namespace pirick {

ElementSet::ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

ElementSet ElementSet::full(std::size_t universe) {
    ElementSet s(universe);
    for (Elem e = 0; e < universe; ++e) s.insert(e);
    return s;
}

ElementSet ElementSet::of(std::size_t universe, std::span<const Elem> members) {
    ElementSet s(universe);
    for (Elem e : members) s.insert(e);
    return s;
}

std::size_t ElementSet::count() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

bool ElementSet::is_subset_of(const ElementSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i]) return false;
    return true;
}

bool ElementSet::intersects(const ElementSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & other.words_[i]) return true;
    return false;
}

std::vector<Elem> ElementSet::elements() const {
    std::vector<Elem> out;
    out.reserve(count());
    for (std::size_t w = 0; w < words_.size(); ++w) {
        auto bits = words_[w];
        while (bits) {
            auto bit = std::countr_zero(bits);
            out.push_back(static_cast<Elem>(w * 64 + static_cast<std::size_t>(bit)));
            bits &= bits - 1;
        }
    }
    return out;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) noexcept {
    if (auto c = a.count() <=> b.count(); c != 0) return c;
    // Lower element indices first: compare bit-reversed words from the low end.
    for (std::size_t i = 0; i < a.words_.size() && i < b.words_.size(); ++i) {
        if (a.words_[i] == b.words_[i]) continue;
        auto diff = a.words_[i] ^ b.words_[i];
        auto low = diff & (~diff + 1);
        return (a.words_[i] & low) ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return a.universe_ <=> b.universe_;
}

std::size_t ElementSet::hash() const noexcept {
    std::size_t h = universe_ * 0x9e3779b97f4a7c15ull;
    for (auto w : words_) h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

}  // namespace pirick
