#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace pirick {

using Elem = std::uint32_t;

// Dense membership mask over the element indices 0..universe-1 of a finite
// structure. Used for submodules, ideals and arbitrary subsets.
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(std::size_t universe);
    static ElementSet full(std::size_t universe);
    static ElementSet of(std::size_t universe, std::span<const Elem> members);

    std::size_t universe() const noexcept { return universe_; }
    std::size_t count() const noexcept;
    bool empty() const noexcept { return count() == 0; }

    bool contains(Elem e) const noexcept {
        return (words_[e >> 6] >> (e & 63)) & 1u;
    }
    void insert(Elem e) noexcept { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
    void erase(Elem e) noexcept { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }

    bool is_subset_of(const ElementSet& other) const noexcept;
    bool intersects(const ElementSet& other) const noexcept;
    std::vector<Elem> elements() const;

    ElementSet& operator&=(const ElementSet& other) noexcept;
    ElementSet& operator|=(const ElementSet& other) noexcept;
    friend ElementSet operator&(ElementSet a, const ElementSet& b) noexcept { return a &= b; }
    friend ElementSet operator|(ElementSet a, const ElementSet& b) noexcept { return a |= b; }

    friend bool operator==(const ElementSet&, const ElementSet&) = default;
    // Orders by size first, then by mask words; this is the enumeration order
    // used wherever "first" submodule or ideal is reported.
    friend std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) noexcept;

    std::size_t hash() const noexcept;

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
    std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

}  // namespace pirick
