#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "pirick/element_set.hpp"

namespace pirick {

// Finite abelian group Z_{n_1} x ... x Z_{n_k}. Elements are coordinate tuples
// indexed lexicographically (first coordinate most significant), so index 0
// is the identity and the i-th standard generator has a single 1 at i.
class FinAbGroup {
public:
    // The trivial group.
    FinAbGroup();

    // Throws EmptyFactorList, ZeroFactor, or SizeCapExceeded past Caps::kMaxOrder.
    static FinAbGroup make(std::vector<std::uint32_t> factors);

    std::size_t order() const noexcept { return order_; }
    std::size_t rank() const noexcept { return factors_.size(); }
    const std::vector<std::uint32_t>& factors() const noexcept { return factors_; }

    Elem zero() const noexcept { return 0; }
    Elem basis(std::size_t i) const noexcept {
        return factors_[i] == 1 ? 0 : static_cast<Elem>(strides_[i]);
    }

    Elem add(Elem a, Elem b) const noexcept {
        if (add_table_) return (*add_table_)[a * order_ + b];
        return add_by_coords(a, b);
    }
    Elem neg(Elem a) const noexcept { return (*neg_table_)[a]; }
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
    Elem scale(Elem a, std::uint64_t k) const noexcept;
    std::uint64_t element_order(Elem a) const noexcept;

    std::uint32_t coord(Elem a, std::size_t i) const noexcept {
        return static_cast<std::uint32_t>((a / strides_[i]) % factors_[i]);
    }
    std::vector<std::uint32_t> coords(Elem a) const;
    // Coordinates are reduced modulo the factors; the span must have rank() entries.
    Elem from_coords(std::span<const std::uint32_t> coords) const;

    friend bool operator==(const FinAbGroup& a, const FinAbGroup& b) noexcept {
        return a.factors_ == b.factors_;
    }

private:
    std::vector<std::uint32_t> factors_;
    std::vector<std::size_t> strides_;
    std::size_t order_ = 1;
    std::shared_ptr<const std::vector<std::uint16_t>> add_table_;
    std::shared_ptr<const std::vector<std::uint16_t>> neg_table_;

    Elem add_by_coords(Elem a, Elem b) const noexcept;
};

// A cyclic decomposition of a finite abelian group handed over as an addition
// callback on ids 0..ambient-1 restricted to `members` (a subgroup containing
// `zero`). Factors are grouped by prime (ascending), exponents descending.
struct CyclicDecomposition {
    std::vector<std::uint32_t> factors;
    std::vector<Elem> generators;
    // new_to_old[i] is the member whose coordinates in the new basis index to i.
    std::vector<Elem> new_to_old;
};

CyclicDecomposition decompose_abelian(std::size_t ambient, std::span<const Elem> members,
                                      Elem zero,
                                      const std::function<Elem(Elem, Elem)>& add);

}  // namespace pirick
