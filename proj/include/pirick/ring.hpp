#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pirick/caps.hpp"
#include "pirick/element_set.hpp"
#include "pirick/group.hpp"

namespace pirick {

// Associative unital ring on a finite abelian group, given by the products of
// the standard generators (structure constants) and extended bilinearly. The
// full multiplication table is computed and validated at construction.
class FiniteRing {
public:
    // constants[i * rank + j] is e_i * e_j. Throws InconsistentConstants when a
    // product is not killed by the orders of its factors, NonAssociative,
    // BadIdentity, or SizeCapExceeded.
    static FiniteRing make(FinAbGroup group, std::vector<Elem> constants, Elem one,
                           const Caps& caps = {});

    const std::string& name() const noexcept { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    const FinAbGroup& group() const noexcept { return group_; }
    std::size_t order() const noexcept { return group_.order(); }
    std::size_t rank() const noexcept { return group_.rank(); }
    Elem basis(std::size_t i) const noexcept { return group_.basis(i); }
    Elem constant(std::size_t i, std::size_t j) const noexcept { return constants_[i * rank() + j]; }
    const std::vector<Elem>& constants() const noexcept { return constants_; }

    Elem zero() const noexcept { return 0; }
    Elem one() const noexcept { return one_; }
    Elem add(Elem a, Elem b) const noexcept { return group_.add(a, b); }
    Elem neg(Elem a) const noexcept { return group_.neg(a); }
    Elem sub(Elem a, Elem b) const noexcept { return group_.sub(a, b); }
    Elem mul(Elem a, Elem b) const noexcept { return (*mul_)[a * order() + b]; }
    Elem pow(Elem a, std::uint64_t n) const noexcept;

    bool is_commutative() const noexcept;
    bool is_idempotent(Elem a) const noexcept { return mul(a, a) == a; }

    // Structural equality: same group, constants and identity.
    friend bool operator==(const FiniteRing& a, const FiniteRing& b) noexcept {
        return a.group_ == b.group_ && a.constants_ == b.constants_ && a.one_ == b.one_;
    }

private:
    FinAbGroup group_;
    std::vector<Elem> constants_;
    Elem one_ = 0;
    std::shared_ptr<const std::vector<std::uint16_t>> mul_;
    std::string name_;
};

using RingPtr = std::shared_ptr<const FiniteRing>;

// A structure rebuilt on a canonical carrier, with the map back to the ids it
// was built from.
template <class T>
struct Relabeled {
    T value;
    std::vector<Elem> to_source;  // new index -> source id
};

// Builds a ring on a subset of some ambient carrier closed under the given
// operations (`one` must be the identity of the subset).
Relabeled<FiniteRing> ring_from_operations(std::size_t ambient, std::span<const Elem> members,
                                           Elem zero, Elem one,
                                           const std::function<Elem(Elem, Elem)>& add,
                                           const std::function<Elem(Elem, Elem)>& mul,
                                           const Caps& caps = {});

// --- builders ---------------------------------------------------------------

FiniteRing zmod(std::uint32_t n, const Caps& caps = {});
// eRe with identity e. Throws NotIdempotent.
Relabeled<FiniteRing> corner_ring(const FiniteRing& r, Elem e, const Caps& caps = {});
// Matrix entries are stored row-major; basis b*E_pq ordered by (p, q, b).
FiniteRing matrix_ring(const FiniteRing& r, std::size_t n, const Caps& caps = {});
// Upper-triangular matrices, basis b*E_pq with p <= q ordered by (p, q, b).
FiniteRing triangular_ring(const FiniteRing& r, std::size_t n, const Caps& caps = {});
FiniteRing product_ring(const FiniteRing& a, const FiniteRing& b, const Caps& caps = {});
FiniteRing opposite_ring(const FiniteRing& r, const Caps& caps = {});

// Brute-force ring isomorphism: images of the additive generators are searched
// with matching element orders. Returns the element table of one isomorphism.
std::optional<std::vector<Elem>> find_ring_isomorphism(const FiniteRing& a, const FiniteRing& b);

}  // namespace pirick
