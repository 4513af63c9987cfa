#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pirick/caps.hpp"
#include "pirick/element_set.hpp"
#include "pirick/group.hpp"
#include "pirick/ring.hpp"

namespace pirick {

// Finite unitary right module over a FiniteRing. The action of the ring basis
// on the module basis is given by constants and extended bilinearly; the full
// |M| x |R| action table is cached.
class FiniteModule {
public:
    // constants[i * rank + j] = (module basis j) * (ring basis i). Throws
    // AxiomViolation (with a witness) when the data is not a unitary module.
    static FiniteModule make(RingPtr ring, FinAbGroup group, std::vector<Elem> constants,
                             const Caps& caps = {});

    const std::string& name() const noexcept { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    const FiniteRing& ring() const noexcept { return *ring_; }
    const RingPtr& ring_ptr() const noexcept { return ring_; }
    const FinAbGroup& group() const noexcept { return group_; }
    std::size_t order() const noexcept { return group_.order(); }
    std::size_t rank() const noexcept { return group_.rank(); }
    Elem constant(std::size_t ring_basis, std::size_t module_basis) const noexcept {
        return constants_[ring_basis * rank() + module_basis];
    }
    const std::vector<Elem>& constants() const noexcept { return constants_; }

    Elem add(Elem a, Elem b) const noexcept { return group_.add(a, b); }
    Elem neg(Elem a) const noexcept { return group_.neg(a); }
    Elem sub(Elem a, Elem b) const noexcept { return group_.sub(a, b); }
    Elem act(Elem m, Elem r) const noexcept { return (*act_)[m * ring_->order() + r]; }

private:
    RingPtr ring_;
    FinAbGroup group_;
    std::vector<Elem> constants_;
    std::shared_ptr<const std::vector<std::uint16_t>> act_;
    std::string name_;
};

// Rings are compared structurally when they are not the same object.
bool same_ring(const FiniteRing& a, const FiniteRing& b);

// Submodules are membership masks over the parent's element indices.
using Submodule = ElementSet;

// Additive, right-linear map stored as a full element table.
struct ModuleMap {
    std::vector<Elem> table;

    Elem operator()(Elem m) const noexcept { return table[m]; }
    friend bool operator==(const ModuleMap&, const ModuleMap&) = default;
    friend auto operator<=>(const ModuleMap&, const ModuleMap&) = default;
};

bool is_homomorphism(const FiniteModule& from, const FiniteModule& to, const ModuleMap& f);

// --- builders ---------------------------------------------------------------

FiniteModule ring_as_module(const RingPtr& r);
FiniteModule free_module(const RingPtr& r, std::size_t rank, const Caps& caps = {});

struct DirectSum {
    FiniteModule module;
    ModuleMap inject_first, inject_second;
    ModuleMap project_first, project_second;
};
// Throws RingMismatch when the modules live over different rings.
DirectSum direct_sum(const FiniteModule& a, const FiniteModule& b, const Caps& caps = {});

struct Quotient {
    FiniteModule module;
    ModuleMap projection;
};
Quotient quotient_module(const FiniteModule& m, const Submodule& n, const Caps& caps = {});

struct SubmoduleAsModule {
    FiniteModule module;
    ModuleMap inclusion;
};
SubmoduleAsModule submodule_as_module(const FiniteModule& m, const Submodule& n, const Caps& caps = {});

// --- lattice ----------------------------------------------------------------

Submodule zero_submodule(const FiniteModule& m);
Submodule whole_module(const FiniteModule& m);
Submodule cyclic_submodule(const FiniteModule& m, Elem x);
Submodule submodule_generated(const FiniteModule& m, std::span<const Elem> generators);
Submodule submodule_sum(const FiniteModule& m, const Submodule& a, const Submodule& b);
bool is_submodule(const FiniteModule& m, const ElementSet& s);

// Greedy cyclic cover: repeatedly adds the element whose cyclic submodule
// enlarges the span most (ties to the smallest index).
std::vector<Elem> minimal_generators(const FiniteModule& m);

// Every submodule, sorted by (size, mask). Throws SizeCapExceeded when
// |M| > caps.lattice.
std::vector<Submodule> all_submodules(const FiniteModule& m, const Caps& caps = {});

struct SummandVerdict {
    bool summand = false;
    std::optional<Submodule> complement;
};
// Complement search over the lattice; first complement in lattice order.
SummandVerdict find_complement(const FiniteModule& m, const Submodule& n,
                               const std::vector<Submodule>& lattice);
SummandVerdict is_direct_summand(const FiniteModule& m, const Submodule& n, const Caps& caps = {});

// Small needs the lattice. Essential only needs cyclic submodules: N is
// essential iff it meets every nonzero cyclic submodule.
bool is_small(const FiniteModule& m, const Submodule& n, const std::vector<Submodule>& lattice);
bool is_small(const FiniteModule& m, const Submodule& n, const Caps& caps = {});
bool is_essential_submodule(const FiniteModule& m, const Submodule& n);

Submodule radical(const FiniteModule& m, const std::vector<Submodule>& lattice);
Submodule socle(const FiniteModule& m, const std::vector<Submodule>& lattice);

// Generator-image backtracking. Returns the element table of an isomorphism.
std::optional<ModuleMap> find_isomorphism(const FiniteModule& a, const FiniteModule& b);
inline bool are_isomorphic(const FiniteModule& a, const FiniteModule& b) {
    return find_isomorphism(a, b).has_value();
}

// Annihilator {r : m r = 0} of an element, as a mask over the ring.
ElementSet element_annihilator(const FiniteModule& m, Elem x);

namespace detail {

// Extends generator images to a full table. Returns nullopt when the
// assignment does not define a homomorphism (a relation is violated).
std::optional<ModuleMap> extend_from_generators(const FiniteModule& from, const FiniteModule& to,
                                                std::span<const Elem> generators,
                                                std::span<const Elem> images);

}  // namespace detail

}  // namespace pirick
