#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "pirick/module.hpp"

namespace pirick {

// All additive right-linear maps M -> N, in lexicographic order of the
// generator-image assignment. Throws SizeCapExceeded when |N|^g > caps.hom,
// where g is the size of minimal_generators(M), or as soon as more than
// `max_maps` maps have been found.
std::vector<ModuleMap> hom_set(const FiniteModule& from, const FiniteModule& to, const Caps& caps = {},
                               std::size_t max_maps = SIZE_MAX);

ModuleMap identity_map(const FiniteModule& m);
ModuleMap zero_map(const FiniteModule& from, const FiniteModule& to);
// (f g)(m) = f(g(m))
ModuleMap compose(const ModuleMap& f, const ModuleMap& g);
ModuleMap map_power(const FiniteModule& m, const ModuleMap& f, std::uint64_t n);

Submodule image(const FiniteModule& to, const ModuleMap& f);
Submodule kernel(const FiniteModule& from, const ModuleMap& f);

struct SubmoduleChain {
    std::vector<Submodule> chain;  // Im f, Im f^2, ... up to the first repeat
    std::uint32_t stabilization = 1;  // first n with term n == term n+1
};
SubmoduleChain image_chain(const FiniteModule& m, const ModuleMap& f);
SubmoduleChain kernel_chain(const FiniteModule& m, const ModuleMap& f);

// S = End(M) realized as a FiniteRing whose elements index the maps.
// Multiplication is composition: (f g)(m) = f(g(m)).
class EndRing {
public:
    static EndRing make(const FiniteModule& m, const Caps& caps = {});

    const FiniteModule& module() const noexcept { return module_; }
    const FiniteRing& ring() const noexcept { return *ring_; }
    const RingPtr& ring_ptr() const noexcept { return ring_; }
    std::size_t size() const noexcept { return maps_.size(); }

    const ModuleMap& map(Elem f) const { return maps_[f]; }
    Elem index_of(const ModuleMap& f) const;  // throws AxiomViolation if not an endomorphism
    Elem apply(Elem f, Elem m) const { return maps_[f].table[m]; }

    Submodule image(Elem f) const { return pirick::image(module_, maps_[f]); }
    Submodule kernel(Elem f) const { return pirick::kernel(module_, maps_[f]); }

private:
    FiniteModule module_;
    RingPtr ring_;
    std::vector<ModuleMap> maps_;
    struct TableHash {
        std::size_t operator()(const std::vector<Elem>& t) const noexcept;
    };
    std::unordered_map<std::vector<Elem>, Elem, TableHash> lookup_;
};

// l_S(X) = { g : g(X) = 0 }, a left ideal of S.
ElementSet left_annihilator(const EndRing& s, const Submodule& x);
// l_S(f) = l_S(Im f).
ElementSet left_annihilator_of(const EndRing& s, Elem f);
// r_M(I) = { m : g(m) = 0 for all g in I }.
Submodule right_annihilator(const EndRing& s, const ElementSet& ideal);

// eM for every idempotent e of S, keyed by submodule; value is the smallest
// idempotent index producing it.
std::unordered_map<Submodule, Elem, ElementSetHash> idempotent_images(const EndRing& s);

// Only idempotent endomorphisms are 0 and the identity.
bool is_indecomposable(const EndRing& s);

}  // namespace pirick
