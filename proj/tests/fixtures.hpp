#pragma once

#include <memory>

#include "pirick/hom.hpp"
#include "pirick/instances.hpp"
#include "pirick/module.hpp"
#include "pirick/ring.hpp"

namespace fixtures {

using namespace pirick;

inline RingPtr ring_ptr(FiniteRing r) { return std::make_shared<const FiniteRing>(std::move(r)); }

inline FiniteModule regular(std::uint32_t n) { return ring_as_module(ring_ptr(zmod(n))); }

// Z_2 + Z_2 with the obvious Z_4 action.
inline FiniteModule klein_over_z4(const RingPtr& z4) {
    auto g = FinAbGroup::make({2, 2});
    return FiniteModule::make(z4, g, {g.basis(0), g.basis(1)});
}

// Z_2 + Z_4 over Z_4.
inline FiniteModule z2_plus_z4(const RingPtr& z4) {
    auto g = FinAbGroup::make({2, 4});
    return FiniteModule::make(z4, g, {g.basis(0), g.basis(1)});
}

// Map of the ex23 module sending (x, y, z) to (a x, b y, c x + b z).
inline ModuleMap hook_map(const FiniteModule& m, int a, int b, int c) {
    ModuleMap f;
    for (Elem v = 0; v < m.order(); ++v) {
        auto co = m.group().coords(v);
        std::vector<std::uint32_t> out{static_cast<std::uint32_t>(a * co[0] % 2),
                                       static_cast<std::uint32_t>(b * co[1] % 2),
                                       static_cast<std::uint32_t>((c * co[0] + b * co[2]) % 2)};
        f.table.push_back(m.group().from_coords(out));
    }
    return f;
}

inline Submodule coords_set(const FiniteModule& m, std::initializer_list<std::vector<std::uint32_t>> cs) {
    Submodule s(m.order());
    for (const auto& c : cs) s.insert(m.group().from_coords(c));
    return s;
}

// All 2x2 matrices over Z_2 as a right module over the upper-triangular ring.
// Basis E11, E12, E21, E22; ring basis E11, E12, E22.
inline FiniteModule matrix_columns(const RingPtr& t2) {
    auto g = FinAbGroup::make({2, 2, 2, 2});
    Elem e11 = g.basis(0), e12 = g.basis(1), e21 = g.basis(2), e22 = g.basis(3);
    std::vector<Elem> c(3 * 4, 0);
    // ring basis 0 = E11: E11*E11 = E11, E21*E11 = E21
    c[0 * 4 + 0] = e11;
    c[0 * 4 + 2] = e21;
    // ring basis 1 = E12: E11*E12 = E12, E21*E12 = E22
    c[1 * 4 + 0] = e12;
    c[1 * 4 + 2] = e22;
    // ring basis 2 = E22: E12*E22 = E12, E22*E22 = E22
    c[2 * 4 + 1] = e12;
    c[2 * 4 + 3] = e22;
    return FiniteModule::make(t2, g, c);
}

// A spread of small modules used by the cross-check tests.
inline std::vector<FiniteModule> small_modules() {
    auto z4 = ring_ptr(zmod(4));
    auto t2 = upper_triangular_z2();
    return {regular(1), regular(2), regular(4), regular(6), regular(8), regular(12),
            klein_over_z4(z4), z2_plus_z4(z4), ring_as_module(t2), lower_hook_module(t2),
            free_module(ring_ptr(zmod(2)), 3), matrix_columns(t2), ring_as_module(ring_ptr(field4())),
            free_module(z4, 2), ring_as_module(ring_ptr(matrix_ring(zmod(2), 2)))};
}

}  // namespace fixtures
