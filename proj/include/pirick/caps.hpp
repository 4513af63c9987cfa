#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace pirick {

// Resource limits. Anything that would exceed one of these raises
// ErrorKind::SizeCapExceeded instead of sampling.
struct Caps {
    std::size_t ring = 4096;         // largest ring/module order built with full tables
    std::size_t cubic = 64;          // largest ring order for exhaustive O(n^3) axiom scans
    std::size_t lattice = 64;        // largest module order for submodule lattice enumeration
    std::uint64_t hom = 1ull << 24;  // largest |N|^g candidate count for Hom(M, N)

    // Hard ceiling: element indices are stored in 16-bit tables.
    static constexpr std::size_t kMaxOrder = 65535;

    // Applies "key=value,key=value" overrides (keys: ring, cubic, lattice, hom).
    // Unknown keys or malformed values throw Error(Syntax).
    void apply_overrides(std::string_view overrides);

    // Defaults, overridden by the PIRICK_CAPS environment variable when set.
    static Caps from_environment();
};

}  // namespace pirick
