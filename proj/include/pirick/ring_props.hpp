#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pirick/ring.hpp"

namespace pirick {

// Per-element witness table for a universally quantified ring condition. When
// `holds` is false, `counterexample` is the smallest failing element.
template <class Witness>
struct ElementwiseVerdict {
    bool holds = true;
    std::vector<std::optional<Witness>> witnesses;
    std::optional<Elem> counterexample;
};

struct PowerWitness {
    std::uint32_t n = 1;
    Elem x = 0;
    friend bool operator==(const PowerWitness&, const PowerWitness&) = default;
};

struct AnnihilatorWitness {
    std::uint32_t n = 1;
    Elem e = 0;  // idempotent generating the annihilator
    friend bool operator==(const AnnihilatorWitness&, const AnnihilatorWitness&) = default;
};

// First t with a^t in {a^1, ..., a^{t-1}}; exponent searches run over 1..t.
std::uint32_t power_repetition_bound(const FiniteRing& r, Elem a);
std::optional<std::uint32_t> nilpotency_index(const FiniteRing& r, Elem a);

std::vector<Elem> ring_idempotents(const FiniteRing& r);
bool is_unit(const FiniteRing& r, Elem a);
std::vector<Elem> ring_units(const FiniteRing& r);

// R*a and {r : r*a = 0}.
ElementSet left_principal_ideal(const FiniteRing& r, Elem a);
ElementSet left_annihilator_in_ring(const FiniteRing& r, Elem a);
bool is_left_ideal(const FiniteRing& r, const ElementSet& s);
bool is_two_sided_ideal(const FiniteRing& r, const ElementSet& s);

// a^n = a^n x a^n; smallest n, then smallest x.
ElementwiseVerdict<PowerWitness> is_pi_regular(const FiniteRing& r);
// a = a x a.
ElementwiseVerdict<Elem> is_regular(const FiniteRing& r);

struct StronglyPiRegularVerdict {
    bool holds = true;
    ElementwiseVerdict<PowerWitness> right;  // a^n = a^{n+1} x
    ElementwiseVerdict<PowerWitness> left;   // a^n = y a^{n+1}
};
StronglyPiRegularVerdict is_strongly_pi_regular(const FiniteRing& r);

// {r : r a^n = 0} = R e for an idempotent e; smallest n, then smallest e.
ElementwiseVerdict<AnnihilatorWitness> is_generalized_left_pp(const FiniteRing& r);

struct RingPredicates {
    bool commutative = false;
    bool reduced = false;
    bool abelian = false;
    bool domain = false;
    bool local = false;
    bool division = false;
    std::vector<Elem> units;
    ElementSet jacobson_radical;
    bool radical_is_nil = false;
    std::vector<Elem> idempotents;
};

// Definitions are applied literally, so the trivial ring counts as reduced,
// abelian, a domain and local, but not as a division ring.
RingPredicates ring_predicates(const FiniteRing& r);

}  // namespace pirick
