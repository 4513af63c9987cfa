#pragma once

#include <chrono>
#include <exception>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pirick/hom.hpp"
#include "pirick/ring_props.hpp"

namespace pirick {

// Smallest n, then smallest idempotent index e, with the chosen side of f^n
// equal to eM.
struct ExponentWitness {
    std::uint32_t n = 1;
    Elem e = 0;
    friend bool operator==(const ExponentWitness&, const ExponentWitness&) = default;
};

// Verdict over a set of submodules (lattice-level properties).
struct SubmoduleVerdict {
    bool holds = true;
    std::optional<Submodule> counterexample;
    std::optional<Elem> map;  // offending endomorphism, when there is one
};

struct SmallImageEndo {
    Elem f = 0;
    std::optional<std::uint32_t> nilpotency;
};

// Lazily computed views of one module: its endomorphism ring, lattice,
// idempotent images and power chains. Not thread-safe; use one per thread.
class ModuleAnalysis {
public:
    explicit ModuleAnalysis(FiniteModule m, Caps caps = {});

    const FiniteModule& module() const noexcept { return module_; }
    const Caps& caps() const noexcept { return caps_; }

    const EndRing& end() const;
    const FiniteRing& s() const { return end().ring(); }

    // Throws SizeCapExceeded past caps.lattice.
    const std::vector<Submodule>& lattice() const;
    bool lattice_within_cap() const noexcept { return module_.order() <= caps_.lattice; }

    const std::vector<Elem>& idempotents() const;
    // Summand eM -> smallest idempotent e with that image.
    const std::unordered_map<Submodule, Elem, ElementSetHash>& summands() const;
    std::optional<Elem> summand_idempotent(const Submodule& n) const;

    const SubmoduleChain& image_chain(Elem f) const;
    const SubmoduleChain& kernel_chain(Elem f) const;
    // Im f^n (resp. Ker f^n) read off the cached chain, n >= 1.
    const Submodule& image_power(Elem f, std::uint32_t n) const;
    const Submodule& kernel_power(Elem f, std::uint32_t n) const;
    Elem power(Elem f, std::uint32_t n) const { return s().pow(f, n); }

    const RingPredicates& s_predicates() const;

private:
    FiniteModule module_;
    Caps caps_;
    mutable std::optional<EndRing> end_;
    mutable std::exception_ptr end_error_;  // a failed build is not retried
    mutable std::optional<std::vector<Submodule>> lattice_;
    mutable std::optional<std::vector<Elem>> idempotents_;
    mutable std::optional<std::unordered_map<Submodule, Elem, ElementSetHash>> summands_;
    mutable std::vector<std::optional<SubmoduleChain>> image_chains_, kernel_chains_;
    mutable std::optional<RingPredicates> predicates_;
};

std::optional<ExponentWitness> min_exponent(const ModuleAnalysis& a, Elem f);
std::optional<ExponentWitness> min_kernel_exponent(const ModuleAnalysis& a, Elem f);

ElementwiseVerdict<ExponentWitness> is_dual_pi_rickart(const ModuleAnalysis& a);
ElementwiseVerdict<Elem> is_dual_rickart(const ModuleAnalysis& a);  // witness: e with Im f = eM
ElementwiseVerdict<ExponentWitness> is_pi_rickart(const ModuleAnalysis& a);
ElementwiseVerdict<Elem> is_rickart(const ModuleAnalysis& a);
// Witness: smallest n with M = Ker f^n + Im f^n, a direct sum.
ElementwiseVerdict<std::uint32_t> is_fitting(const ModuleAnalysis& a);
// Witness: stabilization index of the image (resp. kernel) chain.
ElementwiseVerdict<std::uint32_t> is_strongly_co_hopfian(const ModuleAnalysis& a);
ElementwiseVerdict<std::uint32_t> is_strongly_hopfian(const ModuleAnalysis& a);
// Counterexample: an injective endomorphism that is not onto.
ElementwiseVerdict<Elem> is_co_hopfian(const ModuleAnalysis& a);
ElementwiseVerdict<Elem> is_morphic(const ModuleAnalysis& a);

// Lattice-based checks; they throw SizeCapExceeded past caps.lattice.
SubmoduleVerdict has_c2(const ModuleAnalysis& a);
SubmoduleVerdict has_d2(const ModuleAnalysis& a);
SubmoduleVerdict is_self_cogenerator(const ModuleAnalysis& a);
SubmoduleVerdict is_quasi_projective(const ModuleAnalysis& a);
std::vector<SmallImageEndo> small_image_endos(const ModuleAnalysis& a);

struct AbelianVerdict {
    bool holds = true;
    std::optional<std::pair<Elem, Elem>> counterexample;  // (f, e) with fe != ef
};
AbelianVerdict is_abelian_module(const ModuleAnalysis& a);
// Every submodule is fully invariant. Checked on cyclic submodules, which
// suffices because every submodule is a sum of cyclic ones.
SubmoduleVerdict is_duo(const ModuleAnalysis& a);

// {f : l_S(f) is an essential left ideal of S}.
ElementSet singular_ideal_left(const FiniteRing& s);

// Ring-side check shared with the theorem suite: every element of the ideal
// is nilpotent and lies in J.
bool ideal_is_nil_in_radical(const FiniteRing& s, const ElementSet& ideal, const ElementSet& radical);

// --- reports -----------------------------------------------------------------

enum class Status { True, False, Skipped };
std::string to_string(Status s);

struct PropertyResult {
    std::string name;
    Status status = Status::Skipped;
    std::string witness;  // empty when none
    std::chrono::microseconds elapsed{0};
};

struct PropertyReport {
    std::string instance;
    std::size_t module_order = 0;
    std::size_t end_order = 0;
    std::size_t generators = 0;
    std::optional<std::uint32_t> max_min_exponent;
    std::size_t end_idempotents = 0;
    std::vector<PropertyResult> results;
    // Per-endomorphism witness lines, filled when requested.
    std::vector<std::string> details;

    const PropertyResult* find(const std::string& name) const;
};

// Property identifiers in report order. Names starting with end_ refer to
// the endomorphism ring.
const std::vector<std::string>& property_names();
bool is_property_name(const std::string& name);

PropertyReport analyze(const FiniteModule& m, const Caps& caps = {}, bool details = false);

enum class Format { Text, Machine };
std::string render(const PropertyReport& r, Format f, bool timing = false);

}  // namespace pirick
