#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pirick/caps.hpp"
#include "pirick/module.hpp"
#include "pirick/ring.hpp"

namespace pirick {

// A corpus entry: either a ring (module unset) or a module over `ring`.
struct Instance {
    std::string name;
    RingPtr ring;
    std::optional<FiniteModule> module;

    bool is_module() const noexcept { return module.has_value(); }
};

enum class VerdictStatus { Holds, HypothesisNotMet, Violation, Skipped, ReadingFlag };
std::string to_string(VerdictStatus s);

struct TheoremVerdict {
    std::string theorem;
    std::string instance;
    VerdictStatus status = VerdictStatus::Skipped;
    std::string witness;  // failing direction and counterexample, or a skip reason
};

enum class TheoremTarget { Ring, Module };

struct TheoremInfo {
    std::string id;
    TheoremTarget target;
    std::string statement;
};

// Fixed registry order.
const std::vector<TheoremInfo>& theorem_registry();
const TheoremInfo& theorem_info(const std::string& id);  // throws UnknownTheorem

// Evaluates one entry. Entries for the other instance kind report skipped.
TheoremVerdict verify(const std::string& id, const Instance& inst, const Caps& caps = {});
// Every applicable entry (or only `ids` when nonempty), in registry order.
std::vector<TheoremVerdict> verify_all(const Instance& inst, const Caps& caps = {},
                                       const std::vector<std::string>& ids = {});

struct CorpusSummary {
    std::vector<TheoremVerdict> verdicts;  // sorted by instance name, then registry order
    std::size_t holds = 0, not_met = 0, violations = 0, skipped = 0, reading_flags = 0;
    std::vector<std::string> never_fired;  // entries whose hypothesis never held
    std::size_t entries_fired = 0;         // entries with at least one non-vacuous holds
};

// Instances are distributed over `jobs` threads; the result does not depend
// on the thread count.
CorpusSummary run_corpus(const std::vector<Instance>& instances, const Caps& caps = {}, unsigned jobs = 1,
                         const std::vector<std::string>& ids = {});

std::string format_verdict(const TheoremVerdict& v);
std::string format_summary(const CorpusSummary& s);

}  // namespace pirick
