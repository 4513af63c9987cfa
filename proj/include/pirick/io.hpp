#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pirick/hom.hpp"
#include "pirick/properties.hpp"
#include "pirick/theorems.hpp"

namespace pirick {

// Ring file:
//   ring <name>
//   add <n1> ... <nk>
//   one <c1> ... <ck>
//   mul <i> <j> <c1> ... <ck>     e_i * e_j, 1-based; absent pairs are zero
//   end
// Module file:
//   module <name> over <ring-name>
//   add <m1> ... <ml>
//   act <i> <j> <c1> ... <cl>     (module basis j) * (ring basis i), 1-based
//   end
// '#' starts a comment. Errors carry the 1-based line in Error::position();
// construction failures (non-associative, bad identity, ...) keep their kind
// and point at the header line.
FiniteRing parse_ring(std::string_view text, const Caps& caps = {}, const std::string& source = "<input>");

using RingRegistry = std::map<std::string, RingPtr>;
// Throws UnknownRing when the ring named in the header is not registered.
FiniteModule parse_module(std::string_view text, const RingRegistry& rings, const Caps& caps = {},
                          const std::string& source = "<input>");

// Canonical text: nonzero products only, in (i, j) order.
std::string serialize(const FiniteRing& r);
std::string serialize(const FiniteModule& m);

// Names are restricted to [A-Za-z0-9_-].
bool is_valid_name(std::string_view name);

std::string read_file(const std::filesystem::path& p);  // throws Io
void write_file(const std::filesystem::path& p, std::string_view text);

// `module endring` export: S in ring format, and the element index -> map
// table as lines "<idx>: <img_0> ... <img_{|M|-1}>".
struct EndRingExport {
    std::string ring_text;
    std::string index_text;
};
EndRingExport export_end_ring(const FiniteModule& m, const Caps& caps = {});

// --- corpus directories ------------------------------------------------------

struct LoadFailure {
    std::string name;  // file stem
    std::string message;
};

// Every *.ring (as a ring instance) and *.mod (as a module instance) in a
// directory, sorted by instance name. Modules may only refer to rings from
// the same directory.
struct Corpus {
    RingRegistry rings;
    std::vector<Instance> instances;
    std::vector<LoadFailure> failures;

    std::vector<const Instance*> modules() const;
};

// With `keep_going` unset the first failure is thrown; otherwise failures are
// collected and loading continues.
Corpus load_corpus(const std::filesystem::path& dir, const Caps& caps = {}, bool keep_going = false);

// --- instance builders -------------------------------------------------------

// Families: zmod N | matrix RING K | triangular RING K | product RING RING |
// corner RING E | free_module RING K | regular_module RING | abelian N F... | ex23.
// RING is "zmod:N" or the path of a ring file; E is an element index of an
// idempotent. `abelian` is Z_F1 + ... + Z_Fk over Z_N, each F dividing N. Returns the file text; output is a pure function of the input.
struct Generated {
    std::string name;
    std::string extension;  // "ring" or "mod"
    std::string text;
};
Generated generate(const std::string& family, const std::vector<std::string>& params, const Caps& caps = {});

// --- property catalog -------------------------------------------------------

// "#catalog v1", then the column header, then one row per module instance
// ordered by name. Failed instances give a row with status "error" and empty
// fields.
std::vector<std::string> catalog_columns();
std::string catalog_csv(const Corpus& corpus, const Caps& caps = {}, unsigned jobs = 1);

// Analyzes every module instance of the corpus, in name order.
std::vector<PropertyReport> analyze_corpus(const Corpus& corpus, const Caps& caps = {}, unsigned jobs = 1);

}  // namespace pirick
