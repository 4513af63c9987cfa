// Release gate: one PASS/FAIL line per acceptance criterion over the shipped
// corpus. Usage: acceptance CORPUS_DIR PIRICK_BINARY
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

#include "fixtures.hpp"
#include "pirick/error.hpp"
#include "pirick/io.hpp"
#include "pirick/properties.hpp"
#include "pirick/search.hpp"
#include "pirick/theorems.hpp"

using namespace pirick;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> failures;

    void require(bool ok, const std::string& what) {
        if (ok) return;
        pass = false;
        if (failures.size() < 5) failures.push_back(what);
    }
};

// Modules under test: every module file plus the regular module of every ring.
std::vector<FiniteModule> corpus_modules(const Corpus& c) {
    std::vector<FiniteModule> out;
    std::set<std::string> names;
    for (const auto& inst : c.instances)
        if (inst.is_module()) {
            out.push_back(*inst.module);
            names.insert(inst.name);
        }
    for (const auto& inst : c.instances)
        if (!inst.is_module() && !names.count(inst.name + "_reg")) out.push_back(ring_as_module(inst.ring));
    return out;
}

Submodule image_set(const FiniteModule& m, const ModuleMap& f) { return image(m, f); }

ModuleMap map_of(const EndRing& s, Elem f) { return s.map(f); }

Outcome hook_example(const Corpus& c) {
    Outcome o;
    const Instance* inst = nullptr;
    for (const auto& i : c.instances)
        if (i.name == "ex23") inst = &i;
    if (!inst) {
        o.require(false, "ex23 missing from corpus");
        return o;
    }
    const auto& m = *inst->module;
    ModuleAnalysis a(m);
    const auto& s = a.end();
    o.require(s.size() == 8, "End has " + std::to_string(s.size()) + " elements");

    std::set<ModuleMap> param, all;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z) param.insert(fixtures::hook_map(m, x, y, z));
    for (Elem f = 0; f < s.size(); ++f) all.insert(s.map(f));
    o.require(param == all, "End maps differ from the (a,b,c) family");

    auto lattice = all_submodules(m);
    auto img = [&](int x, int y, int z) { return image_set(m, fixtures::hook_map(m, x, y, z)); };
    auto summand = [&](const Submodule& n) { return find_complement(m, n, lattice).summand; };
    auto coords = [&](std::initializer_list<std::vector<std::uint32_t>> cs) { return fixtures::coords_set(m, cs); };

    o.require(img(1, 1, 1) == whole_module(m), "(1,1,1) not onto");
    auto f2 = fixtures::hook_map(m, 0, 0, 1);
    o.require(compose(f2, f2) == zero_map(m, m), "(0,0,1) squared is nonzero");
    o.require(img(0, 0, 1) == coords({{0, 0, 0}, {0, 0, 1}}), "(0,0,1) image");
    o.require(!summand(img(0, 0, 1)), "(0,0,1) image is a summand");
    auto lower = coords({{0, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 1, 1}});
    o.require(img(0, 1, 1) == lower && img(0, 1, 0) == lower && summand(lower), "lower-row case");
    auto diag = coords({{0, 0, 0}, {1, 0, 1}});
    o.require(img(1, 0, 1) == diag && summand(diag), "(1,0,1) case");
    auto top = coords({{0, 0, 0}, {1, 0, 0}});
    o.require(img(1, 0, 0) == top && summand(top), "(1,0,0) case");
    o.require(fixtures::hook_map(m, 1, 1, 0) == identity_map(m), "(1,1,0) is not the identity");
    o.require(fixtures::hook_map(m, 0, 0, 0) == zero_map(m, m), "(0,0,0) is not zero");

    o.require(is_dual_pi_rickart(a).holds, "not dual pi-Rickart");
    auto dr = is_dual_rickart(a);
    o.require(!dr.holds, "dual Rickart");
    o.require(dr.counterexample && s.map(*dr.counterexample) == f2, "dual Rickart counterexample is not (0,0,1)");
    o.detail = "|End|=" + std::to_string(s.size());
    return o;
}

Outcome pi_regular_equivalence(const Corpus& c) {
    Outcome o;
    std::size_t rings = 0;
    for (const auto& inst : c.instances) {
        if (inst.is_module()) continue;
        ++rings;
        ModuleAnalysis a(ring_as_module(inst.ring));
        bool lhs = is_dual_pi_rickart(a).holds;
        bool rhs = is_pi_regular(*inst.ring).holds;
        o.require(lhs == rhs, inst.name + ": dual pi-Rickart " + std::to_string(lhs) + " vs pi-regular " +
                                  std::to_string(rhs));
    }
    o.detail = std::to_string(rings) + " rings";
    return o;
}

Outcome universal_facts(const std::vector<FiniteModule>& mods) {
    Outcome o;
    for (const auto& m : mods) {
        ModuleAnalysis a(m);
        o.require(is_fitting(a).holds, m.name() + ": not Fitting");
        o.require(is_strongly_co_hopfian(a).holds, m.name() + ": not strongly co-Hopfian");
        o.require(is_dual_pi_rickart(a).holds, m.name() + ": not dual pi-Rickart");
        o.require(is_strongly_pi_regular(a.s()).holds, m.name() + ": End not strongly pi-regular");
        o.require(is_generalized_left_pp(a.s()).holds, m.name() + ": End not generalized left pp");
    }
    o.detail = std::to_string(mods.size()) + " modules";
    return o;
}

Outcome separation(const std::vector<PropertyReport>& reports) {
    Outcome o;
    auto contains = [](const SearchResult& r, const std::string& n) {
        return std::find(r.matches.begin(), r.matches.end(), n) != r.matches.end();
    };
    auto a = search("dual_pi_rickart & !dual_rickart", reports);
    auto b = search("pi_rickart & !rickart", reports);
    o.require(contains(a, "z4_reg"), "z4_reg not separated (dual)");
    o.require(contains(a, "ex23"), "ex23 not separated (dual)");
    o.require(contains(b, "z4_reg"), "z4_reg not separated (kernel side)");
    o.detail = std::to_string(a.matches.size()) + " and " + std::to_string(b.matches.size()) + " matches";
    return o;
}

Outcome annihilator_identities(const std::vector<FiniteModule>& mods) {
    Outcome o;
    std::size_t checked = 0;
    for (const auto& m : mods) {
        ModuleAnalysis a(m);
        const auto& s = a.end();
        auto v = is_dual_pi_rickart(a);
        for (Elem f = 0; f < s.size(); ++f) {
            const auto& w = v.witnesses[f];
            if (!w) {
                o.require(false, m.name() + ": no witness for " + std::to_string(f));
                continue;
            }
            auto fn = map_power(m, s.map(f), w->n);
            auto e = s.map(w->e);
            std::string at = m.name() + " f=" + std::to_string(f);
            o.require(compose(e, e) == e, at + ": witness not idempotent");
            auto im = image(m, fn);
            o.require(im == image(m, e), at + ": Im f^n != eM");
            // l_S(f^n) against S(1 - e), both by raw composition.
            ModuleMap one_minus_e;
            for (Elem x = 0; x < m.order(); ++x) one_minus_e.table.push_back(m.sub(x, e(x)));
            std::set<ModuleMap> lhs, rhs;
            for (Elem g = 0; g < s.size(); ++g) {
                if (compose(s.map(g), fn) == zero_map(m, m)) lhs.insert(s.map(g));
                rhs.insert(compose(s.map(g), one_minus_e));
            }
            o.require(lhs == rhs, at + ": l_S(f^n) != S(1-e)");
            Submodule back(m.order());
            for (Elem x = 0; x < m.order(); ++x) {
                bool killed = true;
                for (const auto& g : lhs)
                    if (g(x) != 0) {
                        killed = false;
                        break;
                    }
                if (killed) back.insert(x);
            }
            o.require(back == im, at + ": r_M(l_S(f^n M)) != f^n M");
            ++checked;
        }
    }
    o.detail = std::to_string(checked) + " endomorphisms";
    return o;
}

Outcome summand_oracles(const std::vector<FiniteModule>& mods, const Caps& caps) {
    Outcome o;
    std::size_t pairs = 0;
    for (const auto& m : mods) {
        if (m.order() > caps.lattice) continue;
        ModuleAnalysis a(m, caps);
        const auto& lattice = a.lattice();
        const auto& by_idempotent = a.summands();
        for (const auto& n : lattice) {
            bool lhs = find_complement(m, n, lattice).summand;
            bool rhs = by_idempotent.count(n) > 0;
            o.require(lhs == rhs, m.name() + ": summand decisions disagree on a submodule of size " +
                                      std::to_string(n.count()));
            ++pairs;
        }
    }
    o.require(pairs >= 500, "only " + std::to_string(pairs) + " pairs examined");
    o.detail = std::to_string(pairs) + " pairs";
    return o;
}

Outcome theorem_suite(const Corpus& c, CorpusSummary& summary) {
    Outcome o;
    summary = run_corpus(c.instances, {}, std::max(1u, std::thread::hardware_concurrency()));
    for (const auto& v : summary.verdicts)
        o.require(v.status != VerdictStatus::Violation, "violation: " + format_verdict(v));
    o.require(summary.entries_fired >= 20, "only " + std::to_string(summary.entries_fired) + " entries fired");
    o.require(format_summary(summary).find("# never_fired=") != std::string::npos, "summary lacks never_fired");
    std::string never;
    for (const auto& n : summary.never_fired) never += (never.empty() ? "" : ",") + n;
    o.detail = std::to_string(summary.entries_fired) + " entries fired, never fired: " + (never.empty() ? "-" : never);
    return o;
}

Outcome nil_ideals(const std::vector<FiniteModule>& mods, const Caps& caps) {
    Outcome o;
    std::size_t small = 0;
    for (const auto& m : mods) {
        ModuleAnalysis a(m, caps);
        const auto& s = a.s();
        auto zl = singular_ideal_left(s);
        auto j = ring_predicates(s).jacobson_radical;
        for (auto f : zl.elements()) {
            o.require(nilpotency_index(s, f).has_value(), m.name() + ": singular element not nilpotent");
            o.require(j.contains(f), m.name() + ": singular element outside J");
        }
        if (m.order() > caps.lattice) continue;
        const auto& lattice = a.lattice();
        auto listed = small_image_endos(a);
        std::set<Elem> listed_ids;
        for (const auto& e : listed) listed_ids.insert(e.f);
        for (Elem f = 0; f < a.end().size(); ++f) {
            if (!is_small(m, a.end().image(f), lattice)) continue;
            ++small;
            o.require(listed_ids.count(f) == 1, m.name() + ": small-image endomorphism not listed");
        }
        for (const auto& e : listed) {
            o.require(e.nilpotency.has_value(), m.name() + ": small-image endomorphism not nilpotent");
            if (!e.nilpotency) continue;
            auto f = a.end().map(e.f);
            auto zero = zero_map(m, m);
            o.require(map_power(m, f, *e.nilpotency) == zero, m.name() + ": f^k != 0 at the reported index");
            if (*e.nilpotency > 1)
                o.require(map_power(m, f, *e.nilpotency - 1) != zero, m.name() + ": reported index not minimal");
        }
    }
    o.detail = std::to_string(small) + " small-image endomorphisms";
    return o;
}

Outcome epi_or_nilpotent(const std::vector<FiniteModule>& mods) {
    Outcome o;
    std::size_t indecomposable = 0, maps = 0;
    for (const auto& m : mods) {
        ModuleAnalysis a(m);
        const auto& s = a.end();
        if (!is_indecomposable(s)) continue;
        ++indecomposable;
        for (Elem f = 0; f < s.size(); ++f) {
            ++maps;
            bool epi = s.image(f) == whole_module(m);
            bool nil = nilpotency_index(s.ring(), f).has_value();
            o.require(epi || nil, m.name() + ": endomorphism " + std::to_string(f) + " unclassified");
            o.require(!(epi && nil) || m.order() == 1, m.name() + ": endomorphism both onto and nilpotent");
        }
    }
    o.detail = std::to_string(indecomposable) + " indecomposable modules, " + std::to_string(maps) + " maps";
    return o;
}

int run_command(const std::string& cmd, const fs::path& out) {
    int rc = std::system((cmd + " > \"" + out.string() + "\" 2>/dev/null").c_str());
    return rc;
}

Outcome determinism(const fs::path& corpus, const std::string& cli) {
    Outcome o;
    auto tmp = fs::temp_directory_path() / "pirick_acceptance";
    fs::remove_all(tmp);
    fs::create_directories(tmp);
    auto q = [](const fs::path& p) { return "\"" + p.string() + "\""; };
    auto base = q(cli);
    o.require(run_command(base + " catalog " + q(corpus) + " --out " + q(tmp / "a.csv"), tmp / "log1") == 0,
              "first catalog run failed");
    o.require(run_command(base + " catalog " + q(corpus) + " --out " + q(tmp / "b.csv") + " --jobs 8", tmp / "log2") == 0,
              "second catalog run failed");
    auto a = read_file(tmp / "a.csv"), b = read_file(tmp / "b.csv");
    o.require(!a.empty() && a == b, "catalog outputs differ");
    o.require(run_command(base + " verify " + q(corpus) + " --jobs 1", tmp / "v1") == 0, "verify --jobs 1 failed");
    o.require(run_command(base + " verify " + q(corpus) + " --jobs 8", tmp / "v8") == 0, "verify --jobs 8 failed");
    auto v1 = read_file(tmp / "v1"), v8 = read_file(tmp / "v8");
    o.require(!v1.empty() && v1 == v8, "verdict lines differ between job counts");
    o.detail = std::to_string(std::count(a.begin(), a.end(), '\n')) + " catalog lines, " +
               std::to_string(std::count(v1.begin(), v1.end(), '\n')) + " verify lines";
    fs::remove_all(tmp);
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: acceptance CORPUS_DIR PIRICK_BINARY\n";
        return 2;
    }
    const fs::path corpus_dir = argv[1];
    const std::string cli = argv[2];
    Caps caps;

    Corpus corpus;
    try {
        corpus = load_corpus(corpus_dir, caps);
    } catch (const Error& e) {
        std::cerr << "cannot load corpus: " << e.what() << "\n";
        return 2;
    }
    auto mods = corpus_modules(corpus);
    auto reports = analyze_corpus(corpus, caps, std::max(1u, std::thread::hardware_concurrency()));
    CorpusSummary summary;

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"worked example: End has 8 maps, seven cases, dual pi-Rickart but not dual Rickart",
         [&] { return hook_example(corpus); }},
        {"R_R dual pi-Rickart iff R pi-regular, every corpus ring", [&] { return pi_regular_equivalence(corpus); }},
        {"every module Fitting, strongly co-Hopfian, dual pi-Rickart; End strongly pi-regular and gen. left pp",
         [&] { return universal_facts(mods); }},
        {"search separates dual pi-Rickart from dual Rickart and pi-Rickart from Rickart",
         [&] { return separation(reports); }},
        {"annihilator identities at every exponent witness", [&] { return annihilator_identities(mods); }},
        {"complement search agrees with idempotent images (>= 500 pairs)", [&] { return summand_oracles(mods, caps); }},
        {"theorem registry: no violations, >= 20 entries fired", [&] { return theorem_suite(corpus, summary); }},
        {"singular ideal nil inside J; small-image endomorphisms nilpotent", [&] { return nil_ideals(mods, caps); }},
        {"indecomposables: every endomorphism onto or nilpotent", [&] { return epi_or_nilpotent(mods); }},
        {"catalog and verify output deterministic", [&] { return determinism(corpus_dir, cli); }},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ["
                  << o.detail << "; " << ms << " ms]\n";
        for (const auto& f : o.failures) std::cout << "    " << f << "\n";
        if (!o.pass) ++failed;
    }
    std::cout << (failed ? "FAILED " : "PASSED ") << criteria.size() - failed << "/" << criteria.size() << "\n";
    return failed ? 1 : 0;
}
