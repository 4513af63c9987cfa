#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pirick/error.hpp"
#include "pirick/io.hpp"
#include "pirick/properties.hpp"
#include "pirick/ring_props.hpp"
#include "pirick/search.hpp"
#include "pirick/theorems.hpp"

using namespace pirick;
namespace fs = std::filesystem;

namespace {

constexpr int kExitViolations = 2;
constexpr int kExitError = 3;

struct Options {
    std::optional<std::size_t> cap_ring, cap_lattice;
    std::optional<std::uint64_t> cap_hom;
    std::string format = "text";
    unsigned jobs = 1;

    Caps caps() const {
        auto c = Caps::from_environment();
        if (cap_ring) c.ring = *cap_ring;
        if (cap_lattice) c.lattice = *cap_lattice;
        if (cap_hom) c.hom = *cap_hom;
        return c;
    }
    Format fmt() const { return format == "machine" ? Format::Machine : Format::Text; }
};

std::string yes(bool b) { return b ? "true" : "false"; }

template <class W>
std::string verdict(const ElementwiseVerdict<W>& v) {
    return v.holds ? "true" : "false;counterexample=" + std::to_string(*v.counterexample);
}

int ring_check(const Options& o, const std::string& path) {
    auto caps = o.caps();
    auto r = parse_ring(read_file(path), caps, path);
    auto p = ring_predicates(r);
    std::vector<std::pair<std::string, std::string>> rows{
        {"order", std::to_string(r.order())},
        {"rank", std::to_string(r.rank())},
        {"commutative", yes(p.commutative)},
        {"idempotents", std::to_string(p.idempotents.size())},
        {"units", std::to_string(p.units.size())},
        {"jacobson_radical", std::to_string(p.jacobson_radical.count())},
        {"reduced", yes(p.reduced)},
        {"abelian", yes(p.abelian)},
        {"domain", yes(p.domain)},
        {"local", yes(p.local)},
        {"division", yes(p.division)},
        {"radical_nil", yes(p.radical_is_nil)},
    };
    if (r.order() <= caps.cubic) {
        rows.emplace_back("regular", verdict(is_regular(r)));
        rows.emplace_back("pi_regular", verdict(is_pi_regular(r)));
        auto sp = is_strongly_pi_regular(r);
        rows.emplace_back("strongly_pi_regular", yes(sp.holds));
        rows.emplace_back("gen_left_pp", verdict(is_generalized_left_pp(r)));
    } else {
        for (const char* k : {"regular", "pi_regular", "strongly_pi_regular", "gen_left_pp"})
            rows.emplace_back(k, "skipped;witness=cap");
    }
    if (o.fmt() == Format::Machine) {
        std::cout << "ring=" << r.name() << "\n";
        for (const auto& [k, v] : rows) std::cout << k << "=" << v << "\n";
    } else {
        std::cout << "ring " << r.name() << "\n";
        for (const auto& [k, v] : rows) {
            auto shown = v;
            std::replace(shown.begin(), shown.end(), ';', ' ');
            std::cout << "  " << std::left << std::setw(22) << k << shown << "\n";
        }
    }
    return 0;
}

// Rings named by --ring, or else every ring file next to the module.
RingRegistry ring_registry(const std::string& module_path, const std::vector<std::string>& ring_paths,
                           const Caps& caps) {
    RingRegistry reg;
    auto add = [&](const fs::path& p) {
        auto r = std::make_shared<const FiniteRing>(parse_ring(read_file(p), caps, p.string()));
        reg.emplace(r->name(), r);
    };
    if (!ring_paths.empty()) {
        for (const auto& p : ring_paths) add(p);
        return reg;
    }
    auto dir = fs::path(module_path).parent_path();
    if (dir.empty()) dir = ".";
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".ring") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto& p : files) {
        try {
            add(p);
        } catch (const Error&) {
            // unrelated broken neighbours do not block this module
        }
    }
    return reg;
}

FiniteModule load_module(const std::string& path, const std::vector<std::string>& rings, const Caps& caps) {
    return parse_module(read_file(path), ring_registry(path, rings, caps), caps, path);
}

int module_check(const Options& o, const std::string& path, const std::vector<std::string>& rings, bool witnesses) {
    auto caps = o.caps();
    auto m = load_module(path, rings, caps);
    std::cout << render(analyze(m, caps, witnesses), o.fmt());
    return 0;
}

int module_endring(const Options& o, const std::string& path, const std::vector<std::string>& rings,
                   const std::string& out) {
    auto caps = o.caps();
    auto ex = export_end_ring(load_module(path, rings, caps), caps);
    write_file(out, ex.ring_text);
    write_file(out + ".index", ex.index_text);
    return 0;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string item; std::getline(in, item, ',');)
        if (!item.empty()) out.push_back(item);
    return out;
}

int verify_cmd(const Options& o, const std::string& dir, const std::string& theorems) {
    auto caps = o.caps();
    auto ids = split_list(theorems);
    for (const auto& id : ids) theorem_info(id);
    auto corpus = load_corpus(dir, caps);
    auto s = run_corpus(corpus.instances, caps, o.jobs, ids);
    for (const auto& v : s.verdicts) std::cout << format_verdict(v) << "\n";
    std::cout << format_summary(s);
    return s.violations ? kExitViolations : 0;
}

int search_cmd(const Options& o, const std::string& expr, const std::string& dir) {
    auto caps = o.caps();
    auto parsed = PropertyExpr::parse(expr);
    auto corpus = load_corpus(dir, caps);
    auto hit = search(parsed, analyze_corpus(corpus, caps, o.jobs));
    for (const auto& n : hit.notes) std::cerr << "note: " << n << "\n";
    for (const auto& m : hit.matches) std::cout << m << "\n";
    return 0;
}

int catalog_cmd(const Options& o, const std::string& dir, const std::string& out) {
    auto caps = o.caps();
    auto corpus = load_corpus(dir, caps, true);
    for (const auto& f : corpus.failures) std::cerr << "error: " << f.message << "\n";
    write_file(out, catalog_csv(corpus, caps, o.jobs));
    return 0;
}

int gen_cmd(const Options& o, const std::vector<std::string>& args, const std::string& out) {
    std::vector<std::string> params(args.begin() + 1, args.end());
    auto g = generate(args.front(), params, o.caps());
    if (out.empty() || out == "-") std::cout << g.text;
    else write_file(out, g.text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computation over finite rings and modules: properties, witnesses, theorem checks"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--cap-ring", o.cap_ring, "Largest ring/module order built with full tables");
    app.add_option("--cap-lattice", o.cap_lattice, "Largest module order for submodule lattices");
    app.add_option("--cap-hom", o.cap_hom, "Largest candidate count for Hom enumeration");
    app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "machine"}));

    std::string path, dir, expr, out, theorems;
    std::vector<std::string> rings, gen_args;
    bool witnesses = false;
    std::function<int()> run;

    auto* ring = app.add_subcommand("ring", "Ring files");
    ring->require_subcommand(1);
    auto* ring_chk = ring->add_subcommand("check", "Validate a ring file and print its predicates");
    ring_chk->add_option("file", path)->required();
    ring_chk->callback([&] { run = [&] { return ring_check(o, path); }; });

    auto* mod = app.add_subcommand("module", "Module files");
    mod->require_subcommand(1);
    auto* mod_chk = mod->add_subcommand("check", "Validate a module file and report its properties");
    mod_chk->add_option("file", path)->required();
    mod_chk->add_option("--ring", rings, "Ring file(s); default: ring files in the module's directory");
    mod_chk->add_flag("--witnesses", witnesses, "Per-endomorphism witness lines");
    mod_chk->callback([&] { run = [&] { return module_check(o, path, rings, witnesses); }; });
    auto* mod_end = mod->add_subcommand("endring", "Export the endomorphism ring and its map index");
    mod_end->add_option("file", path)->required();
    mod_end->add_option("--ring", rings, "Ring file(s); default: ring files in the module's directory");
    mod_end->add_option("--out", out, "Ring file to write; the index goes to <out>.index")->required();
    mod_end->callback([&] { run = [&] { return module_endring(o, path, rings, out); }; });

    auto* ver = app.add_subcommand("verify", "Check the theorem registry over a corpus directory");
    ver->add_option("dir", dir)->required();
    ver->add_option("--theorems", theorems, "Comma-separated entry ids (default: all)");
    ver->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
    ver->callback([&] { run = [&] { return verify_cmd(o, dir, theorems); }; });

    auto* sea = app.add_subcommand("search", "Module instances whose properties satisfy an expression");
    sea->add_option("expr", expr)->required();
    sea->add_option("dir", dir)->required();
    sea->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
    sea->callback([&] { run = [&] { return search_cmd(o, expr, dir); }; });

    auto* cat = app.add_subcommand("catalog", "Property table of every module instance as CSV");
    cat->add_option("dir", dir)->required();
    cat->add_option("--out", out)->required();
    cat->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
    cat->callback([&] { run = [&] { return catalog_cmd(o, dir, out); }; });

    auto* gen = app.add_subcommand("gen", "Write an instance file for a standard family");
    gen->add_option("family_and_params", gen_args,
                    "zmod N | matrix RING K | triangular RING K | product RING RING | corner RING E |\n"
                    "free_module RING K | regular_module RING | abelian N F... | ex23\n(RING: zmod:N or a ring file)")
        ->required();
    gen->add_option("--out", out, "Output file (default: stdout)");
    gen->callback([&] { run = [&] { return gen_cmd(o, gen_args, out); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    try {
        return run();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
