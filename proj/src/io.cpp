#include "pirick/io.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

#include "pirick/error.hpp"
#include "pirick/instances.hpp"

namespace pirick {

namespace fs = std::filesystem;

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    while (!text.empty()) {
        ++number;
        auto nl = text.find('\n');
        auto line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        Line l{number, {}};
        std::istringstream in{std::string(line)};
        for (std::string tok; in >> tok;) l.tokens.push_back(tok);
        if (!l.tokens.empty()) out.push_back(std::move(l));
    }
    return out;
}

[[noreturn]] void syntax(const std::string& source, std::size_t line, const std::string& msg) {
    throw Error(ErrorKind::Syntax, source + ":" + std::to_string(line) + ": " + msg, {}, line);
}

std::uint32_t number(const std::string& source, std::size_t line, const std::string& tok) {
    std::uint32_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size()) syntax(source, line, "expected a number, got '" + tok + "'");
    return v;
}

std::vector<std::uint32_t> numbers(const std::string& source, const Line& l, std::size_t from) {
    std::vector<std::uint32_t> out;
    for (std::size_t i = from; i < l.tokens.size(); ++i) out.push_back(number(source, l.number, l.tokens[i]));
    return out;
}

Elem element(const std::string& source, const Line& l, std::size_t from, const FinAbGroup& g) {
    auto cs = numbers(source, l, from);
    if (cs.size() != g.rank())
        syntax(source, l.number,
               "expected " + std::to_string(g.rank()) + " coordinates, got " + std::to_string(cs.size()));
    for (std::size_t i = 0; i < cs.size(); ++i)
        if (cs[i] >= g.factors()[i])
            syntax(source, l.number,
                   "coordinate " + std::to_string(cs[i]) + " out of range for Z_" + std::to_string(g.factors()[i]));
    return g.from_coords(cs);
}

std::size_t basis_index(const std::string& source, const Line& l, std::size_t tok, std::size_t rank) {
    auto i = number(source, l.number, l.tokens[tok]);
    if (i < 1 || i > rank)
        syntax(source, l.number,
               "basis index " + std::to_string(i) + " out of range 1.." + std::to_string(rank));
    return i - 1;
}

FinAbGroup parse_group(const std::string& source, const Line& l) {
    auto fs = numbers(source, l, 1);
    try {
        return FinAbGroup::make(fs);
    } catch (const Error& e) {
        syntax(source, l.number, e.what());
    }
}

// Shared skeleton of both formats: header line, one `add`, keyed rows, `end`.
struct Body {
    const Line* header = nullptr;
    std::optional<FinAbGroup> group;
    std::vector<const Line*> rows;
    const Line* end = nullptr;
};

Body parse_body(const std::vector<Line>& lines, const std::string& source, const std::string& keyword) {
    Body b;
    for (const auto& l : lines) {
        const auto& head = l.tokens[0];
        if (b.end) syntax(source, l.number, "content after 'end'");
        if (!b.header) {
            if (head != keyword) syntax(source, l.number, "expected '" + keyword + "'");
            b.header = &l;
        } else if (head == "add") {
            if (b.group) syntax(source, l.number, "duplicate 'add'");
            if (l.tokens.size() < 2) syntax(source, l.number, "'add' needs at least one factor");
            b.group = parse_group(source, l);
        } else if (head == "end") {
            if (l.tokens.size() != 1) syntax(source, l.number, "'end' takes no arguments");
            b.end = &l;
        } else {
            if (!b.group) syntax(source, l.number, "'" + head + "' before 'add'");
            b.rows.push_back(&l);
        }
    }
    if (!b.header) syntax(source, 1, "empty file");
    if (!b.end) syntax(source, lines.back().number, "missing 'end'");
    if (!b.group) syntax(source, b.end->number, "missing 'add'");
    return b;
}

std::string checked_name(const std::string& source, std::size_t line, const std::string& name) {
    if (!is_valid_name(name)) syntax(source, line, "invalid name '" + name + "'");
    return name;
}

template <class F>
auto at_line(const std::string& source, std::size_t line, F&& build) {
    try {
        return build();
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Syntax) throw;
        throw Error(e.kind(), source + ":" + std::to_string(line) + ": " + e.what(), e.witness(), line);
    }
}

std::string coords_string(const FinAbGroup& g, Elem a) {
    std::string out;
    for (auto c : g.coords(a)) out += " " + std::to_string(c);
    return out;
}

template <class T>
std::vector<T> parallel_map(std::size_t n, unsigned jobs, const std::function<T(std::size_t)>& f) {
    std::vector<T> out(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < n;) out[i] = f(i);
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return out;
}

}  // namespace

bool is_valid_name(std::string_view name) {
    return !name.empty() && std::all_of(name.begin(), name.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' || c == '-';
    });
}

FiniteRing parse_ring(std::string_view text, const Caps& caps, const std::string& source) {
    auto lines = split_lines(text);
    if (lines.empty()) syntax(source, 1, "empty file");
    auto body = parse_body(lines, source, "ring");
    if (body.header->tokens.size() != 2) syntax(source, body.header->number, "expected 'ring <name>'");
    auto name = checked_name(source, body.header->number, body.header->tokens[1]);

    const auto& g = *body.group;
    std::size_t k = g.rank();
    std::optional<Elem> one;
    std::vector<Elem> constants(k * k, 0);
    std::vector<bool> seen(k * k, false);
    for (const auto* l : body.rows) {
        const auto& head = l->tokens[0];
        if (head == "one") {
            if (one) syntax(source, l->number, "duplicate 'one'");
            one = element(source, *l, 1, g);
        } else if (head == "mul") {
            if (l->tokens.size() < 3) syntax(source, l->number, "expected 'mul <i> <j> <coords>'");
            auto i = basis_index(source, *l, 1, k);
            auto j = basis_index(source, *l, 2, k);
            if (seen[i * k + j]) syntax(source, l->number, "duplicate 'mul' for this pair");
            seen[i * k + j] = true;
            constants[i * k + j] = element(source, *l, 3, g);
        } else {
            syntax(source, l->number, "unknown directive '" + head + "'");
        }
    }
    if (!one) syntax(source, body.end->number, "missing 'one'");
    auto r = at_line(source, body.header->number, [&] { return FiniteRing::make(g, constants, *one, caps); });
    r.set_name(name);
    return r;
}

FiniteModule parse_module(std::string_view text, const RingRegistry& rings, const Caps& caps,
                          const std::string& source) {
    auto lines = split_lines(text);
    if (lines.empty()) syntax(source, 1, "empty file");
    auto body = parse_body(lines, source, "module");
    const auto& h = *body.header;
    if (h.tokens.size() != 4 || h.tokens[2] != "over") syntax(source, h.number, "expected 'module <name> over <ring>'");
    auto name = checked_name(source, h.number, h.tokens[1]);
    auto it = rings.find(h.tokens[3]);
    if (it == rings.end())
        throw Error(ErrorKind::UnknownRing, source + ":" + std::to_string(h.number) + ": unknown ring '" + h.tokens[3] + "'",
                    h.tokens[3], h.number);
    const auto& ring = it->second;

    const auto& g = *body.group;
    std::size_t l = g.rank(), k = ring->rank();
    std::vector<Elem> constants(k * l, 0);
    std::vector<bool> seen(k * l, false);
    for (const auto* row : body.rows) {
        if (row->tokens[0] != "act") syntax(source, row->number, "unknown directive '" + row->tokens[0] + "'");
        if (row->tokens.size() < 3) syntax(source, row->number, "expected 'act <i> <j> <coords>'");
        auto i = basis_index(source, *row, 1, k);
        auto j = basis_index(source, *row, 2, l);
        if (seen[i * l + j]) syntax(source, row->number, "duplicate 'act' for this pair");
        seen[i * l + j] = true;
        constants[i * l + j] = element(source, *row, 3, g);
    }
    auto m = at_line(source, h.number, [&] { return FiniteModule::make(ring, g, constants, caps); });
    m.set_name(name);
    return m;
}

std::string serialize(const FiniteRing& r) {
    const auto& g = r.group();
    std::string out = "ring " + r.name() + "\nadd";
    for (auto f : g.factors()) out += " " + std::to_string(f);
    out += "\none" + coords_string(g, r.one()) + "\n";
    for (std::size_t i = 0; i < r.rank(); ++i)
        for (std::size_t j = 0; j < r.rank(); ++j)
            if (auto c = r.constant(i, j); c != 0)
                out += "mul " + std::to_string(i + 1) + " " + std::to_string(j + 1) + coords_string(g, c) + "\n";
    return out + "end\n";
}

std::string serialize(const FiniteModule& m) {
    const auto& g = m.group();
    std::string out = "module " + m.name() + " over " + m.ring().name() + "\nadd";
    for (auto f : g.factors()) out += " " + std::to_string(f);
    out += "\n";
    for (std::size_t i = 0; i < m.ring().rank(); ++i)
        for (std::size_t j = 0; j < m.rank(); ++j)
            if (auto c = m.constant(i, j); c != 0)
                out += "act " + std::to_string(i + 1) + " " + std::to_string(j + 1) + coords_string(g, c) + "\n";
    return out + "end\n";
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot read " + p.string());
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const fs::path& p, std::string_view text) {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + p.string());
    out << text;
    if (!out) throw Error(ErrorKind::Io, "write failed for " + p.string());
}

EndRingExport export_end_ring(const FiniteModule& m, const Caps& caps) {
    auto s = EndRing::make(m, caps);
    FiniteRing r = s.ring();
    r.set_name("end_" + m.name());
    EndRingExport out;
    out.ring_text = "# endring-of: " + m.name() + "\n" + serialize(r);
    for (Elem f = 0; f < s.size(); ++f) {
        out.index_text += std::to_string(f) + ":";
        for (auto v : s.map(f).table) out.index_text += " " + std::to_string(v);
        out.index_text += "\n";
    }
    return out;
}

// --- corpus -----------------------------------------------------------------

std::vector<const Instance*> Corpus::modules() const {
    std::vector<const Instance*> out;
    for (const auto& i : instances)
        if (i.is_module()) out.push_back(&i);
    return out;
}

Corpus load_corpus(const fs::path& dir, const Caps& caps, bool keep_going) {
    std::error_code ec;
    if (!fs::is_directory(dir, ec)) throw Error(ErrorKind::Io, "not a directory: " + dir.string());
    std::vector<fs::path> ring_files, module_files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        const auto ext = entry.path().extension();
        if (ext == ".ring") ring_files.push_back(entry.path());
        else if (ext == ".mod") module_files.push_back(entry.path());
    }
    std::sort(ring_files.begin(), ring_files.end());
    std::sort(module_files.begin(), module_files.end());

    Corpus c;
    std::map<std::string, std::string> owner;  // instance name -> file
    auto fail = [&](const fs::path& p, const std::string& msg) {
        if (!keep_going) throw Error(ErrorKind::Syntax, msg);
        c.failures.push_back({p.stem().string(), msg});
    };
    auto claim = [&](const fs::path& p, const std::string& name) {
        auto [it, fresh] = owner.emplace(name, p.filename().string());
        if (!fresh) fail(p, p.string() + ": name '" + name + "' already used by " + it->second);
        return fresh;
    };
    auto guarded = [&](const fs::path& p, const std::function<void()>& load) {
        try {
            load();
        } catch (const Error& e) {
            if (!keep_going) throw;
            std::string msg = e.what();
            c.failures.push_back({p.stem().string(), msg.rfind(p.string(), 0) == 0 ? msg : p.string() + ": " + msg});
        }
    };

    for (const auto& p : ring_files)
        guarded(p, [&] {
            auto r = std::make_shared<const FiniteRing>(parse_ring(read_file(p), caps, p.string()));
            if (!claim(p, r->name())) return;
            c.rings.emplace(r->name(), r);
            c.instances.push_back({r->name(), r, std::nullopt});
        });
    for (const auto& p : module_files)
        guarded(p, [&] {
            auto m = parse_module(read_file(p), c.rings, caps, p.string());
            if (!claim(p, m.name())) return;
            c.instances.push_back({m.name(), m.ring_ptr(), std::move(m)});
        });
    std::sort(c.instances.begin(), c.instances.end(),
              [](const Instance& a, const Instance& b) { return a.name < b.name; });
    std::sort(c.failures.begin(), c.failures.end(),
              [](const LoadFailure& a, const LoadFailure& b) { return a.name < b.name; });
    return c;
}

// --- builders ---------------------------------------------------------------

namespace {

std::uint32_t param_number(const std::string& s) {
    std::uint32_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size() || v == 0)
        throw Error(ErrorKind::Syntax, "expected a positive number, got '" + s + "'");
    return v;
}

FiniteRing resolve_ring(const std::string& arg, const Caps& caps) {
    if (arg.rfind("zmod:", 0) == 0) return zmod(param_number(arg.substr(5)), caps);
    return parse_ring(read_file(arg), caps, arg);
}

void expect_params(const std::string& family, const std::vector<std::string>& params, std::size_t n,
                   const char* usage) {
    if (params.size() != n) throw Error(ErrorKind::Syntax, "usage: gen " + family + " " + usage);
}

}  // namespace

Generated generate(const std::string& family, const std::vector<std::string>& params, const Caps& caps) {
    auto ring_file = [](FiniteRing r) { return Generated{r.name(), "ring", serialize(r)}; };
    auto module_file = [](const FiniteModule& m) { return Generated{m.name(), "mod", serialize(m)}; };
    auto ptr = [](FiniteRing r) { return std::make_shared<const FiniteRing>(std::move(r)); };

    if (family == "zmod") {
        expect_params(family, params, 1, "N");
        return ring_file(zmod(param_number(params[0]), caps));
    }
    if (family == "matrix" || family == "triangular") {
        expect_params(family, params, 2, "RING K");
        auto base = resolve_ring(params[0], caps);
        auto k = param_number(params[1]);
        return ring_file(family == "matrix" ? matrix_ring(base, k, caps) : triangular_ring(base, k, caps));
    }
    if (family == "product") {
        expect_params(family, params, 2, "RING RING");
        return ring_file(product_ring(resolve_ring(params[0], caps), resolve_ring(params[1], caps), caps));
    }
    if (family == "corner") {
        expect_params(family, params, 2, "RING E");
        auto base = resolve_ring(params[0], caps);
        std::uint32_t e = 0;
        auto [p, ec] = std::from_chars(params[1].data(), params[1].data() + params[1].size(), e);
        if (ec != std::errc{} || p != params[1].data() + params[1].size() || e >= base.order())
            throw Error(ErrorKind::Syntax, "element index out of range: " + params[1]);
        auto c = corner_ring(base, e, caps).value;
        c.set_name(base.name() + "_c" + params[1]);
        return ring_file(std::move(c));
    }
    if (family == "free_module") {
        expect_params(family, params, 2, "RING K");
        return module_file(free_module(ptr(resolve_ring(params[0], caps)), param_number(params[1]), caps));
    }
    if (family == "regular_module") {
        expect_params(family, params, 1, "RING");
        return module_file(ring_as_module(ptr(resolve_ring(params[0], caps))));
    }
    if (family == "abelian") {
        if (params.size() < 2) throw Error(ErrorKind::Syntax, "usage: gen abelian N F1 [F2 ...]");
        auto n = param_number(params[0]);
        std::vector<std::uint32_t> factors;
        std::string name = "z" + params[0] + "_";
        for (std::size_t i = 1; i < params.size(); ++i) {
            auto f = param_number(params[i]);
            if (n % f != 0) throw Error(ErrorKind::Syntax, params[i] + " does not divide " + params[0]);
            factors.push_back(f);
            name += "g" + std::to_string(f);
        }
        auto group = FinAbGroup::make(factors);
        std::vector<Elem> constants;
        for (std::size_t j = 0; j < factors.size(); ++j) constants.push_back(group.basis(j));
        auto m = FiniteModule::make(ptr(zmod(n, caps)), std::move(group), std::move(constants), caps);
        m.set_name(name);
        return module_file(m);
    }
    if (family == "ex23") {
        expect_params(family, params, 0, "");
        return module_file(lower_hook_module(upper_triangular_z2()));
    }
    throw Error(ErrorKind::Syntax, "unknown family '" + family + "'");
}

// --- catalog ----------------------------------------------------------------

std::vector<std::string> catalog_columns() {
    std::vector<std::string> cols{"instance", "status", "order", "end_order", "generators"};
    for (const auto& p : property_names()) cols.push_back(p);
    cols.push_back("max_min_n");
    cols.push_back("end_idempotents");
    return cols;
}

std::vector<PropertyReport> analyze_corpus(const Corpus& corpus, const Caps& caps, unsigned jobs) {
    auto mods = corpus.modules();
    return parallel_map<PropertyReport>(mods.size(), jobs, [&](std::size_t i) { return analyze(*mods[i]->module, caps); });
}

std::string catalog_csv(const Corpus& corpus, const Caps& caps, unsigned jobs) {
    const auto cols = catalog_columns();
    auto mods = corpus.modules();
    auto rows = parallel_map<std::pair<std::string, std::string>>(mods.size(), jobs, [&](std::size_t i) {
        const auto& name = mods[i]->name;
        std::string row = name;
        try {
            auto r = analyze(*mods[i]->module, caps);
            row += ",ok," + std::to_string(r.module_order) + "," +
                   (r.end_order ? std::to_string(r.end_order) : "skipped") + "," + std::to_string(r.generators);
            for (const auto& p : property_names()) {
                const auto* res = r.find(p);
                row += "," + (res ? to_string(res->status) : std::string("skipped"));
            }
            row += "," + (r.max_min_exponent ? std::to_string(*r.max_min_exponent) : std::string("skipped"));
            row += "," + (r.end_order ? std::to_string(r.end_idempotents) : std::string("skipped"));
        } catch (const Error&) {
            row = name + ",error" + std::string(cols.size() - 2, ',');
        }
        return std::pair{name, row};
    });
    for (const auto& f : corpus.failures) rows.emplace_back(f.name, f.name + ",error" + std::string(cols.size() - 2, ','));
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

    std::string out = "#catalog v1\n";
    for (std::size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + cols[i];
    out += "\n";
    for (const auto& [name, row] : rows) out += row + "\n";
    return out;
}

}  // namespace pirick
