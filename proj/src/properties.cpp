#include "pirick/properties.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "pirick/error.hpp"

namespace pirick {

ModuleAnalysis::ModuleAnalysis(FiniteModule m, Caps caps) : module_(std::move(m)), caps_(caps) {}

const EndRing& ModuleAnalysis::end() const {
    if (end_error_) std::rethrow_exception(end_error_);
    if (!end_) {
        try {
            end_ = EndRing::make(module_, caps_);
        } catch (const Error&) {
            end_error_ = std::current_exception();
            throw;
        }
        image_chains_.assign(end_->size(), std::nullopt);
        kernel_chains_.assign(end_->size(), std::nullopt);
    }
    return *end_;
}

const std::vector<Submodule>& ModuleAnalysis::lattice() const {
    if (!lattice_) lattice_ = all_submodules(module_, caps_);
    return *lattice_;
}

const std::vector<Elem>& ModuleAnalysis::idempotents() const {
    if (!idempotents_) idempotents_ = ring_idempotents(s());
    return *idempotents_;
}

const std::unordered_map<Submodule, Elem, ElementSetHash>& ModuleAnalysis::summands() const {
    if (!summands_) summands_ = idempotent_images(end());
    return *summands_;
}

std::optional<Elem> ModuleAnalysis::summand_idempotent(const Submodule& n) const {
    auto it = summands().find(n);
    if (it == summands().end()) return std::nullopt;
    return it->second;
}

const SubmoduleChain& ModuleAnalysis::image_chain(Elem f) const {
    end();
    if (!image_chains_[f]) image_chains_[f] = pirick::image_chain(module_, end_->map(f));
    return *image_chains_[f];
}

const SubmoduleChain& ModuleAnalysis::kernel_chain(Elem f) const {
    end();
    if (!kernel_chains_[f]) kernel_chains_[f] = pirick::kernel_chain(module_, end_->map(f));
    return *kernel_chains_[f];
}

const Submodule& ModuleAnalysis::image_power(Elem f, std::uint32_t n) const {
    const auto& c = image_chain(f).chain;
    return c[std::min<std::size_t>(n, c.size()) - 1];
}

const Submodule& ModuleAnalysis::kernel_power(Elem f, std::uint32_t n) const {
    const auto& c = kernel_chain(f).chain;
    return c[std::min<std::size_t>(n, c.size()) - 1];
}

const RingPredicates& ModuleAnalysis::s_predicates() const {
    if (!predicates_) predicates_ = ring_predicates(s());
    return *predicates_;
}

namespace {

template <class W>
void record(ElementwiseVerdict<W>& v, Elem f, std::optional<W> w) {
    if (!w && v.holds) {
        v.holds = false;
        v.counterexample = f;
    }
    v.witnesses.push_back(std::move(w));
}

std::optional<ExponentWitness> exponent_on(const ModuleAnalysis& a, const SubmoduleChain& chain) {
    for (std::uint32_t n = 1; n <= chain.stabilization; ++n)
        if (auto e = a.summand_idempotent(chain.chain[n - 1])) return ExponentWitness{n, *e};
    return std::nullopt;
}

}  // namespace

std::optional<ExponentWitness> min_exponent(const ModuleAnalysis& a, Elem f) {
    return exponent_on(a, a.image_chain(f));
}

std::optional<ExponentWitness> min_kernel_exponent(const ModuleAnalysis& a, Elem f) {
    return exponent_on(a, a.kernel_chain(f));
}

ElementwiseVerdict<ExponentWitness> is_dual_pi_rickart(const ModuleAnalysis& a) {
    ElementwiseVerdict<ExponentWitness> v;
    for (Elem f = 0; f < a.end().size(); ++f) record(v, f, min_exponent(a, f));
    return v;
}

ElementwiseVerdict<Elem> is_dual_rickart(const ModuleAnalysis& a) {
    ElementwiseVerdict<Elem> v;
    for (Elem f = 0; f < a.end().size(); ++f) record(v, f, a.summand_idempotent(a.image_power(f, 1)));
    return v;
}

ElementwiseVerdict<ExponentWitness> is_pi_rickart(const ModuleAnalysis& a) {
    ElementwiseVerdict<ExponentWitness> v;
    for (Elem f = 0; f < a.end().size(); ++f) record(v, f, min_kernel_exponent(a, f));
    return v;
}

ElementwiseVerdict<Elem> is_rickart(const ModuleAnalysis& a) {
    ElementwiseVerdict<Elem> v;
    for (Elem f = 0; f < a.end().size(); ++f) record(v, f, a.summand_idempotent(a.kernel_power(f, 1)));
    return v;
}

ElementwiseVerdict<std::uint32_t> is_fitting(const ModuleAnalysis& a) {
    ElementwiseVerdict<std::uint32_t> v;
    const auto& m = a.module();
    const auto zero = zero_submodule(m), whole = whole_module(m);
    for (Elem f = 0; f < a.end().size(); ++f) {
        std::optional<std::uint32_t> w;
        auto bound = std::max(a.image_chain(f).stabilization, a.kernel_chain(f).stabilization);
        for (std::uint32_t n = 1; n <= bound && !w; ++n) {
            const auto& im = a.image_power(f, n);
            const auto& ker = a.kernel_power(f, n);
            auto meet = im;
            meet &= ker;
            if (meet == zero && submodule_sum(m, im, ker) == whole) w = n;
        }
        record(v, f, w);
    }
    return v;
}

namespace {

ElementwiseVerdict<std::uint32_t> chain_stabilizes(const ModuleAnalysis& a, bool images) {
    ElementwiseVerdict<std::uint32_t> v;
    const auto& m = a.module();
    for (Elem f = 0; f < a.end().size(); ++f) {
        const auto& c = images ? a.image_chain(f) : a.kernel_chain(f);
        auto st = c.stabilization;
        auto fn = a.end().map(a.power(f, st));
        auto next = a.end().map(a.power(f, st + 1));
        bool same = images ? image(m, fn) == image(m, next) : kernel(m, fn) == kernel(m, next);
        record(v, f, same ? std::optional<std::uint32_t>(st) : std::nullopt);
    }
    return v;
}

}  // namespace

ElementwiseVerdict<std::uint32_t> is_strongly_co_hopfian(const ModuleAnalysis& a) {
    return chain_stabilizes(a, true);
}

ElementwiseVerdict<std::uint32_t> is_strongly_hopfian(const ModuleAnalysis& a) {
    return chain_stabilizes(a, false);
}

ElementwiseVerdict<Elem> is_co_hopfian(const ModuleAnalysis& a) {
    ElementwiseVerdict<Elem> v;
    for (Elem f = 0; f < a.end().size(); ++f) {
        bool injective = a.end().kernel(f).count() == 1;
        bool onto = a.end().image(f).count() == a.module().order();
        // Witness is the map itself; injective maps must be onto.
        record(v, f, !injective || onto ? std::optional<Elem>(f) : std::nullopt);
    }
    return v;
}

ElementwiseVerdict<Elem> is_morphic(const ModuleAnalysis& a) {
    ElementwiseVerdict<Elem> v;
    const auto& m = a.module();
    std::map<std::pair<Submodule, Submodule>, bool> cache;
    for (Elem f = 0; f < a.end().size(); ++f) {
        auto key = std::make_pair(a.end().image(f), a.end().kernel(f));
        auto it = cache.find(key);
        if (it == cache.end()) {
            bool iso = key.first.count() * key.second.count() == m.order() &&
                       are_isomorphic(quotient_module(m, key.first, a.caps()).module,
                                      submodule_as_module(m, key.second, a.caps()).module);
            it = cache.emplace(key, iso).first;
        }
        record(v, f, it->second ? std::optional<Elem>(f) : std::nullopt);
    }
    return v;
}

namespace {

// Modules realized on each distinct summand, grouped by order.
std::multimap<std::size_t, FiniteModule> summand_modules(const ModuleAnalysis& a) {
    std::vector<Submodule> keys;
    for (const auto& [n, e] : a.summands()) keys.push_back(n);
    std::sort(keys.begin(), keys.end());
    std::multimap<std::size_t, FiniteModule> out;
    for (const auto& n : keys) out.emplace(n.count(), submodule_as_module(a.module(), n, a.caps()).module);
    return out;
}

bool isomorphic_to_summand(const std::multimap<std::size_t, FiniteModule>& summands, const FiniteModule& x) {
    auto [lo, hi] = summands.equal_range(x.order());
    for (auto it = lo; it != hi; ++it)
        if (are_isomorphic(x, it->second)) return true;
    return false;
}

}  // namespace

SubmoduleVerdict has_c2(const ModuleAnalysis& a) {
    SubmoduleVerdict v;
    const auto& lat = a.lattice();
    auto sums = summand_modules(a);
    for (const auto& n : lat) {
        if (a.summand_idempotent(n)) continue;
        if (isomorphic_to_summand(sums, submodule_as_module(a.module(), n, a.caps()).module)) {
            v.holds = false;
            v.counterexample = n;
            break;
        }
    }
    return v;
}

SubmoduleVerdict has_d2(const ModuleAnalysis& a) {
    SubmoduleVerdict v;
    const auto& lat = a.lattice();
    auto sums = summand_modules(a);
    for (const auto& n : lat) {
        if (a.summand_idempotent(n)) continue;
        if (isomorphic_to_summand(sums, quotient_module(a.module(), n, a.caps()).module)) {
            v.holds = false;
            v.counterexample = n;
            break;
        }
    }
    return v;
}

SubmoduleVerdict is_self_cogenerator(const ModuleAnalysis& a) {
    // Hom(M/N, M) is l_S(N); M cogenerates M/N iff the common kernel of those
    // maps is exactly N.
    SubmoduleVerdict v;
    for (const auto& n : a.lattice()) {
        if (right_annihilator(a.end(), left_annihilator(a.end(), n)) != n) {
            v.holds = false;
            v.counterexample = n;
            break;
        }
    }
    return v;
}

SubmoduleVerdict is_quasi_projective(const ModuleAnalysis& a) {
    SubmoduleVerdict v;
    const auto& m = a.module();
    for (const auto& n : a.lattice()) {
        auto q = quotient_module(m, n, a.caps());
        std::set<std::vector<Elem>> lifted;
        for (Elem g = 0; g < a.end().size(); ++g) lifted.insert(compose(q.projection, a.end().map(g)).table);
        if (lifted.size() != hom_set(m, q.module, a.caps()).size()) {
            v.holds = false;
            v.counterexample = n;
            break;
        }
    }
    return v;
}

std::vector<SmallImageEndo> small_image_endos(const ModuleAnalysis& a) {
    std::vector<SmallImageEndo> out;
    const auto& lat = a.lattice();
    for (Elem f = 0; f < a.end().size(); ++f)
        if (is_small(a.module(), a.end().image(f), lat)) out.push_back({f, nilpotency_index(a.s(), f)});
    return out;
}

AbelianVerdict is_abelian_module(const ModuleAnalysis& a) {
    AbelianVerdict v;
    const auto& s = a.s();
    for (Elem e : a.idempotents())
        for (Elem f = 0; f < s.order(); ++f)
            if (s.mul(f, e) != s.mul(e, f)) {
                v.holds = false;
                v.counterexample = {f, e};
                return v;
            }
    return v;
}

SubmoduleVerdict is_duo(const ModuleAnalysis& a) {
    SubmoduleVerdict v;
    const auto& m = a.module();
    for (Elem x = 0; x < m.order(); ++x) {
        auto c = cyclic_submodule(m, x);
        for (Elem f = 0; f < a.end().size(); ++f)
            if (!c.contains(a.end().apply(f, x))) {
                v.holds = false;
                v.counterexample = c;
                v.map = f;
                return v;
            }
    }
    return v;
}

ElementSet singular_ideal_left(const FiniteRing& s) {
    // Left ideals of S are the submodules of the regular right module over S^op,
    // which shares S's element indices.
    auto op = std::make_shared<const FiniteRing>(opposite_ring(s));
    auto reg = ring_as_module(op);
    ElementSet out(s.order());
    for (Elem f = 0; f < s.order(); ++f)
        if (is_essential_submodule(reg, left_annihilator_in_ring(s, f))) out.insert(f);
    return out;
}

bool ideal_is_nil_in_radical(const FiniteRing& s, const ElementSet& ideal, const ElementSet& radical) {
    for (Elem f : ideal.elements())
        if (!nilpotency_index(s, f) || !radical.contains(f)) return false;
    return true;
}

// --- reports -----------------------------------------------------------------

std::string to_string(Status s) {
    switch (s) {
        case Status::True: return "true";
        case Status::False: return "false";
        case Status::Skipped: return "skipped";
    }
    return "?";
}

const PropertyResult* PropertyReport::find(const std::string& name) const {
    for (const auto& r : results)
        if (r.name == name) return &r;
    return nullptr;
}

const std::vector<std::string>& property_names() {
    static const std::vector<std::string> names{
        "dual_pi_rickart", "dual_rickart", "pi_rickart", "rickart", "fitting", "strongly_co_hopfian",
        "strongly_hopfian", "co_hopfian", "morphic", "c2", "d2", "abelian", "duo", "self_cogenerator",
        "quasi_projective", "indecomposable", "small_images_nilpotent", "end_commutative", "end_reduced",
        "end_abelian", "end_domain", "end_local", "end_division", "end_regular", "end_pi_regular",
        "end_strongly_pi_regular", "end_gen_left_pp", "end_radical_nil", "end_singular_nil"};
    return names;
}

bool is_property_name(const std::string& name) {
    const auto& n = property_names();
    return std::find(n.begin(), n.end(), name) != n.end();
}

namespace {

std::string set_string(const ElementSet& s) {
    std::string out = "{";
    bool first = true;
    for (Elem x : s.elements()) {
        if (!first) out += ' ';
        out += std::to_string(x);
        first = false;
    }
    return out + "}";
}

struct Outcome {
    bool holds;
    std::string witness;
};

template <class W>
Outcome universal(const ElementwiseVerdict<W>& v, const char* var, const std::string& on_true = {}) {
    if (v.holds) return {true, on_true};
    return {false, std::string(var) + "=" + std::to_string(*v.counterexample)};
}

Outcome submodule_outcome(const SubmoduleVerdict& v) {
    if (v.holds) return {true, {}};
    std::string w = "N=" + set_string(*v.counterexample);
    if (v.map) w += ",f=" + std::to_string(*v.map);
    return {false, w};
}

std::string table_string(const ModuleMap& f) {
    std::string out = "[";
    for (std::size_t i = 0; i < f.table.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(f.table[i]);
    }
    return out + "]";
}

}  // namespace

PropertyReport analyze(const FiniteModule& m, const Caps& caps, bool details) {
    PropertyReport rep;
    rep.instance = m.name();
    rep.module_order = m.order();
    rep.generators = minimal_generators(m).size();
    ModuleAnalysis a(m, caps);

    bool end_ok = true;
    std::string end_failure;
    try {
        rep.end_order = a.end().size();
        rep.end_idempotents = a.idempotents().size();
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::SizeCapExceeded) throw;
        end_ok = false;
    }

    std::optional<ElementwiseVerdict<ExponentWitness>> dpr;
    std::optional<ElementSet> zl;
    const std::map<std::string, std::function<Outcome()>> checks{
        {"dual_pi_rickart",
         [&] {
             dpr = is_dual_pi_rickart(a);
             std::uint32_t mx = 0;
             for (const auto& w : dpr->witnesses)
                 if (w) mx = std::max(mx, w->n);
             if (dpr->holds) rep.max_min_exponent = mx;
             return universal(*dpr, "f", "max_n=" + std::to_string(mx));
         }},
        {"dual_rickart", [&] { return universal(is_dual_rickart(a), "f"); }},
        {"pi_rickart",
         [&] {
             auto v = is_pi_rickart(a);
             std::uint32_t mx = 0;
             for (const auto& w : v.witnesses)
                 if (w) mx = std::max(mx, w->n);
             return universal(v, "f", "max_n=" + std::to_string(mx));
         }},
        {"rickart", [&] { return universal(is_rickart(a), "f"); }},
        {"fitting",
         [&] {
             auto v = is_fitting(a);
             std::uint32_t mx = 0;
             for (const auto& w : v.witnesses)
                 if (w) mx = std::max(mx, *w);
             return universal(v, "f", "max_n=" + std::to_string(mx));
         }},
        {"strongly_co_hopfian",
         [&] {
             auto v = is_strongly_co_hopfian(a);
             std::uint32_t mx = 0;
             for (const auto& w : v.witnesses)
                 if (w) mx = std::max(mx, *w);
             return universal(v, "f", "max_index=" + std::to_string(mx));
         }},
        {"strongly_hopfian",
         [&] {
             auto v = is_strongly_hopfian(a);
             std::uint32_t mx = 0;
             for (const auto& w : v.witnesses)
                 if (w) mx = std::max(mx, *w);
             return universal(v, "f", "max_index=" + std::to_string(mx));
         }},
        {"co_hopfian", [&] { return universal(is_co_hopfian(a), "f"); }},
        {"morphic", [&] { return universal(is_morphic(a), "f"); }},
        {"c2", [&] { return submodule_outcome(has_c2(a)); }},
        {"d2", [&] { return submodule_outcome(has_d2(a)); }},
        {"abelian",
         [&] {
             auto v = is_abelian_module(a);
             if (v.holds) return Outcome{true, {}};
             return Outcome{false, "f=" + std::to_string(v.counterexample->first) +
                                       ",e=" + std::to_string(v.counterexample->second)};
         }},
        {"duo", [&] { return submodule_outcome(is_duo(a)); }},
        {"self_cogenerator", [&] { return submodule_outcome(is_self_cogenerator(a)); }},
        {"quasi_projective", [&] { return submodule_outcome(is_quasi_projective(a)); }},
        {"indecomposable",
         [&] {
             for (Elem e : a.idempotents())
                 if (e != a.s().zero() && e != a.s().one()) return Outcome{false, "e=" + std::to_string(e)};
             return Outcome{true, {}};
         }},
        {"small_images_nilpotent",
         [&] {
             auto list = small_image_endos(a);
             for (const auto& s : list)
                 if (!s.nilpotency) return Outcome{false, "f=" + std::to_string(s.f)};
             return Outcome{true, "count=" + std::to_string(list.size())};
         }},
        {"end_commutative", [&] { return Outcome{a.s_predicates().commutative, {}}; }},
        {"end_reduced", [&] { return Outcome{a.s_predicates().reduced, {}}; }},
        {"end_abelian", [&] { return Outcome{a.s_predicates().abelian, {}}; }},
        {"end_domain", [&] { return Outcome{a.s_predicates().domain, {}}; }},
        {"end_local", [&] { return Outcome{a.s_predicates().local, {}}; }},
        {"end_division", [&] { return Outcome{a.s_predicates().division, {}}; }},
        {"end_regular", [&] { return universal(is_regular(a.s()), "a"); }},
        {"end_pi_regular", [&] { return universal(is_pi_regular(a.s()), "a"); }},
        {"end_strongly_pi_regular",
         [&] {
             auto v = is_strongly_pi_regular(a.s());
             if (v.holds) return Outcome{true, {}};
             auto bad = v.right.holds ? v.left.counterexample : v.right.counterexample;
             return Outcome{false, "a=" + std::to_string(*bad)};
         }},
        {"end_gen_left_pp", [&] { return universal(is_generalized_left_pp(a.s()), "a"); }},
        {"end_radical_nil", [&] { return Outcome{a.s_predicates().radical_is_nil, {}}; }},
        {"end_singular_nil",
         [&] {
             zl = singular_ideal_left(a.s());
             bool ok = ideal_is_nil_in_radical(a.s(), *zl, a.s_predicates().jacobson_radical);
             return Outcome{ok, "Z=" + set_string(*zl)};
         }},
    };

    for (const auto& name : property_names()) {
        PropertyResult r;
        r.name = name;
        auto start = std::chrono::steady_clock::now();
        if (!end_ok) {
            r.witness = "cap";
        } else {
            try {
                auto o = checks.at(name)();
                r.status = o.holds ? Status::True : Status::False;
                r.witness = o.witness;
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::SizeCapExceeded) throw;
                r.status = Status::Skipped;
                r.witness = "cap";
            }
        }
        r.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
        rep.results.push_back(std::move(r));
    }

    if (details && end_ok) {
        auto pr = is_pi_rickart(a);
        auto fit = is_fitting(a);
        for (Elem f = 0; f < a.end().size(); ++f) {
            std::ostringstream line;
            line << "f=" << f << " " << table_string(a.end().map(f));
            const auto& w = dpr->witnesses[f];
            if (w)
                line << " im:n=" << w->n << ",e=" << w->e;
            else
                line << " im:none";
            if (pr.witnesses[f])
                line << " ker:n=" << pr.witnesses[f]->n << ",e=" << pr.witnesses[f]->e;
            else
                line << " ker:none";
            if (fit.witnesses[f]) line << " fitting:n=" << *fit.witnesses[f];
            rep.details.push_back(line.str());
        }
    }
    return rep;
}

std::string render(const PropertyReport& r, Format f, bool timing) {
    std::ostringstream out;
    if (f == Format::Machine) {
        out << "instance=" << r.instance << ";order=" << r.module_order << ";end_order=" << r.end_order
            << ";generators=" << r.generators << "\n";
        for (const auto& p : r.results) {
            out << p.name << "=" << to_string(p.status) << ";witness=" << (p.witness.empty() ? "-" : p.witness);
            if (timing) out << ";micros=" << p.elapsed.count();
            out << "\n";
        }
        for (const auto& d : r.details) out << "endo:" << d << "\n";
        return out.str();
    }
    out << r.instance << ": |M|=" << r.module_order << " |S|=" << r.end_order << " generators=" << r.generators
        << " idempotents(S)=" << r.end_idempotents << "\n";
    for (const auto& p : r.results) {
        std::string name = p.name;
        name.resize(std::max<std::size_t>(name.size(), 24), ' ');
        std::string status = to_string(p.status);
        if (!p.witness.empty()) status.resize(8, ' ');
        out << "  " << name << status << p.witness;
        if (timing) out << "  (" << p.elapsed.count() << " us)";
        out << "\n";
    }
    if (!r.details.empty()) {
        out << "  endomorphisms:\n";
        for (const auto& d : r.details) out << "    " << d << "\n";
    }
    return out.str();
}

}  // namespace pirick
