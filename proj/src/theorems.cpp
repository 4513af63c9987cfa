#include "pirick/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <thread>

#include "pirick/error.hpp"
#include "pirick/properties.hpp"

namespace pirick {

std::string to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::Holds: return "holds";
        case VerdictStatus::HypothesisNotMet: return "hypothesis_not_met";
        case VerdictStatus::Violation: return "violation";
        case VerdictStatus::Skipped: return "skipped";
        case VerdictStatus::ReadingFlag: return "reading_flag";
    }
    return "?";
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

// A check result: `ok`, or a counterexample description.
struct Check {
    bool ok = true;
    std::string witness;

    static Check pass() { return {}; }
    static Check fail(std::string w) { return {false, std::move(w)}; }
};

Check from_bool(bool b, const char* what) { return b ? Check::pass() : Check::fail(what); }

// Memoized predicates of one module and its endomorphism ring.
class Facts {
public:
    Facts(FiniteModule m, const Caps& caps) : a_(std::move(m), caps) {}

    const ModuleAnalysis& a() const { return a_; }
    const FiniteModule& m() const { return a_.module(); }
    const FiniteRing& s() const { return a_.s(); }
    const EndRing& end() const { return a_.end(); }
    const Caps& caps() const { return a_.caps(); }

    const ElementwiseVerdict<ExponentWitness>& dpr_verdict() const {
        if (!dpr_) dpr_ = is_dual_pi_rickart(a_);
        return *dpr_;
    }
    Check dpr() const {
        const auto& v = dpr_verdict();
        return v.holds ? Check::pass() : Check::fail("f=" + std::to_string(*v.counterexample));
    }
    Check dr() const { return memo(dr_, [&] { return elementwise(is_dual_rickart(a_), "f"); }); }
    Check pr() const { return memo(pr_, [&] { return elementwise(is_pi_rickart(a_), "f"); }); }
    Check fitting() const { return memo(fitting_, [&] { return elementwise(is_fitting(a_), "f"); }); }
    Check strongly_co_hopfian() const {
        return memo(sch_, [&] { return elementwise(is_strongly_co_hopfian(a_), "f"); });
    }
    Check morphic() const { return memo(morphic_, [&] { return elementwise(is_morphic(a_), "f"); }); }
    Check c2() const { return memo(c2_, [&] { return submodule(has_c2(a_)); }); }
    Check d2() const { return memo(d2_, [&] { return submodule(has_d2(a_)); }); }
    Check quasi_projective() const { return memo(qp_, [&] { return submodule(is_quasi_projective(a_)); }); }
    Check duo() const { return memo(duo_, [&] { return submodule(is_duo(a_)); }); }
    Check self_cogenerator() const { return memo(cogen_, [&] { return submodule(is_self_cogenerator(a_)); }); }
    Check indecomposable() const {
        return memo(indec_, [&] {
            for (Elem e : a_.idempotents())
                if (e != s().zero() && e != s().one()) return Check::fail("e=" + std::to_string(e));
            return Check::pass();
        });
    }

    Check s_pi_regular() const { return memo(s_pireg_, [&] { return elementwise(is_pi_regular(s()), "a"); }); }
    Check s_strongly_pi_regular() const {
        return memo(s_spireg_, [&] {
            auto v = is_strongly_pi_regular(s());
            if (v.holds) return Check::pass();
            auto bad = v.right.holds ? v.left.counterexample : v.right.counterexample;
            return Check::fail("a=" + std::to_string(*bad));
        });
    }
    Check s_gen_left_pp() const {
        return memo(s_glpp_, [&] { return elementwise(is_generalized_left_pp(s()), "a"); });
    }
    const RingPredicates& sp() const { return a_.s_predicates(); }

    bool is_epi(Elem f) const { return end().image(f).count() == m().order(); }
    Elem power(Elem f, std::uint32_t n) const { return s().pow(f, n); }
    // l_S(f^n M) = S e for an idempotent e; returns the smallest such e.
    std::optional<Elem> left_ann_idempotent(Elem fn) const {
        const auto& ideals = idempotent_ideals();
        auto it = ideals.find(left_annihilator_of(end(), fn));
        if (it == ideals.end()) return std::nullopt;
        return it->second.front();
    }
    // S e -> every idempotent e generating it, ascending.
    const std::unordered_map<ElementSet, std::vector<Elem>, ElementSetHash>& idempotent_ideals() const {
        if (!ideals_) {
            ideals_.emplace();
            for (Elem e : a_.idempotents()) (*ideals_)[left_principal_ideal(s(), e)].push_back(e);
        }
        return *ideals_;
    }

private:
    template <class W>
    static Check elementwise(const ElementwiseVerdict<W>& v, const char* var) {
        if (v.holds) return Check::pass();
        return Check::fail(std::string(var) + "=" + std::to_string(*v.counterexample));
    }
    static Check submodule(const SubmoduleVerdict& v) {
        if (v.holds) return Check::pass();
        std::string w = "N=" + set_string(*v.counterexample);
        if (v.map) w += ",f=" + std::to_string(*v.map);
        return Check::fail(w);
    }
    template <class F>
    static Check memo(std::optional<Check>& slot, F&& f) {
        if (!slot) slot = f();
        return *slot;
    }

    ModuleAnalysis a_;
    mutable std::optional<ElementwiseVerdict<ExponentWitness>> dpr_;
    mutable std::optional<std::unordered_map<ElementSet, std::vector<Elem>, ElementSetHash>> ideals_;
    mutable std::optional<Check> dr_, pr_, fitting_, sch_, morphic_, c2_, d2_, qp_, duo_, cogen_, indec_,
        s_pireg_, s_spireg_, s_glpp_;
};

bool dual_pi_rickart(const FiniteModule& m, const Caps& caps) {
    ModuleAnalysis a(m, caps);
    return is_dual_pi_rickart(a).holds;
}

class Context {
public:
    Context(const Instance& inst, const Caps& caps) : inst_(inst), caps_(caps) {}

    const Caps& caps() const { return caps_; }
    const FiniteRing& r() const { return *inst_.ring; }
    const RingPtr& r_ptr() const { return inst_.ring; }

    Facts& module() {
        if (!module_) module_ = std::make_unique<Facts>(*inst_.module, caps_);
        return *module_;
    }
    // The free module R^n for n = 1, 2.
    Facts& free(std::size_t n) {
        auto& slot = free_[n - 1];
        if (!slot) {
            // End(R^n) is M_n(R), so its size is known before any enumeration.
            double log_end = static_cast<double>(n * n) * std::log2(static_cast<double>(r().order()));
            if (log_end > std::log2(static_cast<double>(std::min<std::size_t>(caps_.ring, Caps::kMaxOrder))) + 1e-9)
                throw Error(ErrorKind::SizeCapExceeded, "End(R^" + std::to_string(n) + ") exceeds ring cap");
            auto m = n == 1 ? ring_as_module(inst_.ring) : free_module(inst_.ring, n, caps_);
            slot = std::make_unique<Facts>(std::move(m), caps_);
        }
        return *slot;
    }
    bool r_pi_regular() {
        if (!r_pireg_) r_pireg_ = is_pi_regular(r()).holds;
        return *r_pireg_;
    }
    const RingPredicates& rp() {
        if (!rp_) rp_ = ring_predicates(r());
        return *rp_;
    }
    const FiniteRing& matrix2() {
        if (!m2_) m2_ = std::make_unique<FiniteRing>(matrix_ring(r(), 2, caps_));
        return *m2_;
    }

private:
    const Instance& inst_;
    Caps caps_;
    std::unique_ptr<Facts> module_;
    std::unique_ptr<Facts> free_[2];
    std::optional<bool> r_pireg_;
    std::optional<RingPredicates> rp_;
    std::unique_ptr<FiniteRing> m2_;
};

// --- clauses -------------------------------------------------------------------

enum class ClauseStatus { NotMet, Holds, Violation, Skipped, ReadingFlag };

struct Clause {
    std::string label;
    ClauseStatus status = ClauseStatus::NotMet;
    std::string witness;
};

using Pred = std::function<Check()>;

// Hypothesis first; the conclusion is evaluated only when it holds.
Clause implies(std::string label, const Pred& hyp, const Pred& concl, bool flag_only = false) {
    Clause c{std::move(label), ClauseStatus::NotMet, {}};
    try {
        if (!hyp().ok) return c;
        auto r = concl();
        if (r.ok) {
            c.status = ClauseStatus::Holds;
        } else {
            c.status = flag_only ? ClauseStatus::ReadingFlag : ClauseStatus::Violation;
            c.witness = r.witness;
        }
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::SizeCapExceeded) throw;
        c.status = ClauseStatus::Skipped;
        c.witness = "cap";
    }
    return c;
}

Check all_of(std::initializer_list<Pred> preds) {
    for (const auto& p : preds) {
        auto r = p();
        if (!r.ok) return r;
    }
    return Check::pass();
}

Pred always() {
    return [] { return Check::pass(); };
}

// Every summand eM of a module, as its own module, in submodule order.
std::vector<std::pair<Submodule, FiniteModule>> summand_modules(const Facts& f) {
    std::vector<Submodule> keys;
    for (const auto& [n, e] : f.a().summands()) keys.push_back(n);
    std::sort(keys.begin(), keys.end());
    std::vector<std::pair<Submodule, FiniteModule>> out;
    for (const auto& n : keys) out.emplace_back(n, submodule_as_module(f.m(), n, f.caps()).module);
    return out;
}

Check summands_dual_pi_rickart(const Facts& f, const std::string& tag) {
    for (const auto& [n, sub] : summand_modules(f))
        if (!dual_pi_rickart(sub, f.caps())) return Check::fail(tag + "summand=" + set_string(n));
    return Check::pass();
}

// --- module entries ------------------------------------------------------------

using ModuleCheck = std::function<std::vector<Clause>(Facts&)>;
using RingCheck = std::function<std::vector<Clause>(Context&)>;

std::vector<Clause> p2_4(Facts& f) {
    return {implies("dualR=>dualpiR", [&] { return f.dr(); }, [&] { return f.dpr(); }),
            implies("reduced(S)&dualpiR=>dualR",
                    [&] { return all_of({[&] { return from_bool(f.sp().reduced, "S"); }, [&] { return f.dpr(); }}); },
                    [&] { return f.dr(); })};
}

std::vector<Clause> l2_5(Facts& f) {
    auto all_epi = [&] {
        for (Elem g = 0; g < f.end().size(); ++g)
            if (g != f.s().zero() && !f.is_epi(g)) return Check::fail("f=" + std::to_string(g));
        return Check::pass();
    };
    auto lhs = [&] { return all_of({[&] { return f.dpr(); }, [&] { return from_bool(f.sp().domain, "S"); }}); };
    return {implies("=>", lhs, all_epi), implies("<=", all_epi, lhs)};
}

std::vector<Clause> t2_7_1(Facts& f) {
    return {implies("D2&dualpiR=>piR", [&] { return all_of({[&] { return f.d2(); }, [&] { return f.dpr(); }}); },
                    [&] { return f.pr(); })};
}

std::vector<Clause> t2_7_2(Facts& f) {
    return {implies("C2&piR=>dualpiR", [&] { return all_of({[&] { return f.c2(); }, [&] { return f.pr(); }}); },
                    [&] { return f.dpr(); })};
}

// Projectivity is read as quasi-projectivity here.
std::vector<Clause> t2_7_3(Facts& f) {
    auto hyp = [&](const Pred& side) {
        return [&f, side] {
            return all_of({[&] { return f.quasi_projective(); }, [&] { return f.morphic(); }, side});
        };
    };
    return {implies("qproj&morphic: piR=>dualpiR", hyp([&] { return f.pr(); }), [&] { return f.dpr(); }),
            implies("qproj&morphic: dualpiR=>piR", hyp([&] { return f.dpr(); }), [&] { return f.pr(); })};
}

std::vector<Clause> c2_8(Facts& f) {
    auto hyp = [&](const Pred& side) {
        return [&f, side] { return all_of({[&] { return f.c2(); }, [&] { return f.d2(); }, side}); };
    };
    return {implies("C2&D2: dualpiR=>piR", hyp([&] { return f.dpr(); }), [&] { return f.pr(); }),
            implies("C2&D2: piR=>dualpiR", hyp([&] { return f.pr(); }), [&] { return f.dpr(); })};
}

// Summands found by complement search, independent of the idempotent images.
std::vector<Clause> l2_9(Facts& f) {
    auto split = [&] {
        const auto& lat = f.a().lattice();
        for (Elem g = 0; g < f.end().size(); ++g) {
            const auto& chain = f.a().image_chain(g);
            bool found = false;
            for (std::uint32_t n = 1; n <= chain.stabilization && !found; ++n)
                found = find_complement(f.m(), chain.chain[n - 1], lat).summand;
            if (!found) return Check::fail("f=" + std::to_string(g));
        }
        return Check::pass();
    };
    return {implies("(1)=>(2)", [&] { return f.dpr(); }, split),
            implies("(2)=>(1)", split, [&] { return f.dpr(); })};
}

std::vector<Clause> p2_11(Facts& f) {
    return {implies("dualpiR=>summands dualpiR", [&] { return f.dpr(); },
                    [&] { return summands_dual_pi_rickart(f, ""); })};
}

std::vector<Clause> l2_16(Facts& f) {
    // Every (f, n, e) with e central and Im f^n = eM.
    const auto& s = f.s();
    std::vector<Elem> central;
    for (Elem e : f.a().idempotents()) {
        bool c = true;
        for (Elem g = 0; g < s.order() && c; ++g) c = s.mul(g, e) == s.mul(e, g);
        if (c) central.push_back(e);
    }
    auto hyp = [&] { return from_bool(!central.empty(), "no central idempotent"); };
    auto concl = [&] {
        for (Elem g = 0; g < f.end().size(); ++g) {
            const auto& chain = f.a().image_chain(g);
            for (std::uint32_t n = 1; n <= chain.stabilization; ++n)
                for (Elem e : central)
                    if (f.a().image_power(g, n) == f.end().image(e) && f.a().image_power(g, n + 1) != f.end().image(e))
                        return Check::fail("f=" + std::to_string(g) + ",n=" + std::to_string(n) + ",e=" +
                                           std::to_string(e));
        }
        return Check::pass();
    };
    return {implies("central e: Im f^n=eM => Im f^(n+1)=eM", hyp, concl)};
}

// M = eM + (1-e)M for each idempotent e outside {0, 1}, taken once per pair.
std::vector<Clause> p2_17(Facts& f) {
    std::vector<Clause> out;
    const auto& s = f.s();
    for (Elem e : f.a().idempotents()) {
        Elem c = s.sub(s.one(), e);
        if (e == s.zero() || e == s.one() || c < e) continue;
        auto label = "e=" + std::to_string(e);
        auto hyp = [&f, e, c] {
            auto m1 = submodule_as_module(f.m(), f.end().image(e), f.caps()).module;
            auto m2 = submodule_as_module(f.m(), f.end().image(c), f.caps()).module;
            if (hom_set(m1, m2, f.caps()).size() != 1 || hom_set(m2, m1, f.caps()).size() != 1)
                return Check::fail("hom");
            for (const auto* mi : {&m1, &m2}) {
                ModuleAnalysis ai(*mi, f.caps());
                if (!is_abelian_module(ai).holds || !is_dual_pi_rickart(ai).holds) return Check::fail("factor");
            }
            return Check::pass();
        };
        out.push_back(implies(label, hyp, [&] { return f.dpr(); }));
    }
    if (out.empty()) out.push_back({"no decomposition", ClauseStatus::NotMet, {}});
    return out;
}

std::vector<Clause> c2_19(Facts& f) {
    return {implies("dualpiR&abelian(S)=>sCoH",
                    [&] { return all_of({[&] { return f.dpr(); }, [&] { return from_bool(f.sp().abelian, "S"); }}); },
                    [&] { return f.strongly_co_hopfian(); })};
}

std::vector<Clause> c2_21(Facts& f) {
    return {implies("Fitting=>dualpiR", [&] { return f.fitting(); }, [&] { return f.dpr(); })};
}

// Finite rings are Artinian; finite modules are finitely generated.
std::vector<Clause> p2_22(Facts& f) { return {implies("finite R=>dualpiR", always(), [&] { return f.dpr(); })}; }

std::vector<Clause> l3_1(Facts& f) {
    return {implies("dualpiR=>glpp(S)", [&] { return f.dpr(); }, [&] { return f.s_gen_left_pp(); })};
}

std::vector<Clause> c3_3(Facts& f) {
    auto concl = [&] {
        for (Elem g = 0; g < f.end().size(); ++g) {
            bool found = false;
            auto bound = power_repetition_bound(f.s(), g);
            for (std::uint32_t n = 1; n <= bound && !found; ++n) found = f.left_ann_idempotent(f.power(g, n)).has_value();
            if (!found) return Check::fail("f=" + std::to_string(g));
        }
        return Check::pass();
    };
    return {implies("dualpiR=>l_S(f^n)=Se", [&] { return f.dpr(); }, concl)};
}

std::vector<Clause> t3_4(Facts& f) {
    // Part (1): whenever l_S(f^n) = Se, the common kernel of the maps killing
    // Im f^n is (1-e)M.
    auto part1 = [&] {
        const auto& s = f.s();
        ElementSet seen(s.order());
        for (Elem g = 0; g < f.end().size(); ++g) {
            auto bound = power_repetition_bound(s, g);
            for (std::uint32_t n = 1; n <= bound; ++n) {
                Elem gn = f.power(g, n);
                if (seen.contains(gn)) continue;
                seen.insert(gn);
                auto l = left_annihilator_of(f.end(), gn);
                auto it = f.idempotent_ideals().find(l);
                if (it == f.idempotent_ideals().end()) continue;
                auto common = right_annihilator(f.end(), l);
                for (Elem e : it->second)
                    if (common != f.end().image(s.sub(s.one(), e)))
                        return Check::fail("f=" + std::to_string(g) + ",n=" + std::to_string(n) + ",e=" +
                                           std::to_string(e));
            }
        }
        return Check::pass();
    };
    return {implies("(1)", always(), part1),
            implies("(2) selfcog&glpp(S)=>dualpiR",
                    [&] { return all_of({[&] { return f.self_cogenerator(); }, [&] { return f.s_gen_left_pp(); }}); },
                    [&] { return f.dpr(); })};
}

std::vector<Clause> l3_6(Facts& f) {
    return {implies("piregular(S)=>dualpiR", [&] { return f.s_pi_regular(); }, [&] { return f.dpr(); })};
}

std::vector<Clause> c3_7(Facts& f) {
    return {implies("spiregular(S)=>dualpiR", [&] { return f.s_strongly_pi_regular(); }, [&] { return f.dpr(); })};
}

// One n per f making both Ker f^n and Im f^n summands.
std::vector<Clause> l3_9(Facts& f) {
    auto both = [&] {
        for (Elem g = 0; g < f.end().size(); ++g) {
            auto bound = std::max(f.a().image_chain(g).stabilization, f.a().kernel_chain(g).stabilization);
            bool found = false;
            for (std::uint32_t n = 1; n <= bound && !found; ++n)
                found = f.a().summand_idempotent(f.a().image_power(g, n)) &&
                        f.a().summand_idempotent(f.a().kernel_power(g, n));
            if (!found) return Check::fail("f=" + std::to_string(g));
        }
        return Check::pass();
    };
    return {implies("=>", [&] { return f.s_pi_regular(); }, both),
            implies("<=", both, [&] { return f.s_pi_regular(); }, true)};
}

std::vector<Clause> t3_12(Facts& f) {
    auto hyp = [&](const Pred& side) {
        return [&f, side] { return all_of({[&] { return f.d2(); }, side}); };
    };
    return {implies("D2: dualpiR=>piregular(S)", hyp([&] { return f.dpr(); }), [&] { return f.s_pi_regular(); }),
            implies("D2: piregular(S)=>dualpiR", hyp([&] { return f.s_pi_regular(); }), [&] { return f.dpr(); })};
}

Pred qp_and_dpr(Facts& f) {
    return [&f] { return all_of({[&] { return f.quasi_projective(); }, [&] { return f.dpr(); }}); };
}

std::vector<Clause> c3_14(Facts& f) {
    return {implies("qproj&dualpiR=>piregular(S)", qp_and_dpr(f), [&] { return f.s_pi_regular(); })};
}

Check quotients_dual_pi_rickart(const Facts& f, const std::function<bool(const Submodule&)>& select) {
    for (const auto& n : f.a().lattice()) {
        if (!select(n)) continue;
        if (!dual_pi_rickart(quotient_module(f.m(), n, f.caps()).module, f.caps()))
            return Check::fail("N=" + set_string(n));
    }
    return Check::pass();
}

bool fully_invariant(const Facts& f, const Submodule& n) {
    for (Elem g = 0; g < f.end().size(); ++g)
        for (Elem x : n.elements())
            if (!n.contains(f.end().apply(g, x))) return false;
    return true;
}

std::vector<Clause> c3_15(Facts& f) {
    return {implies("qproj&dualpiR=>M/N dualpiR (N fully invariant)", qp_and_dpr(f), [&] {
        return quotients_dual_pi_rickart(f, [&](const Submodule& n) { return fully_invariant(f, n); });
    })};
}

std::vector<Clause> c3_16(Facts& f) {
    return {implies("qproj&duo&dualpiR=>M/N dualpiR",
                    [&] { return all_of({[&] { return f.duo(); }, qp_and_dpr(f)}); },
                    [&] { return quotients_dual_pi_rickart(f, [](const Submodule&) { return true; }); })};
}

std::vector<Clause> c3_17(Facts& f) {
    auto concl = [&] {
        const auto& lat = f.a().lattice();
        auto rad = radical(f.m(), lat);
        auto soc = socle(f.m(), lat);
        if (!dual_pi_rickart(quotient_module(f.m(), rad, f.caps()).module, f.caps())) return Check::fail("M/Rad");
        if (!dual_pi_rickart(quotient_module(f.m(), soc, f.caps()).module, f.caps())) return Check::fail("M/Soc");
        return Check::pass();
    };
    return {implies("qproj&dualpiR=>M/Rad,M/Soc dualpiR", qp_and_dpr(f), concl)};
}

std::vector<Clause> p3_18(Facts& f) {
    auto concl = [&] {
        for (const auto& s : small_image_endos(f.a()))
            if (!s.nilpotency) return Check::fail("f=" + std::to_string(s.f));
        return Check::pass();
    };
    return {implies("dualpiR=>small-image endos nilpotent", [&] { return f.dpr(); }, concl)};
}

// f^n M = r_M(l_S(f^n M)).
bool double_annihilator(const Facts& f, Elem fn) {
    auto im = f.end().image(fn);
    return right_annihilator(f.end(), left_annihilator(f.end(), im)) == im;
}

std::vector<Clause> t3_19(Facts& f) {
    auto forward = [&] {
        if (auto r = f.s_gen_left_pp(); !r.ok) return r;
        const auto& v = f.dpr_verdict();
        for (Elem g = 0; g < f.end().size(); ++g)
            if (!double_annihilator(f, f.power(g, v.witnesses[g]->n))) return Check::fail("f=" + std::to_string(g));
        return Check::pass();
    };
    auto condition2 = [&] {
        if (auto r = f.s_gen_left_pp(); !r.ok) return r;
        for (Elem g = 0; g < f.end().size(); ++g) {
            bool found = false;
            auto bound = power_repetition_bound(f.s(), g);
            for (std::uint32_t n = 1; n <= bound && !found; ++n) {
                Elem gn = f.power(g, n);
                found = f.left_ann_idempotent(gn) && double_annihilator(f, gn);
            }
            if (!found) return Check::fail("f=" + std::to_string(g));
        }
        return Check::pass();
    };
    return {implies("(1)=>(2)", [&] { return f.dpr(); }, forward),
            implies("(2)=>(1)", condition2, [&] { return f.dpr(); })};
}

std::vector<Clause> c3_19(Facts& f) {
    auto cond = [&] {
        for (Elem g = 0; g < f.end().size(); ++g) {
            bool found = false;
            const auto& chain = f.a().image_chain(g);
            for (std::uint32_t n = 1; n <= chain.stabilization && !found; ++n) {
                Elem gn = f.power(g, n);
                auto im = f.end().image(gn);
                auto closure = right_annihilator(f.end(), left_annihilator(f.end(), im));
                found = closure == im && f.a().summand_idempotent(closure).has_value();
            }
            if (!found) return Check::fail("f=" + std::to_string(g));
        }
        return Check::pass();
    };
    return {implies("=>", [&] { return f.dpr(); }, cond), implies("<=", cond, [&] { return f.dpr(); })};
}

std::vector<Clause> t3_20(Facts& f) {
    auto concl = [&] {
        auto zl = singular_ideal_left(f.s());
        if (!ideal_is_nil_in_radical(f.s(), zl, f.sp().jacobson_radical)) return Check::fail("Z=" + set_string(zl));
        return Check::pass();
    };
    return {implies("dualpiR=>Z_l(S) nil, in J(S)", [&] { return f.dpr(); }, concl)};
}

Check epi_or_nilpotent(const Facts& f) {
    for (Elem g = 0; g < f.end().size(); ++g)
        if (!f.is_epi(g) && !nilpotency_index(f.s(), g)) return Check::fail("f=" + std::to_string(g));
    return Check::pass();
}

std::vector<Clause> p3_21(Facts& f) {
    auto lhs = [&] { return all_of({[&] { return f.indecomposable(); }, [&] { return f.dpr(); }}); };
    auto rhs = [&] { return epi_or_nilpotent(f); };
    return {implies("=>", lhs, rhs), implies("<=", rhs, lhs)};
}

std::vector<Clause> t3_22(Facts& f) {
    auto one = [&] {
        if (!f.sp().local) return Check::fail("not local");
        if (!f.sp().radical_is_nil) return Check::fail("J not nil");
        return Check::pass();
    };
    auto two = [&] { return all_of({[&] { return f.indecomposable(); }, [&] { return f.dpr(); }}); };
    return {implies("(1)=>(2)", one, two),
            implies("morphic: (2)=>(1)", [&] { return all_of({[&] { return f.morphic(); }, two}); }, one)};
}

// --- ring entries --------------------------------------------------------------

Pred r_pireg(Context& c) {
    return [&c] { return from_bool(c.r_pi_regular(), "R not pi-regular"); };
}

std::vector<Clause> p2_2(Context& c) {
    auto dpr = [&] { return c.free(1).dpr(); };
    return {implies("=>", dpr, r_pireg(c)), implies("<=", r_pireg(c), dpr)};
}

// eR for each idempotent e of R, as modules.
Check principal_summands_dual_pi_rickart(Context& c) {
    auto& reg = c.free(1);
    std::set<Submodule> seen;
    for (Elem e : ring_idempotents(c.r())) {
        auto er = cyclic_submodule(reg.m(), e);
        if (!seen.insert(er).second) continue;
        if (!dual_pi_rickart(submodule_as_module(reg.m(), er, c.caps()).module, c.caps()))
            return Check::fail("e=" + std::to_string(e));
    }
    return Check::pass();
}

std::vector<Clause> c2_12(Context& c) {
    return {implies("piregular(R)=>eR dualpiR", r_pireg(c), [&] { return principal_summands_dual_pi_rickart(c); })};
}

std::vector<Elem> central_idempotents(const FiniteRing& r) {
    std::vector<Elem> out;
    for (Elem e : ring_idempotents(r)) {
        bool central = true;
        for (Elem a = 0; a < r.order() && central; ++a) central = r.mul(a, e) == r.mul(e, a);
        if (central) out.push_back(e);
    }
    return out;
}

// R = eR x (1-e)R for central e; each factor is the corner ring eRe.
std::vector<Clause> c2_13(Context& c) {
    std::vector<Clause> out;
    const auto& r = c.r();
    for (Elem e : central_idempotents(r)) {
        Elem f = r.sub(r.one(), e);
        if (e == r.zero() || e == r.one() || f < e) continue;
        out.push_back(implies("e=" + std::to_string(e), r_pireg(c), [&, e, f] {
            for (Elem x : {e, f})
                if (!is_pi_regular(corner_ring(r, x, c.caps()).value).holds)
                    return Check::fail("factor e=" + std::to_string(x));
            return Check::pass();
        }));
    }
    if (out.empty()) out.push_back({"indecomposable ring", ClauseStatus::NotMet, {}});
    return out;
}

std::vector<Clause> t2_14(Context& c) {
    auto cyclic = [&] { return principal_summands_dual_pi_rickart(c); };
    return {implies("=>", r_pireg(c), cyclic), implies("<=", cyclic, r_pireg(c))};
}

// Free instances R^1, R^2 and their summands stand in for the free and
// projective module classes.
Check free_dual_pi_rickart(Context& c) {
    for (std::size_t n : {1u, 2u})
        if (auto r = c.free(n).dpr(); !r.ok) return Check::fail("R^" + std::to_string(n) + ":" + r.witness);
    return Check::pass();
}

Check projective_dual_pi_rickart(Context& c) {
    for (std::size_t n : {1u, 2u})
        if (auto r = summands_dual_pi_rickart(c.free(n), "R^" + std::to_string(n) + ":"); !r.ok) return r;
    return Check::pass();
}

std::vector<Clause> t2_15(Context& c) {
    auto free = [&] { return free_dual_pi_rickart(c); };
    auto proj = [&] { return projective_dual_pi_rickart(c); };
    return {implies("(1)=>(2)", free, proj), implies("(2)=>(1)", proj, free)};
}

std::vector<Clause> p2_23(Context& c) {
    std::vector<Clause> out;
    out.push_back(implies("n=1", [&] { return from_bool(is_strongly_pi_regular(c.r()).holds, "R"); },
                          [&] { return c.free(1).dpr(); }));
    out.push_back(implies("n=2", [&] { return from_bool(is_strongly_pi_regular(c.matrix2()).holds, "M2(R)"); },
                          [&] { return c.free(2).dpr(); }));
    return out;
}

std::vector<Clause> c3_2(Context& c) {
    auto concl = [&] {
        for (Elem e : ring_idempotents(c.r()))
            if (!is_generalized_left_pp(corner_ring(c.r(), e, c.caps()).value).holds)
                return Check::fail("e=" + std::to_string(e));
        return Check::pass();
    };
    return {implies("piregular(R)=>glpp(eRe)", r_pireg(c), concl)};
}

std::vector<Clause> l3_10(Context& c) {
    auto corners = [&] {
        for (Elem e : ring_idempotents(c.r()))
            if (!is_pi_regular(corner_ring(c.r(), e, c.caps()).value).holds)
                return Check::fail("e=" + std::to_string(e));
        return Check::pass();
    };
    auto m2 = [&] { return from_bool(is_pi_regular(c.matrix2()).holds, "M2(R)"); };
    auto commutative = [&] { return from_bool(c.r().is_commutative(), "R"); };
    return {implies("(1) eRe", r_pireg(c), corners),
            implies("(2) M2(R)=>R", m2, r_pireg(c)),
            implies("(3) commutative: R=>M2(R)", [&] { return all_of({commutative, r_pireg(c)}); }, m2),
            implies("(3) commutative: M2(R)=>R", [&] { return all_of({commutative, m2}); }, r_pireg(c))};
}

std::vector<Clause> p3_11(Context& c) {
    return {implies("commutative&piregular(R)=>eR^n dualpiR",
                    [&] { return all_of({[&] { return from_bool(c.r().is_commutative(), "R"); }, r_pireg(c)}); },
                    [&] { return projective_dual_pi_rickart(c); })};
}

std::vector<Clause> c3_13(Context& c) {
    auto hyp = [&](const Pred& side) {
        return [&c, side] {
            return all_of({[&] { return from_bool(c.r().is_commutative(), "R"); }, [&] { return c.free(1).d2(); }, side});
        };
    };
    auto proj = [&] { return projective_dual_pi_rickart(c); };
    return {implies("(1)=>(2)", hyp(r_pireg(c)), proj), implies("(2)=>(1)", hyp(proj), r_pireg(c))};
}

struct Entry {
    TheoremInfo info;
    ModuleCheck module_check;
    RingCheck ring_check;
};

const std::vector<Entry>& entries() {
    auto m = [](std::string id, std::string statement, ModuleCheck fn) {
        return Entry{{std::move(id), TheoremTarget::Module, std::move(statement)}, std::move(fn), {}};
    };
    auto r = [](std::string id, std::string statement, RingCheck fn) {
        return Entry{{std::move(id), TheoremTarget::Ring, std::move(statement)}, {}, std::move(fn)};
    };
    static const std::vector<Entry> table{
        r("P2.2", "R_R dual pi-Rickart <=> R pi-regular", p2_2),
        m("P2.4", "dual Rickart => dual pi-Rickart; converse when S is reduced", p2_4),
        m("L2.5", "dual pi-Rickart with S a domain <=> every nonzero f is onto", l2_5),
        m("T2.7.1", "D2 & dual pi-Rickart => pi-Rickart", t2_7_1),
        m("T2.7.2", "C2 & pi-Rickart => dual pi-Rickart", t2_7_2),
        m("T2.7.3", "quasi-projective morphic: pi-Rickart <=> dual pi-Rickart", t2_7_3),
        m("C2.8", "C2 & D2: dual pi-Rickart <=> pi-Rickart", c2_8),
        m("L2.9", "dual pi-Rickart <=> some Im f^n splits off, by complement search", l2_9),
        m("P2.11", "summands of a dual pi-Rickart module are dual pi-Rickart", p2_11),
        r("C2.12", "R pi-regular => eR dual pi-Rickart", c2_12),
        r("C2.13", "R1 x R2 pi-regular => factors pi-regular", c2_13),
        r("T2.14", "R pi-regular <=> cyclic projectives dual pi-Rickart", t2_14),
        r("T2.15", "free <=> projective dual pi-Rickart, on R^1 and R^2 only", t2_15),
        m("L2.16", "central e with Im f^n = eM => Im f^(n+1) = eM", l2_16),
        m("P2.17", "abelian dual pi-Rickart M1, M2 with zero cross Homs => M1 + M2 dual pi-Rickart", p2_17),
        m("C2.19", "dual pi-Rickart & S abelian => strongly co-Hopfian", c2_19),
        m("C2.21", "Fitting => dual pi-Rickart", c2_21),
        m("P2.22", "modules over finite rings are dual pi-Rickart", p2_22),
        r("P2.23", "M_n(R) strongly pi-regular => R^n dual pi-Rickart, n <= 2", p2_23),
        m("L3.1", "dual pi-Rickart => S generalized left pp", l3_1),
        r("C3.2", "R pi-regular => eRe generalized left pp", c3_2),
        m("C3.3", "dual pi-Rickart => l_S(f^n) = Se for some n", c3_3),
        m("T3.4", "(1) common kernel is (1-e)M; (2) self-cogenerator & glpp(S) => dual pi-Rickart", t3_4),
        m("L3.6", "S pi-regular => dual pi-Rickart", l3_6),
        m("C3.7", "S strongly pi-regular => dual pi-Rickart", c3_7),
        m("L3.9", "S pi-regular <=> one n makes Ker f^n and Im f^n summands", l3_9),
        r("L3.10", "corner and 2x2 matrix closure of pi-regularity", l3_10),
        r("P3.11", "commutative pi-regular R => eR^n dual pi-Rickart, n <= 2", p3_11),
        m("T3.12", "D2: dual pi-Rickart <=> S pi-regular", t3_12),
        r("C3.13", "commutative R with D2: pi-regular <=> eR^n dual pi-Rickart, n <= 2", c3_13),
        m("C3.14", "quasi-projective dual pi-Rickart => S pi-regular", c3_14),
        m("C3.15", "quasi-projective dual pi-Rickart => M/N dual pi-Rickart, N fully invariant", c3_15),
        m("C3.16", "quasi-projective duo dual pi-Rickart => every M/N dual pi-Rickart", c3_16),
        m("C3.17", "quasi-projective dual pi-Rickart => M/Rad M and M/Soc M dual pi-Rickart", c3_17),
        m("P3.18", "dual pi-Rickart => small-image endomorphisms nilpotent", p3_18),
        m("T3.19", "dual pi-Rickart <=> glpp(S) & f^nM = r_M(l_S(f^nM))", t3_19),
        m("C3.19", "dual pi-Rickart <=> f^nM = r_M(l_S(f^nM)) is a summand", c3_19),
        m("T3.20", "dual pi-Rickart => Z_l(S) nil and inside J(S)", t3_20),
        m("P3.21", "indecomposable dual pi-Rickart <=> every f onto or nilpotent", p3_21),
        m("T3.22", "S local with nil J => indecomposable dual pi-Rickart; converse if morphic", t3_22),
    };
    return table;
}

const Entry& entry(const std::string& id) {
    for (const auto& e : entries())
        if (e.info.id == id) return e;
    throw Error(ErrorKind::UnknownTheorem, "unknown theorem id '" + id + "'", id);
}

TheoremVerdict aggregate(const std::string& id, const std::string& instance, const std::vector<Clause>& clauses) {
    TheoremVerdict v{id, instance, VerdictStatus::HypothesisNotMet, {}};
    auto first = [&](ClauseStatus s) -> const Clause* {
        for (const auto& c : clauses)
            if (c.status == s) return &c;
        return nullptr;
    };
    if (const auto* c = first(ClauseStatus::Violation)) {
        v.status = VerdictStatus::Violation;
        v.witness = "dir=" + c->label + ";" + c->witness;
    } else if (const auto* c = first(ClauseStatus::ReadingFlag)) {
        v.status = VerdictStatus::ReadingFlag;
        v.witness = "dir=" + c->label + ";" + c->witness;
    } else if (first(ClauseStatus::Holds)) {
        v.status = VerdictStatus::Holds;
        if (const auto* s = first(ClauseStatus::Skipped)) v.witness = "partial;skipped=" + s->label;
    } else if (const auto* s = first(ClauseStatus::Skipped)) {
        v.status = VerdictStatus::Skipped;
        v.witness = s->witness;
    }
    return v;
}

TheoremVerdict run_entry(const Entry& e, const Instance& inst, Context& ctx) {
    bool module_entry = e.info.target == TheoremTarget::Module;
    if (module_entry != inst.is_module())
        return {e.info.id, inst.name, VerdictStatus::Skipped, "not applicable"};
    try {
        auto clauses = module_entry ? e.module_check(ctx.module()) : e.ring_check(ctx);
        return aggregate(e.info.id, inst.name, clauses);
    } catch (const Error& err) {
        if (err.kind() != ErrorKind::SizeCapExceeded) throw;
        return {e.info.id, inst.name, VerdictStatus::Skipped, "cap"};
    }
}

}  // namespace

const std::vector<TheoremInfo>& theorem_registry() {
    static const std::vector<TheoremInfo> infos = [] {
        std::vector<TheoremInfo> out;
        for (const auto& e : entries()) out.push_back(e.info);
        return out;
    }();
    return infos;
}

const TheoremInfo& theorem_info(const std::string& id) { return entry(id).info; }

TheoremVerdict verify(const std::string& id, const Instance& inst, const Caps& caps) {
    const auto& e = entry(id);
    Context ctx(inst, caps);
    return run_entry(e, inst, ctx);
}

std::vector<TheoremVerdict> verify_all(const Instance& inst, const Caps& caps, const std::vector<std::string>& ids) {
    for (const auto& id : ids) entry(id);
    Context ctx(inst, caps);
    std::vector<TheoremVerdict> out;
    for (const auto& e : entries()) {
        bool selected = ids.empty() ? (e.info.target == TheoremTarget::Module) == inst.is_module()
                                    : std::find(ids.begin(), ids.end(), e.info.id) != ids.end();
        if (selected) out.push_back(run_entry(e, inst, ctx));
    }
    return out;
}

CorpusSummary run_corpus(const std::vector<Instance>& instances, const Caps& caps, unsigned jobs,
                         const std::vector<std::string>& ids) {
    for (const auto& id : ids) entry(id);
    std::vector<std::size_t> order(instances.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return instances[a].name < instances[b].name; });

    std::vector<std::vector<TheoremVerdict>> results(instances.size());
    std::vector<std::exception_ptr> errors(instances.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < instances.size();) {
            try {
                results[i] = verify_all(instances[i], caps, ids);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, instances.size()))));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    CorpusSummary s;
    std::set<std::string> fired;
    for (std::size_t i : order) {
        for (auto& v : results[i]) {
            switch (v.status) {
                case VerdictStatus::Holds:
                    ++s.holds;
                    fired.insert(v.theorem);
                    break;
                case VerdictStatus::HypothesisNotMet: ++s.not_met; break;
                case VerdictStatus::Violation:
                    ++s.violations;
                    fired.insert(v.theorem);
                    break;
                case VerdictStatus::Skipped: ++s.skipped; break;
                case VerdictStatus::ReadingFlag:
                    ++s.reading_flags;
                    fired.insert(v.theorem);
                    break;
            }
            s.verdicts.push_back(std::move(v));
        }
    }
    for (const auto& info : theorem_registry()) {
        if (!ids.empty() && std::find(ids.begin(), ids.end(), info.id) == ids.end()) continue;
        if (fired.count(info.id))
            ++s.entries_fired;
        else
            s.never_fired.push_back(info.id);
    }
    return s;
}

std::string format_verdict(const TheoremVerdict& v) {
    return v.instance + "\t" + v.theorem + "\t" + to_string(v.status) + "\t" + (v.witness.empty() ? "-" : v.witness);
}

std::string format_summary(const CorpusSummary& s) {
    std::ostringstream out;
    out << "# summary\n";
    out << "# holds=" << s.holds << " hypothesis_not_met=" << s.not_met << " violation=" << s.violations
        << " skipped=" << s.skipped << " reading_flag=" << s.reading_flags << "\n";
    out << "# entries_with_hypothesis_met=" << s.entries_fired << "\n";
    out << "# never_fired=";
    if (s.never_fired.empty()) out << "-";
    for (std::size_t i = 0; i < s.never_fired.size(); ++i) out << (i ? "," : "") << s.never_fired[i];
    out << "\n";
    return out.str();
}

}  // namespace pirick
