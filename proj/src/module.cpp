#include "pirick/module.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <sstream>
#include <unordered_set>

#include "pirick/error.hpp"

namespace pirick {

namespace {

constexpr std::size_t kFullModuleCheck = std::size_t{1} << 22;
constexpr Elem kUnset = ~Elem{0};

void require_order(std::size_t order, const Caps& caps, const char* what) {
    if (order > caps.ring || order > Caps::kMaxOrder)
        throw Error(ErrorKind::SizeCapExceeded, std::string(what) + " of order " + std::to_string(order) +
                                                    " exceeds ring cap " + std::to_string(caps.ring));
}

std::string triple_text(Elem m, Elem r, Elem s) {
    std::ostringstream os;
    os << "(m=" << m << ",r=" << r << ",s=" << s << ")";
    return os.str();
}

// Module on a subset of an ambient carrier closed under addition and the
// action; act_basis(x, i) is x times ring basis element i.
Relabeled<FiniteModule> module_from_operations(const RingPtr& ring, std::size_t ambient,
                                               std::span<const Elem> members, Elem zero,
                                               const std::function<Elem(Elem, Elem)>& add,
                                               const std::function<Elem(Elem, std::size_t)>& act_basis,
                                               const Caps& caps) {
    require_order(members.size(), caps, "module");
    auto dec = decompose_abelian(ambient, members, zero, add);
    std::vector<Elem> old_to_new(ambient, 0);
    for (Elem i = 0; i < dec.new_to_old.size(); ++i) old_to_new[dec.new_to_old[i]] = i;
    auto group = FinAbGroup::make(dec.factors);
    const std::size_t l = dec.generators.size();
    const std::size_t k = ring->rank();
    std::vector<Elem> constants(k * l);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < l; ++j) constants[i * l + j] = old_to_new[act_basis(dec.generators[j], i)];
    auto module = FiniteModule::make(ring, std::move(group), std::move(constants), caps);
    return {std::move(module), std::move(dec.new_to_old)};
}

}  // namespace

FiniteModule FiniteModule::make(RingPtr ring, FinAbGroup group, std::vector<Elem> constants,
                                const Caps& caps) {
    if (!ring) throw Error(ErrorKind::UnknownRing, "module needs a ring");
    const std::size_t n = group.order();
    const std::size_t l = group.rank();
    const std::size_t k = ring->rank();
    require_order(n, caps, "module");
    if (constants.size() != k * l)
        throw Error(ErrorKind::AxiomViolation, "need one action constant per (ring basis, module basis) pair");
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < l; ++j) {
            Elem c = constants[i * l + j];
            if (c >= n) throw Error(ErrorKind::AxiomViolation, "action constant out of range");
            if (group.scale(c, group.factors()[j]) != 0 || group.scale(c, ring->group().factors()[i]) != 0) {
                std::ostringstream os;
                os << "m" << j + 1 << "*e" << i + 1;
                throw Error(ErrorKind::AxiomViolation,
                            "action constant not annihilated by the orders of its factors", os.str());
            }
        }
    }

    FiniteModule m;
    m.ring_ = std::move(ring);
    m.group_ = std::move(group);
    m.constants_ = std::move(constants);
    const auto& r = *m.ring_;
    const auto& g = m.group_;
    const std::size_t rn = r.order();

    auto table = std::make_shared<std::vector<std::uint16_t>>(n * rn);
    std::vector<Elem> col(l);
    std::vector<Elem> by_m(n);
    for (Elem s = 0; s < rn; ++s) {
        // col[j] = m_j * s
        for (std::size_t j = 0; j < l; ++j) {
            Elem acc = 0;
            for (std::size_t i = 0; i < k; ++i)
                acc = g.add(acc, g.scale(m.constants_[i * l + j], r.group().coord(s, i)));
            col[j] = acc;
        }
        by_m[0] = 0;
        for (Elem x = 1; x < n; ++x) {
            std::size_t last = l;
            while (last-- > 0)
                if (g.coord(x, last) != 0) break;
            by_m[x] = g.add(by_m[x - g.basis(last)], col[last]);
        }
        for (Elem x = 0; x < n; ++x) (*table)[x * rn + s] = static_cast<std::uint16_t>(by_m[x]);
    }
    m.act_ = std::move(table);

    for (Elem x = 0; x < n; ++x)
        if (m.act(x, r.one()) != x)
            throw Error(ErrorKind::AxiomViolation, "m*1 != m", std::to_string(x));

    auto check = [&](Elem x, Elem a, Elem b) {
        if (m.act(m.act(x, a), b) != m.act(x, r.mul(a, b)))
            throw Error(ErrorKind::AxiomViolation, "(m r) s != m (r s)", triple_text(x, a, b));
    };
    if (n * rn * rn <= kFullModuleCheck) {
        for (Elem x = 0; x < n; ++x)
            for (Elem a = 0; a < rn; ++a)
                for (Elem b = 0; b < rn; ++b) check(x, a, b);
    } else {
        for (std::size_t j = 0; j < l; ++j)
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t i2 = 0; i2 < k; ++i2) check(g.basis(j), r.basis(i), r.basis(i2));
        std::mt19937_64 rng(0x5eed);
        std::uniform_int_distribution<Elem> pm(0, static_cast<Elem>(n - 1));
        std::uniform_int_distribution<Elem> pr(0, static_cast<Elem>(rn - 1));
        for (int t = 0; t < 10000; ++t) check(pm(rng), pr(rng), pr(rng));
    }
    return m;
}

bool same_ring(const FiniteRing& a, const FiniteRing& b) { return &a == &b || a == b; }

bool is_homomorphism(const FiniteModule& from, const FiniteModule& to, const ModuleMap& f) {
    if (f.table.size() != from.order()) return false;
    for (Elem x : f.table)
        if (x >= to.order()) return false;
    for (Elem a = 0; a < from.order(); ++a) {
        for (Elem b = 0; b < from.order(); ++b)
            if (f(from.add(a, b)) != to.add(f(a), f(b))) return false;
        for (Elem r = 0; r < from.ring().order(); ++r)
            if (f(from.act(a, r)) != to.act(f(a), r)) return false;
    }
    return true;
}

// --- builders ---------------------------------------------------------------

FiniteModule ring_as_module(const RingPtr& r) {
    const std::size_t k = r->rank();
    std::vector<Elem> constants(k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) constants[i * k + j] = r->constant(j, i);
    auto m = FiniteModule::make(r, r->group(), std::move(constants));
    m.set_name(r->name() + "_reg");
    return m;
}

FiniteModule free_module(const RingPtr& r, std::size_t rank, const Caps& caps) {
    if (rank == 0) throw Error(ErrorKind::SizeCapExceeded, "free module rank must be >= 1");
    std::size_t order = 1;
    for (std::size_t b = 0; b < rank; ++b) {
        order *= r->order();
        require_order(order, caps, "free module");
    }
    const std::size_t k = r->rank();
    std::vector<std::uint32_t> factors;
    for (std::size_t b = 0; b < rank; ++b)
        factors.insert(factors.end(), r->group().factors().begin(), r->group().factors().end());
    auto group = FinAbGroup::make(factors);
    const std::size_t l = k * rank;
    std::vector<Elem> constants(k * l, 0);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t b = 0; b < rank; ++b) {
            for (std::size_t j = 0; j < k; ++j) {
                std::vector<std::uint32_t> coords(l, 0);
                auto c = r->group().coords(r->constant(j, i));
                std::copy(c.begin(), c.end(), coords.begin() + static_cast<std::ptrdiff_t>(b * k));
                constants[i * l + b * k + j] = group.from_coords(coords);
            }
        }
    }
    auto m = FiniteModule::make(r, std::move(group), std::move(constants), caps);
    m.set_name(r->name() + "_free" + std::to_string(rank));
    return m;
}

DirectSum direct_sum(const FiniteModule& a, const FiniteModule& b, const Caps& caps) {
    if (!same_ring(a.ring(), b.ring()))
        throw Error(ErrorKind::RingMismatch, "direct sum needs modules over the same ring");
    require_order(a.order() * b.order(), caps, "direct sum");
    auto factors = a.group().factors();
    factors.insert(factors.end(), b.group().factors().begin(), b.group().factors().end());
    auto group = FinAbGroup::make(factors);
    const std::size_t la = a.rank(), lb = b.rank(), l = la + lb, k = a.ring().rank();

    auto pair_elem = [&](Elem x, Elem y) {
        auto cx = a.group().coords(x);
        auto cy = b.group().coords(y);
        cx.insert(cx.end(), cy.begin(), cy.end());
        return group.from_coords(cx);
    };
    std::vector<Elem> constants(k * l);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < la; ++j) constants[i * l + j] = pair_elem(a.constant(i, j), 0);
        for (std::size_t j = 0; j < lb; ++j) constants[i * l + la + j] = pair_elem(0, b.constant(i, j));
    }
    DirectSum out{FiniteModule::make(a.ring_ptr(), group, std::move(constants), caps), {}, {}, {}, {}};
    out.module.set_name(a.name() + "_plus_" + b.name());
    for (Elem x = 0; x < a.order(); ++x) out.inject_first.table.push_back(pair_elem(x, 0));
    for (Elem y = 0; y < b.order(); ++y) out.inject_second.table.push_back(pair_elem(0, y));
    out.project_first.table.resize(out.module.order());
    out.project_second.table.resize(out.module.order());
    for (Elem x = 0; x < a.order(); ++x)
        for (Elem y = 0; y < b.order(); ++y) {
            Elem z = pair_elem(x, y);
            out.project_first.table[z] = x;
            out.project_second.table[z] = y;
        }
    return out;
}

Quotient quotient_module(const FiniteModule& m, const Submodule& n, const Caps& caps) {
    const std::size_t size = m.order();
    std::vector<Elem> rep(size, kUnset);
    std::vector<Elem> reps;
    auto sub_members = n.elements();
    for (Elem x = 0; x < size; ++x) {
        if (rep[x] != kUnset) continue;
        reps.push_back(x);
        for (Elem s : sub_members) rep[m.add(x, s)] = x;
    }
    auto built = module_from_operations(
        m.ring_ptr(), size, reps, 0, [&](Elem a, Elem b) { return rep[m.add(a, b)]; },
        [&](Elem x, std::size_t i) { return rep[m.act(x, m.ring().basis(i))]; }, caps);
    std::vector<Elem> old_to_new(size, 0);
    for (Elem i = 0; i < built.to_source.size(); ++i) old_to_new[built.to_source[i]] = i;
    Quotient q{std::move(built.value), {}};
    q.projection.table.resize(size);
    for (Elem x = 0; x < size; ++x) q.projection.table[x] = old_to_new[rep[x]];
    return q;
}

SubmoduleAsModule submodule_as_module(const FiniteModule& m, const Submodule& n, const Caps& caps) {
    auto members = n.elements();
    auto built = module_from_operations(
        m.ring_ptr(), m.order(), members, 0, [&](Elem a, Elem b) { return m.add(a, b); },
        [&](Elem x, std::size_t i) { return m.act(x, m.ring().basis(i)); }, caps);
    return {std::move(built.value), ModuleMap{std::move(built.to_source)}};
}

// --- lattice ----------------------------------------------------------------

Submodule zero_submodule(const FiniteModule& m) {
    Submodule s(m.order());
    s.insert(0);
    return s;
}

Submodule whole_module(const FiniteModule& m) { return ElementSet::full(m.order()); }

Submodule cyclic_submodule(const FiniteModule& m, Elem x) {
    Submodule s(m.order());
    for (Elem r = 0; r < m.ring().order(); ++r) s.insert(m.act(x, r));
    return s;
}

Submodule submodule_sum(const FiniteModule& m, const Submodule& a, const Submodule& b) {
    Submodule s(m.order());
    auto bs = b.elements();
    for (Elem x : a.elements())
        for (Elem y : bs) s.insert(m.add(x, y));
    return s;
}

Submodule submodule_generated(const FiniteModule& m, std::span<const Elem> generators) {
    auto s = zero_submodule(m);
    for (Elem g : generators)
        if (!s.contains(g)) s = submodule_sum(m, s, cyclic_submodule(m, g));
    return s;
}

bool is_submodule(const FiniteModule& m, const ElementSet& s) {
    if (s.universe() != m.order() || !s.contains(0)) return false;
    auto members = s.elements();
    for (Elem a : members) {
        for (Elem b : members)
            if (!s.contains(m.add(a, b))) return false;
        for (Elem r = 0; r < m.ring().order(); ++r)
            if (!s.contains(m.act(a, r))) return false;
    }
    return true;
}

std::vector<Elem> minimal_generators(const FiniteModule& m) {
    std::vector<Elem> gens;
    auto span = zero_submodule(m);
    std::vector<Submodule> cyclic;
    cyclic.reserve(m.order());
    for (Elem x = 0; x < m.order(); ++x) cyclic.push_back(cyclic_submodule(m, x));
    while (span.count() < m.order()) {
        Elem best = 0;
        std::size_t best_size = 0;
        for (Elem x = 0; x < m.order(); ++x) {
            if (span.contains(x)) continue;
            auto size = submodule_sum(m, span, cyclic[x]).count();
            if (size > best_size) {
                best = x;
                best_size = size;
            }
        }
        gens.push_back(best);
        span = submodule_sum(m, span, cyclic[best]);
    }
    return gens;
}

std::vector<Submodule> all_submodules(const FiniteModule& m, const Caps& caps) {
    if (m.order() > caps.lattice)
        throw Error(ErrorKind::SizeCapExceeded, "module of order " + std::to_string(m.order()) +
                                                    " exceeds lattice cap " + std::to_string(caps.lattice));
    std::unordered_set<Submodule, ElementSetHash> seen;
    std::vector<Submodule> cyclics;
    for (Elem x = 0; x < m.order(); ++x) {
        auto c = cyclic_submodule(m, x);
        if (seen.insert(c).second) cyclics.push_back(c);
    }
    std::deque<Submodule> queue(cyclics.begin(), cyclics.end());
    while (!queue.empty()) {
        auto s = std::move(queue.front());
        queue.pop_front();
        for (const auto& c : cyclics) {
            if (c.is_subset_of(s)) continue;
            auto joined = submodule_sum(m, s, c);
            if (seen.insert(joined).second) queue.push_back(std::move(joined));
        }
    }
    std::vector<Submodule> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

SummandVerdict find_complement(const FiniteModule& m, const Submodule& n,
                               const std::vector<Submodule>& lattice) {
    for (const auto& k : lattice) {
        if (n.count() * k.count() != m.order()) continue;
        if ((n & k).count() != 1) continue;
        return {true, k};
    }
    return {};
}

SummandVerdict is_direct_summand(const FiniteModule& m, const Submodule& n, const Caps& caps) {
    return find_complement(m, n, all_submodules(m, caps));
}

bool is_small(const FiniteModule& m, const Submodule& n, const std::vector<Submodule>& lattice) {
    for (const auto& k : lattice) {
        if (k.count() == m.order()) continue;
        if (submodule_sum(m, n, k).count() == m.order()) return false;
    }
    return true;
}

bool is_small(const FiniteModule& m, const Submodule& n, const Caps& caps) {
    return is_small(m, n, all_submodules(m, caps));
}

bool is_essential_submodule(const FiniteModule& m, const Submodule& n) {
    for (Elem x = 1; x < m.order(); ++x)
        if ((cyclic_submodule(m, x) & n).count() <= 1) return false;
    return true;
}

Submodule radical(const FiniteModule& m, const std::vector<Submodule>& lattice) {
    auto rad = whole_module(m);
    for (const auto& s : lattice) {
        if (s.count() == m.order()) continue;
        bool maximal = true;
        for (const auto& t : lattice)
            if (t.count() > s.count() && t.count() < m.order() && s.is_subset_of(t)) {
                maximal = false;
                break;
            }
        if (maximal) rad &= s;
    }
    return rad;
}

Submodule socle(const FiniteModule& m, const std::vector<Submodule>& lattice) {
    auto soc = zero_submodule(m);
    for (const auto& s : lattice) {
        if (s.count() == 1) continue;
        bool simple = true;
        for (const auto& t : lattice)
            if (t.count() > 1 && t.count() < s.count() && t.is_subset_of(s)) {
                simple = false;
                break;
            }
        if (simple) soc = submodule_sum(m, soc, s);
    }
    return soc;
}

ElementSet element_annihilator(const FiniteModule& m, Elem x) {
    ElementSet s(m.ring().order());
    for (Elem r = 0; r < m.ring().order(); ++r)
        if (m.act(x, r) == 0) s.insert(r);
    return s;
}

namespace detail {

std::optional<ModuleMap> extend_from_generators(const FiniteModule& from, const FiniteModule& to,
                                                std::span<const Elem> generators,
                                                std::span<const Elem> images) {
    const std::size_t rn = from.ring().order();
    std::vector<Elem> table(from.order(), kUnset);
    table[0] = 0;
    std::vector<Elem> stack{0};
    while (!stack.empty()) {
        Elem x = stack.back();
        stack.pop_back();
        for (std::size_t i = 0; i < generators.size(); ++i) {
            for (Elem r = 0; r < rn; ++r) {
                Elem y = from.add(x, from.act(generators[i], r));
                Elem v = to.add(table[x], to.act(images[i], r));
                if (table[y] == kUnset) {
                    table[y] = v;
                    stack.push_back(y);
                } else if (table[y] != v) {
                    return std::nullopt;
                }
            }
        }
    }
    for (Elem v : table)
        if (v == kUnset) return std::nullopt;
    return ModuleMap{std::move(table)};
}

}  // namespace detail

namespace {

std::map<std::pair<std::uint64_t, std::size_t>, std::size_t> order_profile(const FiniteModule& m) {
    std::map<std::pair<std::uint64_t, std::size_t>, std::size_t> profile;
    for (Elem x = 0; x < m.order(); ++x)
        ++profile[{m.group().element_order(x), element_annihilator(m, x).count()}];
    return profile;
}

struct IsoSearch {
    const FiniteModule& a;
    const FiniteModule& b;
    std::vector<Elem> generators;
    std::vector<std::vector<Elem>> candidates;
    std::vector<Elem> images;

    std::optional<ModuleMap> run(std::size_t depth) {
        if (depth == generators.size()) {
            auto f = detail::extend_from_generators(a, b, generators, images);
            if (!f) return std::nullopt;
            std::vector<char> hit(b.order(), 0);
            for (Elem y : f->table) {
                if (hit[y]) return std::nullopt;
                hit[y] = 1;
            }
            return f;
        }
        for (Elem y : candidates[depth]) {
            images[depth] = y;
            if (auto f = run(depth + 1)) return f;
        }
        return std::nullopt;
    }
};

}  // namespace

std::optional<ModuleMap> find_isomorphism(const FiniteModule& a, const FiniteModule& b) {
    if (!same_ring(a.ring(), b.ring()) || a.order() != b.order()) return std::nullopt;
    if (order_profile(a) != order_profile(b)) return std::nullopt;

    IsoSearch search{a, b, minimal_generators(a), {}, {}};
    std::vector<ElementSet> b_ann;
    b_ann.reserve(b.order());
    for (Elem y = 0; y < b.order(); ++y) b_ann.push_back(element_annihilator(b, y));
    for (Elem g : search.generators) {
        auto ann = element_annihilator(a, g);
        std::vector<Elem> cands;
        for (Elem y = 0; y < b.order(); ++y)
            if (b_ann[y] == ann) cands.push_back(y);
        if (cands.empty()) return std::nullopt;
        search.candidates.push_back(std::move(cands));
    }
    search.images.assign(search.generators.size(), 0);
    return search.run(0);
}

}  // namespace pirick
