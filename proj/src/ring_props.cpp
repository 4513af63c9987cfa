#include "pirick/ring_props.hpp"

#include <vector>

namespace pirick {

std::uint32_t power_repetition_bound(const FiniteRing& r, Elem a) {
    std::vector<char> seen(r.order(), 0);
    Elem p = a;
    std::uint32_t t = 1;
    while (!seen[p]) {
        seen[p] = 1;
        p = r.mul(p, a);
        ++t;
    }
    return t;
}

std::optional<std::uint32_t> nilpotency_index(const FiniteRing& r, Elem a) {
    Elem p = a;
    for (std::uint32_t n = 1; n <= r.order() + 1; ++n) {
        if (p == r.zero()) return n;
        p = r.mul(p, a);
    }
    return std::nullopt;
}

std::vector<Elem> ring_idempotents(const FiniteRing& r) {
    std::vector<Elem> out;
    for (Elem a = 0; a < r.order(); ++a)
        if (r.is_idempotent(a)) out.push_back(a);
    return out;
}

bool is_unit(const FiniteRing& r, Elem a) {
    for (Elem b = 0; b < r.order(); ++b)
        if (r.mul(a, b) == r.one() && r.mul(b, a) == r.one()) return true;
    return false;
}

std::vector<Elem> ring_units(const FiniteRing& r) {
    std::vector<Elem> out;
    for (Elem a = 0; a < r.order(); ++a)
        if (is_unit(r, a)) out.push_back(a);
    return out;
}

ElementSet left_principal_ideal(const FiniteRing& r, Elem a) {
    ElementSet s(r.order());
    for (Elem x = 0; x < r.order(); ++x) s.insert(r.mul(x, a));
    return s;
}

ElementSet left_annihilator_in_ring(const FiniteRing& r, Elem a) {
    ElementSet s(r.order());
    for (Elem x = 0; x < r.order(); ++x)
        if (r.mul(x, a) == r.zero()) s.insert(x);
    return s;
}

bool is_left_ideal(const FiniteRing& r, const ElementSet& s) {
    if (!s.contains(r.zero())) return false;
    auto members = s.elements();
    for (Elem a : members) {
        for (Elem b : members)
            if (!s.contains(r.add(a, b))) return false;
        for (Elem x = 0; x < r.order(); ++x)
            if (!s.contains(r.mul(x, a))) return false;
    }
    return true;
}

bool is_two_sided_ideal(const FiniteRing& r, const ElementSet& s) {
    if (!is_left_ideal(r, s)) return false;
    for (Elem a : s.elements())
        for (Elem x = 0; x < r.order(); ++x)
            if (!s.contains(r.mul(a, x))) return false;
    return true;
}

ElementwiseVerdict<PowerWitness> is_pi_regular(const FiniteRing& r) {
    ElementwiseVerdict<PowerWitness> v;
    v.witnesses.resize(r.order());
    for (Elem a = 0; a < r.order(); ++a) {
        auto bound = power_repetition_bound(r, a);
        Elem an = a;
        for (std::uint32_t n = 1; n <= bound && !v.witnesses[a]; ++n, an = r.mul(an, a)) {
            for (Elem x = 0; x < r.order(); ++x) {
                if (r.mul(r.mul(an, x), an) == an) {
                    v.witnesses[a] = PowerWitness{n, x};
                    break;
                }
            }
        }
        if (!v.witnesses[a] && v.holds) {
            v.holds = false;
            v.counterexample = a;
        }
    }
    return v;
}

ElementwiseVerdict<Elem> is_regular(const FiniteRing& r) {
    ElementwiseVerdict<Elem> v;
    v.witnesses.resize(r.order());
    for (Elem a = 0; a < r.order(); ++a) {
        for (Elem x = 0; x < r.order(); ++x) {
            if (r.mul(r.mul(a, x), a) == a) {
                v.witnesses[a] = x;
                break;
            }
        }
        if (!v.witnesses[a] && v.holds) {
            v.holds = false;
            v.counterexample = a;
        }
    }
    return v;
}

StronglyPiRegularVerdict is_strongly_pi_regular(const FiniteRing& r) {
    StronglyPiRegularVerdict v;
    v.right.witnesses.resize(r.order());
    v.left.witnesses.resize(r.order());
    for (Elem a = 0; a < r.order(); ++a) {
        auto bound = power_repetition_bound(r, a);
        Elem an = a;
        for (std::uint32_t n = 1; n <= bound; ++n) {
            Elem next = r.mul(an, a);
            for (Elem x = 0; x < r.order() && !v.right.witnesses[a]; ++x)
                if (r.mul(next, x) == an) v.right.witnesses[a] = PowerWitness{n, x};
            for (Elem y = 0; y < r.order() && !v.left.witnesses[a]; ++y)
                if (r.mul(y, next) == an) v.left.witnesses[a] = PowerWitness{n, y};
            if (v.right.witnesses[a] && v.left.witnesses[a]) break;
            an = next;
        }
        for (auto* side : {&v.right, &v.left}) {
            if (!side->witnesses[a] && side->holds) {
                side->holds = false;
                side->counterexample = a;
            }
        }
    }
    v.holds = v.right.holds && v.left.holds;
    return v;
}

ElementwiseVerdict<AnnihilatorWitness> is_generalized_left_pp(const FiniteRing& r) {
    auto idems = ring_idempotents(r);
    std::vector<ElementSet> generated;
    generated.reserve(idems.size());
    for (Elem e : idems) generated.push_back(left_principal_ideal(r, e));

    ElementwiseVerdict<AnnihilatorWitness> v;
    v.witnesses.resize(r.order());
    for (Elem a = 0; a < r.order(); ++a) {
        auto bound = power_repetition_bound(r, a);
        Elem an = a;
        for (std::uint32_t n = 1; n <= bound && !v.witnesses[a]; ++n, an = r.mul(an, a)) {
            auto ann = left_annihilator_in_ring(r, an);
            for (std::size_t i = 0; i < idems.size(); ++i) {
                if (generated[i] == ann) {
                    v.witnesses[a] = AnnihilatorWitness{n, idems[i]};
                    break;
                }
            }
        }
        if (!v.witnesses[a] && v.holds) {
            v.holds = false;
            v.counterexample = a;
        }
    }
    return v;
}

RingPredicates ring_predicates(const FiniteRing& r) {
    RingPredicates p;
    const std::size_t n = r.order();
    p.commutative = r.is_commutative();
    p.idempotents = ring_idempotents(r);

    p.reduced = true;
    for (Elem a = 1; a < n && p.reduced; ++a)
        if (r.mul(a, a) == r.zero()) p.reduced = false;

    p.abelian = true;
    for (Elem e : p.idempotents)
        for (Elem a = 0; a < n && p.abelian; ++a)
            if (r.mul(a, e) != r.mul(e, a)) p.abelian = false;

    p.domain = true;
    for (Elem a = 1; a < n && p.domain; ++a)
        for (Elem b = 1; b < n; ++b)
            if (r.mul(a, b) == r.zero()) {
                p.domain = false;
                break;
            }

    std::vector<char> unit(n, 0);
    for (Elem a = 0; a < n; ++a) {
        unit[a] = is_unit(r, a);
        if (unit[a]) p.units.push_back(a);
    }

    p.local = true;
    for (Elem a = 0; a < n && p.local; ++a) {
        if (unit[a]) continue;
        for (Elem b = 0; b < n; ++b)
            if (!unit[b] && unit[r.add(a, b)]) {
                p.local = false;
                break;
            }
    }
    p.division = n > 1 && p.units.size() == n - 1 && !unit[r.zero()];

    p.jacobson_radical = ElementSet(n);
    for (Elem a = 0; a < n; ++a) {
        bool in = true;
        for (Elem x = 0; x < n && in; ++x)
            if (!unit[r.sub(r.one(), r.mul(x, a))]) in = false;
        if (in) p.jacobson_radical.insert(a);
    }
    p.radical_is_nil = true;
    for (Elem a : p.jacobson_radical.elements())
        if (!nilpotency_index(r, a)) p.radical_is_nil = false;
    return p;
}

}  // namespace pirick
