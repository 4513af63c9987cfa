#include "pirick/ring.hpp"

#include <random>
#include <sstream>

#include "pirick/error.hpp"

namespace pirick {

namespace {

std::string triple_text(Elem a, Elem b, Elem c) {
    std::ostringstream os;
    os << "(" << a << "," << b << "," << c << ")";
    return os.str();
}

void require_order(std::size_t order, const Caps& caps, const char* what) {
    if (order > caps.ring || order > Caps::kMaxOrder)
        throw Error(ErrorKind::SizeCapExceeded,
                    std::string(what) + " of order " + std::to_string(order) + " exceeds ring cap " +
                        std::to_string(caps.ring));
}

}  // namespace

FiniteRing FiniteRing::make(FinAbGroup group, std::vector<Elem> constants, Elem one, const Caps& caps) {
    const std::size_t n = group.order();
    const std::size_t k = group.rank();
    require_order(n, caps, "ring");
    if (constants.size() != k * k)
        throw Error(ErrorKind::InconsistentConstants, "need one structure constant per basis pair");
    if (one >= n) throw Error(ErrorKind::BadIdentity, "identity is not an element", std::to_string(one));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            Elem c = constants[i * k + j];
            if (c >= n) throw Error(ErrorKind::InconsistentConstants, "constant out of range");
            if (group.scale(c, group.factors()[i]) != 0 || group.scale(c, group.factors()[j]) != 0) {
                std::ostringstream os;
                os << "e" << i + 1 << "*e" << j + 1;
                throw Error(ErrorKind::InconsistentConstants,
                            "product not annihilated by the orders of its factors", os.str());
            }
        }
    }

    FiniteRing r;
    r.group_ = std::move(group);
    r.constants_ = std::move(constants);
    r.one_ = one;

    const auto& g = r.group_;
    auto table = std::make_shared<std::vector<std::uint16_t>>(n * n);
    // b = prev[b] + e_last[b], where last[b] is b's last nonzero coordinate.
    std::vector<std::uint32_t> last(n, 0), prev(n, 0);
    for (Elem b = 1; b < n; ++b) {
        std::size_t l = k;
        while (l-- > 0)
            if (g.coord(b, l) != 0) break;
        last[b] = static_cast<std::uint32_t>(l);
        prev[b] = b - g.basis(l);
    }
    std::vector<Elem> row(k);
    for (Elem a = 0; a < n; ++a) {
        // row[j] = a * e_j
        for (std::size_t j = 0; j < k; ++j) {
            Elem acc = 0;
            for (std::size_t i = 0; i < k; ++i) acc = g.add(acc, g.scale(r.constants_[i * k + j], g.coord(a, i)));
            row[j] = acc;
        }
        auto* out = table->data() + static_cast<std::size_t>(a) * n;
        out[0] = 0;
        for (Elem b = 1; b < n; ++b) out[b] = static_cast<std::uint16_t>(g.add(out[prev[b]], row[last[b]]));
    }
    r.mul_ = std::move(table);

    for (Elem a = 0; a < n; ++a) {
        if (r.mul(one, a) != a || r.mul(a, one) != a)
            throw Error(ErrorKind::BadIdentity, "identity fails on an element", std::to_string(a));
    }

    auto check = [&](Elem a, Elem b, Elem c) {
        if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c)))
            throw Error(ErrorKind::NonAssociative, "(ab)c != a(bc)", triple_text(a, b, c));
    };
    if (n <= caps.cubic) {
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b)
                for (Elem c = 0; c < n; ++c) check(a, b, c);
    } else {
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                for (std::size_t l = 0; l < k; ++l) check(r.basis(i), r.basis(j), r.basis(l));
        std::mt19937_64 rng(0x5eed);
        std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
        for (int t = 0; t < 10000; ++t) check(pick(rng), pick(rng), pick(rng));
    }
    return r;
}

Elem FiniteRing::pow(Elem a, std::uint64_t n) const noexcept {
    Elem result = one_;
    Elem base = a;
    while (n) {
        if (n & 1) result = mul(result, base);
        base = mul(base, base);
        n >>= 1;
    }
    return result;
}

bool FiniteRing::is_commutative() const noexcept {
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = i + 1; j < rank(); ++j)
            if (constant(i, j) != constant(j, i)) return false;
    return true;
}

Relabeled<FiniteRing> ring_from_operations(std::size_t ambient, std::span<const Elem> members, Elem zero,
                                           Elem one, const std::function<Elem(Elem, Elem)>& add,
                                           const std::function<Elem(Elem, Elem)>& mul, const Caps& caps) {
    require_order(members.size(), caps, "ring");
    auto dec = decompose_abelian(ambient, members, zero, add);
    std::vector<Elem> old_to_new(ambient, 0);
    for (Elem i = 0; i < dec.new_to_old.size(); ++i) old_to_new[dec.new_to_old[i]] = i;

    auto group = FinAbGroup::make(dec.factors);
    const std::size_t k = dec.generators.size();
    std::vector<Elem> constants(k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            constants[i * k + j] = old_to_new[mul(dec.generators[i], dec.generators[j])];
    auto ring = FiniteRing::make(std::move(group), std::move(constants), old_to_new[one], caps);
    return {std::move(ring), std::move(dec.new_to_old)};
}

FiniteRing zmod(std::uint32_t n, const Caps& caps) {
    auto g = FinAbGroup::make({n});
    Elem gen = g.basis(0);
    auto r = FiniteRing::make(std::move(g), {gen}, gen, caps);
    r.set_name("z" + std::to_string(n));
    return r;
}

Relabeled<FiniteRing> corner_ring(const FiniteRing& r, Elem e, const Caps& caps) {
    if (!r.is_idempotent(e))
        throw Error(ErrorKind::NotIdempotent, "corner ring needs an idempotent", std::to_string(e));
    ElementSet seen(r.order());
    for (Elem x = 0; x < r.order(); ++x) seen.insert(r.mul(r.mul(e, x), e));
    auto members = seen.elements();
    return ring_from_operations(
        r.order(), members, r.zero(), e, [&](Elem a, Elem b) { return r.add(a, b); },
        [&](Elem a, Elem b) { return r.mul(a, b); }, caps);
}

namespace {

// Matrix-shaped rings over `r`: `slots` lists the allowed (p, q) positions.
FiniteRing matrix_like(const FiniteRing& r, std::size_t n,
                       const std::vector<std::pair<std::size_t, std::size_t>>& slots, const Caps& caps) {
    const std::size_t k = r.rank();
    std::size_t order = 1;
    for (std::size_t s = 0; s < slots.size(); ++s) {
        order *= r.order();
        if (order > caps.ring || order > Caps::kMaxOrder) require_order(order, caps, "matrix ring");
    }
    std::vector<std::uint32_t> factors;
    for (std::size_t s = 0; s < slots.size(); ++s)
        factors.insert(factors.end(), r.group().factors().begin(), r.group().factors().end());
    auto group = FinAbGroup::make(factors);

    auto slot_of = [&](std::size_t p, std::size_t q) -> std::optional<std::size_t> {
        for (std::size_t s = 0; s < slots.size(); ++s)
            if (slots[s] == std::pair{p, q}) return s;
        return std::nullopt;
    };
    // Element with a single ring entry `value` at slot s.
    auto entry = [&](std::size_t s, Elem value) {
        std::vector<std::uint32_t> coords(factors.size(), 0);
        auto c = r.group().coords(value);
        for (std::size_t b = 0; b < k; ++b) coords[s * k + b] = c[b];
        return group.from_coords(coords);
    };

    const std::size_t basis = slots.size() * k;
    std::vector<Elem> constants(basis * basis, 0);
    for (std::size_t s1 = 0; s1 < slots.size(); ++s1) {
        for (std::size_t s2 = 0; s2 < slots.size(); ++s2) {
            auto [p, q] = slots[s1];
            auto [q2, t] = slots[s2];
            if (q != q2) continue;
            auto target = slot_of(p, t);
            if (!target) continue;
            for (std::size_t b1 = 0; b1 < k; ++b1)
                for (std::size_t b2 = 0; b2 < k; ++b2)
                    constants[(s1 * k + b1) * basis + (s2 * k + b2)] = entry(*target, r.constant(b1, b2));
        }
    }
    Elem one = 0;
    for (std::size_t p = 0; p < n; ++p) one = group.add(one, entry(*slot_of(p, p), r.one()));
    return FiniteRing::make(std::move(group), std::move(constants), one, caps);
}

}  // namespace

FiniteRing matrix_ring(const FiniteRing& r, std::size_t n, const Caps& caps) {
    if (n == 0) throw Error(ErrorKind::SizeCapExceeded, "matrix size must be >= 1");
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) slots.emplace_back(p, q);
    auto m = matrix_like(r, n, slots, caps);
    m.set_name("m" + std::to_string(n) + r.name());
    return m;
}

FiniteRing triangular_ring(const FiniteRing& r, std::size_t n, const Caps& caps) {
    if (n == 0) throw Error(ErrorKind::SizeCapExceeded, "matrix size must be >= 1");
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p; q < n; ++q) slots.emplace_back(p, q);
    auto m = matrix_like(r, n, slots, caps);
    m.set_name("t" + std::to_string(n) + r.name());
    return m;
}

FiniteRing product_ring(const FiniteRing& a, const FiniteRing& b, const Caps& caps) {
    require_order(a.order() * b.order(), caps, "product ring");
    auto factors = a.group().factors();
    factors.insert(factors.end(), b.group().factors().begin(), b.group().factors().end());
    auto group = FinAbGroup::make(factors);
    const std::size_t ka = a.rank(), kb = b.rank(), k = ka + kb;

    auto pair_elem = [&](Elem x, Elem y) {
        auto cx = a.group().coords(x);
        auto cy = b.group().coords(y);
        cx.insert(cx.end(), cy.begin(), cy.end());
        return group.from_coords(cx);
    };
    std::vector<Elem> constants(k * k, 0);
    for (std::size_t i = 0; i < ka; ++i)
        for (std::size_t j = 0; j < ka; ++j) constants[i * k + j] = pair_elem(a.constant(i, j), 0);
    for (std::size_t i = 0; i < kb; ++i)
        for (std::size_t j = 0; j < kb; ++j) constants[(ka + i) * k + ka + j] = pair_elem(0, b.constant(i, j));
    Elem one = pair_elem(a.one(), b.one());
    auto r = FiniteRing::make(std::move(group), std::move(constants), one, caps);
    r.set_name(a.name() + "x" + b.name());
    return r;
}

FiniteRing opposite_ring(const FiniteRing& r, const Caps& caps) {
    const std::size_t k = r.rank();
    std::vector<Elem> constants(k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) constants[i * k + j] = r.constant(j, i);
    auto op = FiniteRing::make(r.group(), std::move(constants), r.one(), caps);
    op.set_name(r.name() + "_op");
    return op;
}

namespace {

struct RingIsoSearch {
    const FiniteRing& a;
    const FiniteRing& b;
    std::vector<std::vector<Elem>> candidates;
    std::vector<Elem> images;

    std::optional<std::vector<Elem>> complete() const {
        const std::size_t n = a.order();
        std::vector<Elem> table(n);
        std::vector<char> hit(n, 0);
        for (Elem x = 0; x < n; ++x) {
            Elem y = 0;
            for (std::size_t i = 0; i < a.rank(); ++i)
                y = b.add(y, b.group().scale(images[i], a.group().coord(x, i)));
            if (hit[y]) return std::nullopt;
            hit[y] = 1;
            table[x] = y;
        }
        if (table[a.one()] != b.one()) return std::nullopt;
        for (std::size_t i = 0; i < a.rank(); ++i)
            for (std::size_t j = 0; j < a.rank(); ++j)
                if (table[a.constant(i, j)] != b.mul(images[i], images[j])) return std::nullopt;
        return table;
    }

    std::optional<std::vector<Elem>> run(std::size_t depth) {
        if (depth == candidates.size()) return complete();
        for (Elem y : candidates[depth]) {
            images[depth] = y;
            if (auto t = run(depth + 1)) return t;
        }
        return std::nullopt;
    }
};

}  // namespace

std::optional<std::vector<Elem>> find_ring_isomorphism(const FiniteRing& a, const FiniteRing& b) {
    if (a.order() != b.order()) return std::nullopt;
    RingIsoSearch search{a, b, {}, std::vector<Elem>(a.rank(), 0)};
    for (std::size_t i = 0; i < a.rank(); ++i) {
        auto ord = a.group().element_order(a.basis(i));
        std::vector<Elem> cands;
        for (Elem y = 0; y < b.order(); ++y)
            if (b.group().element_order(y) == ord) cands.push_back(y);
        search.candidates.push_back(std::move(cands));
    }
    return search.run(0);
}

}  // namespace pirick
