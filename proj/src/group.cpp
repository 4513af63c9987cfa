#include "pirick/group.hpp"

#include <algorithm>
#include <numeric>

#include "pirick/caps.hpp"
#include "pirick/error.hpp"

namespace pirick {

namespace {

constexpr std::size_t kTableLimit = 4096;

}  // namespace

FinAbGroup::FinAbGroup()
    : factors_{1},
      strides_{1},
      order_(1),
      add_table_(std::make_shared<const std::vector<std::uint16_t>>(1, 0)),
      neg_table_(std::make_shared<const std::vector<std::uint16_t>>(1, 0)) {}

FinAbGroup FinAbGroup::make(std::vector<std::uint32_t> factors) {
    if (factors.empty()) throw Error(ErrorKind::EmptyFactorList, "group needs at least one factor");
    std::size_t order = 1;
    for (auto n : factors) {
        if (n == 0) throw Error(ErrorKind::ZeroFactor, "invariant factor must be >= 1");
        order *= n;
        if (order > Caps::kMaxOrder)
            throw Error(ErrorKind::SizeCapExceeded,
                        "group order exceeds " + std::to_string(Caps::kMaxOrder));
    }

    FinAbGroup g;
    g.factors_ = std::move(factors);
    g.order_ = order;
    g.strides_.assign(g.factors_.size(), 1);
    for (std::size_t i = g.factors_.size(); i-- > 1;)
        g.strides_[i - 1] = g.strides_[i] * g.factors_[i];

    auto neg = std::make_shared<std::vector<std::uint16_t>>(order);
    for (Elem a = 0; a < order; ++a) {
        Elem r = 0;
        for (std::size_t i = 0; i < g.factors_.size(); ++i) {
            auto c = g.coord(a, i);
            r += static_cast<Elem>(((g.factors_[i] - c) % g.factors_[i]) * g.strides_[i]);
        }
        (*neg)[a] = static_cast<std::uint16_t>(r);
    }
    g.neg_table_ = std::move(neg);

    if (order <= kTableLimit) {
        // Row a is row (a - e_l) pushed through x -> x + e_l, where l is the
        // last nonzero coordinate of a.
        const std::size_t k = g.factors_.size();
        std::vector<std::uint16_t> succ(order * k);
        for (Elem x = 0; x < order; ++x)
            for (std::size_t i = 0; i < k; ++i)
                succ[x * k + i] = static_cast<std::uint16_t>(
                    g.coord(x, i) + 1 == g.factors_[i] ? x - (g.factors_[i] - 1) * g.strides_[i] : x + g.strides_[i]);
        auto table = std::make_shared<std::vector<std::uint16_t>>(order * order);
        auto* t = table->data();
        for (Elem b = 0; b < order; ++b) t[b] = static_cast<std::uint16_t>(b);
        for (Elem a = 1; a < order; ++a) {
            std::size_t l = k;
            while (l-- > 0)
                if (g.coord(a, l) != 0) break;
            const auto* src = t + (a - g.strides_[l]) * order;
            auto* dst = t + a * order;
            for (Elem b = 0; b < order; ++b) dst[b] = succ[src[b] * k + l];
        }
        g.add_table_ = std::move(table);
    }
    return g;
}

Elem FinAbGroup::add_by_coords(Elem a, Elem b) const noexcept {
    Elem r = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        auto c = (coord(a, i) + coord(b, i)) % factors_[i];
        r += static_cast<Elem>(c * strides_[i]);
    }
    return r;
}

Elem FinAbGroup::scale(Elem a, std::uint64_t k) const noexcept {
    Elem r = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        auto c = (static_cast<std::uint64_t>(coord(a, i)) * (k % factors_[i])) % factors_[i];
        r += static_cast<Elem>(c * strides_[i]);
    }
    return r;
}

std::uint64_t FinAbGroup::element_order(Elem a) const noexcept {
    std::uint64_t ord = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        std::uint64_t n = factors_[i];
        std::uint64_t c = coord(a, i);
        std::uint64_t o = n / std::gcd(n, c);
        ord = std::lcm(ord, o);
    }
    return ord;
}

std::vector<std::uint32_t> FinAbGroup::coords(Elem a) const {
    std::vector<std::uint32_t> out(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) out[i] = coord(a, i);
    return out;
}

Elem FinAbGroup::from_coords(std::span<const std::uint32_t> coords) const {
    Elem r = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        r += static_cast<Elem>((coords[i] % factors_[i]) * strides_[i]);
    return r;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> ps;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        ps.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

bool is_power_of(std::uint64_t n, std::uint64_t p) {
    while (n % p == 0) n /= p;
    return n == 1;
}

struct Decomposer {
    std::size_t ambient;
    Elem zero;
    const std::function<Elem(Elem, Elem)>& add;

    // Subgroup spanned by `span` and `gen` when the sum is direct, else empty.
    std::vector<Elem> extend(const std::vector<Elem>& span, Elem gen, std::uint64_t gen_order) const {
        std::vector<char> seen(ambient, 0);
        std::vector<Elem> out;
        out.reserve(span.size() * gen_order);
        Elem step = zero;
        for (std::uint64_t k = 0; k < gen_order; ++k) {
            for (Elem s : span) {
                Elem v = add(s, step);
                if (seen[v]) return {};
                seen[v] = 1;
                out.push_back(v);
            }
            step = add(step, gen);
        }
        return out;
    }

    bool search(const std::vector<std::uint64_t>& exps_orders, std::size_t depth,
                const std::vector<Elem>& span, const std::vector<Elem>& pool,
                const std::vector<std::uint64_t>& orders, std::vector<Elem>& chosen) const {
        if (depth == exps_orders.size()) return true;
        for (std::size_t idx = 0; idx < pool.size(); ++idx) {
            if (orders[idx] != exps_orders[depth]) continue;
            auto next = extend(span, pool[idx], orders[idx]);
            if (next.empty()) continue;
            chosen.push_back(pool[idx]);
            if (search(exps_orders, depth + 1, next, pool, orders, chosen)) return true;
            chosen.pop_back();
        }
        return false;
    }
};

}  // namespace

CyclicDecomposition decompose_abelian(std::size_t ambient, std::span<const Elem> members, Elem zero,
                                      const std::function<Elem(Elem, Elem)>& add) {
    Decomposer d{ambient, zero, add};
    CyclicDecomposition out;

    std::vector<std::uint64_t> order(members.size(), 0);
    for (std::size_t i = 0; i < members.size(); ++i) {
        std::uint64_t k = 1;
        Elem x = members[i];
        while (x != zero) {
            x = add(x, members[i]);
            ++k;
        }
        order[i] = k;
    }

    for (auto p : prime_factors(members.size())) {
        std::vector<Elem> pool;
        std::vector<std::uint64_t> pool_orders;
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (is_power_of(order[i], p)) {
                pool.push_back(members[i]);
                pool_orders.push_back(order[i]);
            }
        }
        // c[j] = #{x : p^j x = 0}; number of cyclic factors of exponent >= j
        // is log_p(c[j] / c[j-1]).
        std::uint64_t max_order = *std::max_element(pool_orders.begin(), pool_orders.end());
        std::vector<std::uint64_t> counts{1};
        for (std::uint64_t q = p; q <= max_order; q *= p) {
            std::uint64_t c = 0;
            for (auto o : pool_orders) c += (q % o == 0);
            counts.push_back(c);
        }
        std::vector<std::uint64_t> at_least;  // at_least[j-1] = factors with exponent >= j
        for (std::size_t j = 1; j < counts.size(); ++j) {
            std::uint64_t ratio = counts[j] / counts[j - 1];
            std::uint64_t k = 0;
            while (ratio > 1) {
                ratio /= p;
                ++k;
            }
            at_least.push_back(k);
        }
        std::vector<std::uint64_t> wanted;  // element orders, descending
        for (std::size_t j = at_least.size(); j-- > 0;) {
            std::uint64_t exact = at_least[j] - (j + 1 < at_least.size() ? at_least[j + 1] : 0);
            std::uint64_t q = 1;
            for (std::size_t t = 0; t <= j; ++t) q *= p;
            for (std::uint64_t t = 0; t < exact; ++t) wanted.push_back(q);
        }

        std::vector<Elem> chosen;
        std::vector<Elem> start{zero};
        if (!d.search(wanted, 0, start, pool, pool_orders, chosen))
            throw Error(ErrorKind::AxiomViolation, "subset is not a finite abelian group");
        for (std::size_t i = 0; i < chosen.size(); ++i) {
            out.generators.push_back(chosen[i]);
            out.factors.push_back(static_cast<std::uint32_t>(wanted[i]));
        }
    }
    if (out.factors.empty()) {
        out.factors.push_back(1);
        out.generators.push_back(zero);
    }

    // Lexicographic coordinate order, last coordinate fastest.
    std::size_t total = 1;
    for (auto f : out.factors) total *= f;
    if (total != members.size())
        throw Error(ErrorKind::AxiomViolation, "subset is not closed under addition");
    out.new_to_old.assign(total, zero);
    std::vector<std::uint32_t> digits(out.factors.size(), 0);
    Elem current = zero;
    for (std::size_t idx = 0; idx < total; ++idx) {
        out.new_to_old[idx] = current;
        // increment mixed-radix counter
        for (std::size_t i = digits.size(); i-- > 0;) {
            if (++digits[i] < out.factors[i]) {
                current = add(current, out.generators[i]);
                break;
            }
            digits[i] = 0;
            // subtract (factor-1) copies: adding one more wraps the cycle to 0
            current = add(current, out.generators[i]);
        }
    }
    return out;
}

}  // namespace pirick
