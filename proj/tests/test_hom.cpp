#include "doctest.h"

#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pirick/error.hpp"
#include "pirick/hom.hpp"
#include "pirick/ring_props.hpp"

using namespace pirick;
using namespace fixtures;

namespace {

// Endomorphisms of the hook module found by checking every Z_2-linear map
// against hand-multiplied matrices. Elements are (x, y, z) coefficient triples.
std::set<std::array<int, 9>> hook_endomorphisms_oracle() {
    auto to_matrix = [](std::array<int, 3> v) { return oracle::M2{0, v[0], v[1], v[2]}; };
    auto apply = [](const std::array<int, 9>& f, std::array<int, 3> v) {
        std::array<int, 3> out{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) out[i] = (out[i] + f[i * 3 + j] * v[j]) % 2;
        return out;
    };
    auto from_matrix = [](const oracle::M2& m) { return std::array<int, 3>{m.b, m.c, m.d}; };
    std::set<std::array<int, 9>> out;
    for (int bits = 0; bits < 512; ++bits) {
        std::array<int, 9> f{};
        for (int i = 0; i < 9; ++i) f[i] = bits >> i & 1;
        bool linear = true;
        for (int v = 0; v < 8 && linear; ++v) {
            std::array<int, 3> vec{v >> 2 & 1, v >> 1 & 1, v & 1};
            for (const auto& r : oracle::upper_triangular()) {
                auto lhs = apply(f, from_matrix(oracle::mul(to_matrix(vec), r)));
                auto rhs = from_matrix(oracle::mul(to_matrix(apply(f, vec)), r));
                if (lhs != rhs) {
                    linear = false;
                    break;
                }
            }
        }
        if (linear) out.insert(f);
    }
    return out;
}

std::array<int, 9> as_matrix(const FiniteModule& m, const ModuleMap& f) {
    std::array<int, 9> out{};
    for (int j = 0; j < 3; ++j) {
        std::vector<std::uint32_t> e(3, 0);
        e[j] = 1;
        auto img = m.group().coords(f(m.group().from_coords(e)));
        for (int i = 0; i < 3; ++i) out[i * 3 + j] = static_cast<int>(img[i]);
    }
    return out;
}

Elem hook(const EndRing& s, int a, int b, int c) { return s.index_of(hook_map(s.module(), a, b, c)); }

}  // namespace

TEST_CASE("hom set sizes") {
    auto z4 = regular(4);
    CHECK(hom_set(z4, z4).size() == 4);
    auto zero = quotient_module(z4, whole_module(z4)).module;
    CHECK(hom_set(z4, zero).size() == 1);
    CHECK(hom_set(zero, z4).size() == 1);
    for (std::uint32_t n = 1; n <= 12; ++n) CHECK(hom_set(regular(n), regular(n)).size() == n);
    // Hom(Z_4, Z_2 + Z_2) over Z_4 picks any element of order dividing 4.
    auto r4 = z4.ring_ptr();
    CHECK(hom_set(z4, klein_over_z4(r4)).size() == 4);
    CHECK(hom_set(klein_over_z4(r4), z4).size() == 4);
    // Over a field, Hom(F^2, F^2) has |F|^4 elements.
    auto f2 = free_module(ring_ptr(zmod(2)), 2);
    CHECK(hom_set(f2, f2).size() == 16);
    for (const auto& f : hom_set(z4, klein_over_z4(r4))) CHECK(is_homomorphism(z4, klein_over_z4(r4), f));
}

TEST_CASE("hook module endomorphisms match the matrix oracle") {
    auto t2 = upper_triangular_z2();
    auto m = lower_hook_module(t2);
    auto oracle_maps = hook_endomorphisms_oracle();
    auto maps = hom_set(m, m);
    CHECK(oracle_maps.size() == 8);
    std::set<std::array<int, 9>> ours;
    for (const auto& f : maps) ours.insert(as_matrix(m, f));
    CHECK(ours == oracle_maps);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c) CHECK(ours.count(as_matrix(m, hook_map(m, a, b, c))) == 1);
}

TEST_CASE("hom cap") {
    Caps caps;
    caps.hom = 3;
    auto z4 = regular(4);
    try {
        hom_set(z4, z4, caps);
        FAIL("cap not enforced");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SizeCapExceeded);
    }
}

TEST_CASE("endomorphism ring structure") {
    auto z4 = regular(4);
    auto s4 = EndRing::make(z4);
    CHECK(s4.size() == 4);
    CHECK(find_ring_isomorphism(s4.ring(), zmod(4)).has_value());

    auto s0 = EndRing::make(regular(1));
    CHECK(s0.size() == 1);
    CHECK(s0.ring().order() == 1);

    auto t2 = upper_triangular_z2();
    auto s = EndRing::make(lower_hook_module(t2));
    CHECK(s.size() == 8);
    CHECK(s.map(s.ring().one()) == identity_map(s.module()));
    CHECK(s.map(s.ring().zero()) == zero_map(s.module(), s.module()));
    // End of the regular module over a commutative ring is the ring itself.
    auto z6 = regular(6);
    CHECK(find_ring_isomorphism(EndRing::make(z6).ring(), zmod(6)).has_value());
    // End(F^2) over a field is the matrix ring.
    auto f2 = free_module(ring_ptr(zmod(2)), 2);
    CHECK(find_ring_isomorphism(EndRing::make(f2).ring(), matrix_ring(zmod(2), 2)).has_value());
}

TEST_CASE("endomorphism ring multiplication is composition") {
    auto t2 = upper_triangular_z2();
    for (const auto& m : {regular(4), regular(6), lower_hook_module(t2), free_module(ring_ptr(zmod(2)), 2),
                          ring_as_module(t2), z2_plus_z4(ring_ptr(zmod(4)))}) {
        auto s = EndRing::make(m);
        for (Elem f = 0; f < s.size(); ++f)
            for (Elem g = 0; g < s.size(); ++g) {
                CHECK(s.map(s.ring().mul(f, g)) == compose(s.map(f), s.map(g)));
                auto sum = s.map(s.ring().add(f, g));
                for (Elem x = 0; x < m.order(); ++x) CHECK(sum(x) == m.add(s.apply(f, x), s.apply(g, x)));
            }
    }
}

TEST_CASE("index_of rejects non-endomorphisms") {
    auto z4 = regular(4);
    auto s = EndRing::make(z4);
    ModuleMap swap{{0, 3, 2, 1}};
    CHECK(s.index_of(swap) < 4);
    ModuleMap bad{{0, 1, 1, 0}};
    try {
        s.index_of(bad);
        FAIL("bad map accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::AxiomViolation);
    }
}

TEST_CASE("image, kernel and powers") {
    auto z4 = regular(4);
    ModuleMap twice{{0, 2, 0, 2}};
    Submodule two(4);
    two.insert(0);
    two.insert(2);
    CHECK(image(z4, twice) == two);
    CHECK(kernel(z4, twice) == two);
    CHECK(map_power(z4, twice, 2) == zero_map(z4, z4));
    CHECK(map_power(z4, twice, 0) == identity_map(z4));

    auto ic = image_chain(z4, twice);
    CHECK(ic.stabilization == 2);
    REQUIRE(ic.chain.size() >= 2);
    CHECK(ic.chain[0] == two);
    CHECK(ic.chain[1] == zero_submodule(z4));
    auto kc = kernel_chain(z4, twice);
    CHECK(kc.stabilization == 2);
    CHECK(kc.chain[1] == whole_module(z4));

    auto id = identity_map(z4);
    CHECK(image_chain(z4, id).stabilization == 1);
    CHECK(kernel_chain(z4, id).stabilization == 1);

    auto t2 = upper_triangular_z2();
    auto m = lower_hook_module(t2);
    auto s = EndRing::make(m);
    Elem f = hook(s, 0, 0, 1);
    CHECK(image(m, s.map(f)) == coords_set(m, {{0, 0, 0}, {0, 0, 1}}));
    CHECK(s.ring().mul(f, f) == s.ring().zero());
    CHECK(image(m, s.map(hook(s, 0, 1, 1))).count() == 4);
    CHECK(image(m, s.map(hook(s, 1, 1, 1))) == whole_module(m));
    CHECK(image(m, s.map(hook(s, 1, 0, 1))).count() == 2);
}

TEST_CASE("chains are monotone and the rank-nullity count holds") {
    auto t2 = upper_triangular_z2();
    for (const auto& m : {regular(8), regular(12), lower_hook_module(t2), ring_as_module(t2),
                          z2_plus_z4(ring_ptr(zmod(4)))}) {
        auto s = EndRing::make(m);
        for (Elem f = 0; f < s.size(); ++f) {
            CHECK(s.image(f).count() * s.kernel(f).count() == m.order());
            auto ic = image_chain(m, s.map(f));
            auto kc = kernel_chain(m, s.map(f));
            for (std::size_t i = 0; i + 1 < ic.chain.size(); ++i) CHECK(ic.chain[i + 1].is_subset_of(ic.chain[i]));
            for (std::size_t i = 0; i + 1 < kc.chain.size(); ++i) CHECK(kc.chain[i].is_subset_of(kc.chain[i + 1]));
            for (std::uint32_t n = 1; n <= 4; ++n) {
                auto fn = map_power(m, s.map(f), n);
                auto expected_im = n <= ic.chain.size() ? ic.chain[n - 1] : ic.chain.back();
                CHECK(image(m, fn) == expected_im);
                auto expected_ker = n <= kc.chain.size() ? kc.chain[n - 1] : kc.chain.back();
                CHECK(kernel(m, fn) == expected_ker);
            }
            auto st = ic.stabilization;
            CHECK(image(m, map_power(m, s.map(f), st)) == image(m, map_power(m, s.map(f), st + 1)));
            if (st > 1)
                CHECK(image(m, map_power(m, s.map(f), st - 1)) != image(m, map_power(m, s.map(f), st)));
        }
    }
}

TEST_CASE("annihilators") {
    auto t2 = upper_triangular_z2();
    auto m = lower_hook_module(t2);
    auto s = EndRing::make(m);
    auto all = ElementSet::full(s.size());
    CHECK(right_annihilator(s, all) == zero_submodule(m));
    CHECK(left_annihilator(s, zero_submodule(m)) == all);
    auto l_whole = left_annihilator(s, whole_module(m));
    CHECK(l_whole.count() == 1);
    CHECK(l_whole.contains(s.ring().zero()));

    // l_S(f) for the square-zero map: maps killing z.
    Elem f = hook(s, 0, 0, 1);
    auto lf = left_annihilator_of(s, f);
    CHECK(is_left_ideal(s.ring(), lf));
    for (Elem g = 0; g < s.size(); ++g) CHECK(lf.contains(g) == (s.ring().mul(g, f) == s.ring().zero()));

    // r_M(S e) = (1 - e) M for every idempotent e.
    for (const auto& mod : {lower_hook_module(t2), ring_as_module(t2), regular(6), regular(12),
                            free_module(ring_ptr(zmod(2)), 2)}) {
        auto se = EndRing::make(mod);
        for (Elem e : ring_idempotents(se.ring())) {
            auto ideal = left_principal_ideal(se.ring(), e);
            Elem comp = se.ring().sub(se.ring().one(), e);
            CHECK(right_annihilator(se, ideal) == se.image(comp));
        }
    }
}

TEST_CASE("idempotents split the module") {
    auto t2 = upper_triangular_z2();
    for (const auto& m : {lower_hook_module(t2), ring_as_module(t2), regular(12), matrix_columns(t2),
                          free_module(ring_ptr(zmod(2)), 2)}) {
        auto s = EndRing::make(m);
        auto images = idempotent_images(s);
        for (Elem e : ring_idempotents(s.ring())) {
            auto em = s.image(e);
            auto fm = s.image(s.ring().sub(s.ring().one(), e));
            auto meet = em;
            meet &= fm;
            CHECK(meet == zero_submodule(m));
            CHECK(submodule_sum(m, em, fm) == whole_module(m));
            REQUIRE(images.count(em) == 1);
            CHECK(images.at(em) <= e);
            CHECK(is_direct_summand(m, em).summand);
        }
        // Every summand is the image of an idempotent.
        for (const auto& n : all_submodules(m))
            CHECK(is_direct_summand(m, n).summand == (images.count(n) == 1));
    }
}

TEST_CASE("indecomposable modules") {
    auto t2 = upper_triangular_z2();
    CHECK(is_indecomposable(EndRing::make(regular(4))));
    CHECK(is_indecomposable(EndRing::make(regular(8))));
    CHECK_FALSE(is_indecomposable(EndRing::make(regular(6))));
    CHECK(is_indecomposable(EndRing::make(regular(1))));
    CHECK_FALSE(is_indecomposable(EndRing::make(lower_hook_module(t2))));
    CHECK_FALSE(is_indecomposable(EndRing::make(free_module(ring_ptr(zmod(2)), 2))));
}
