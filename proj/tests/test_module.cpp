#include "doctest.h"

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pirick/error.hpp"
#include "pirick/hom.hpp"
#include "pirick/module.hpp"

using namespace pirick;
using namespace fixtures;

namespace {

// Lattice by brute force over all subsets (small modules only).
std::vector<Submodule> brute_lattice(const FiniteModule& m) {
    std::vector<Submodule> out;
    const std::size_t n = m.order();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        ElementSet s(n);
        for (Elem x = 0; x < n; ++x)
            if (mask >> x & 1) s.insert(x);
        if (is_submodule(m, s)) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("module construction and axiom checks") {
    auto t2 = upper_triangular_z2();
    CHECK(regular(4).order() == 4);
    CHECK(lower_hook_module(t2).order() == 8);
    CHECK(ring_as_module(t2).order() == 8);
    CHECK(regular(1).order() == 1);

    auto z2 = ring_ptr(zmod(2));
    auto g = FinAbGroup::make({2});
    try {
        FiniteModule::make(z2, g, {0});
        FAIL("non-unitary action accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::AxiomViolation);
    }
    // Z_4 cannot act on Z_3 through its identity.
    auto z4 = ring_ptr(zmod(4));
    CHECK_THROWS_AS(FiniteModule::make(z4, FinAbGroup::make({3}), {1}), Error);
}

TEST_CASE("action of the hook module matches matrix multiplication") {
    auto t2 = upper_triangular_z2();
    auto m = lower_hook_module(t2);
    // Ring elements follow basis E11, E12, E22; module basis x=E12, y=E21, z=E22.
    auto ring_matrix = [&](Elem r) {
        auto c = t2->group().coords(r);
        return oracle::M2{int(c[0]), int(c[1]), 0, int(c[2])};
    };
    auto module_matrix = [&](Elem v) {
        auto c = m.group().coords(v);
        return oracle::M2{0, int(c[0]), int(c[1]), int(c[2])};
    };
    for (Elem v = 0; v < m.order(); ++v)
        for (Elem r = 0; r < t2->order(); ++r)
            CHECK(module_matrix(m.act(v, r)) == oracle::mul(module_matrix(v), ring_matrix(r)));
}

TEST_CASE("submodule lattice agrees with subset enumeration") {
    for (const auto& m : small_modules()) {
        CAPTURE(m.name());
        auto lat = all_submodules(m);
        CHECK(lat == brute_lattice(m));
        CHECK(lat.front() == zero_submodule(m));
        CHECK(lat.back() == whole_module(m));
    }
}

TEST_CASE("lattice is closed under sum and intersection") {
    for (const auto& m : small_modules()) {
        auto lat = all_submodules(m);
        std::set<Submodule> members(lat.begin(), lat.end());
        for (const auto& a : lat)
            for (const auto& b : lat) {
                auto meet = a;
                meet &= b;
                CHECK(members.count(meet) == 1);
                auto join = submodule_sum(m, a, b);
                CHECK(members.count(join) == 1);
                CHECK(a.is_subset_of(join));
                CHECK(b.is_subset_of(join));
            }
    }
}

TEST_CASE("regular Z_n lattices count divisors") {
    for (std::uint32_t n = 1; n <= 12; ++n) {
        CAPTURE(n);
        CHECK(all_submodules(regular(n)).size() == oracle::divisor_count(n));
    }
    // Z_p^2 over Z_p has p + 3 subspaces.
    for (std::uint32_t p : {2u, 3u, 5u}) {
        auto m = free_module(ring_ptr(zmod(p)), 2);
        CHECK(all_submodules(m).size() == p + 3);
    }
}

TEST_CASE("lattice cap") {
    Caps caps;
    caps.lattice = 4;
    CHECK(all_submodules(regular(4), caps).size() == 3);
    try {
        all_submodules(regular(6), caps);
        FAIL("cap not enforced");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SizeCapExceeded);
    }
}

TEST_CASE("direct summands") {
    auto z4 = regular(4);
    Submodule two(4);
    two.insert(0);
    two.insert(2);
    CHECK(is_submodule(z4, two));
    CHECK_FALSE(is_direct_summand(z4, two).summand);
    CHECK(is_direct_summand(z4, zero_submodule(z4)).complement == whole_module(z4));
    CHECK(is_direct_summand(z4, whole_module(z4)).complement == zero_submodule(z4));

    auto t2 = upper_triangular_z2();
    auto m = lower_hook_module(t2);
    auto lower_row = coords_set(m, {{0, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 1, 1}});
    CHECK(is_submodule(m, lower_row));
    auto v = is_direct_summand(m, lower_row);
    REQUIRE(v.summand);
    auto c = *v.complement;
    CHECK(c.count() == 2);
    auto meet = c;
    meet &= lower_row;
    CHECK(meet == zero_submodule(m));
    CHECK(submodule_sum(m, c, lower_row) == whole_module(m));

    auto zpart = coords_set(m, {{0, 0, 0}, {0, 0, 1}});
    CHECK(is_submodule(m, zpart));
    CHECK_FALSE(is_direct_summand(m, zpart).summand);
}

TEST_CASE("quotients and isomorphism") {
    auto z4 = regular(4);
    Submodule two(4);
    two.insert(0);
    two.insert(2);
    auto q = quotient_module(z4, two);
    CHECK(q.module.order() == 2);
    CHECK(is_homomorphism(z4, q.module, q.projection));
    CHECK(kernel(z4, q.projection) == two);
    auto sub = submodule_as_module(z4, two);
    CHECK(sub.module.order() == 2);
    CHECK(is_homomorphism(sub.module, z4, sub.inclusion));
    CHECK(image(z4, sub.inclusion) == two);
    CHECK(are_isomorphic(q.module, sub.module));

    CHECK(are_isomorphic(quotient_module(z4, zero_submodule(z4)).module, z4));
    CHECK(quotient_module(z4, whole_module(z4)).module.order() == 1);

    auto r4 = z4.ring_ptr();
    CHECK_FALSE(are_isomorphic(z4, klein_over_z4(r4)));
    CHECK(are_isomorphic(z4, z4));
    auto iso = find_isomorphism(z2_plus_z4(r4), direct_sum(quotient_module(z4, two).module, z4).module);
    REQUIRE(iso);
}

TEST_CASE("first isomorphism theorem on endomorphisms") {
    for (const auto& m : small_modules()) {
        if (m.order() > 16) continue;
        for (const auto& f : hom_set(m, m)) {
            auto k = kernel(m, f);
            auto im = image(m, f);
            CHECK(k.count() * im.count() == m.order());
            CHECK(are_isomorphic(quotient_module(m, k).module, submodule_as_module(m, im).module));
        }
    }
}

TEST_CASE("small and essential submodules") {
    auto z4 = regular(4);
    Submodule two(4);
    two.insert(0);
    two.insert(2);
    CHECK(is_small(z4, two));
    CHECK(is_essential_submodule(z4, two));
    CHECK_FALSE(is_small(z4, whole_module(z4)));
    CHECK(is_essential_submodule(z4, whole_module(z4)));
    CHECK(is_small(z4, zero_submodule(z4)));
    CHECK_FALSE(is_essential_submodule(z4, zero_submodule(z4)));
    // In the zero module the zero submodule is the whole module.
    auto z1 = regular(1);
    CHECK(is_essential_submodule(z1, zero_submodule(z1)));
}

TEST_CASE("essential check agrees with the lattice definition") {
    for (const auto& m : small_modules()) {
        auto lat = all_submodules(m);
        for (const auto& n : lat) {
            bool lattice_def = true;
            for (const auto& k : lat) {
                if (k.count() == 1) continue;
                auto meet = k;
                meet &= n;
                if (meet.count() == 1) lattice_def = false;
            }
            CHECK(is_essential_submodule(m, n) == lattice_def);
        }
    }
}

TEST_CASE("radical and socle") {
    Submodule two(4);
    two.insert(0);
    two.insert(2);
    auto z4 = regular(4);
    auto lat4 = all_submodules(z4);
    CHECK(radical(z4, lat4) == two);
    CHECK(socle(z4, lat4) == two);

    auto z6 = regular(6);
    auto lat6 = all_submodules(z6);
    CHECK(radical(z6, lat6) == zero_submodule(z6));
    CHECK(socle(z6, lat6) == whole_module(z6));

    auto z1 = regular(1);
    auto lat1 = all_submodules(z1);
    CHECK(radical(z1, lat1) == zero_submodule(z1));
    CHECK(socle(z1, lat1) == zero_submodule(z1));

    // Radical is the sum of small submodules; socle the sum of minimal ones.
    for (const auto& m : small_modules()) {
        auto lat = all_submodules(m);
        auto rad = zero_submodule(m);
        auto soc = zero_submodule(m);
        for (const auto& n : lat) {
            if (is_small(m, n, lat)) rad = submodule_sum(m, rad, n);
            bool simple = n.count() > 1;
            for (const auto& k : lat)
                if (k.count() > 1 && k.count() < n.count() && k.is_subset_of(n)) simple = false;
            if (simple) soc = submodule_sum(m, soc, n);
        }
        CHECK(radical(m, lat) == rad);
        CHECK(socle(m, lat) == soc);
    }
}

TEST_CASE("direct sums") {
    auto z2 = ring_ptr(zmod(2));
    auto a = ring_as_module(z2);
    auto s = direct_sum(a, a);
    CHECK(s.module.order() == 4);
    CHECK(are_isomorphic(s.module, free_module(z2, 2)));
    CHECK(is_homomorphism(a, s.module, s.inject_first));
    CHECK(is_homomorphism(s.module, a, s.project_second));
    CHECK(compose(s.project_first, s.inject_first) == identity_map(a));
    CHECK(compose(s.project_second, s.inject_first) == zero_map(a, a));

    auto z4 = regular(4);
    auto with_zero = direct_sum(z4, quotient_module(z4, whole_module(z4)).module);
    CHECK(are_isomorphic(with_zero.module, z4));

    try {
        direct_sum(z4, a);
        FAIL("ring mismatch accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::RingMismatch);
    }

    // Top and bottom rows of the 2x2 matrices split the column module.
    auto t2 = upper_triangular_z2();
    auto mc = matrix_columns(t2);
    auto top = coords_set(mc, {{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 0}});
    auto bottom = coords_set(mc, {{0, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 1, 1}});
    REQUIRE(is_submodule(mc, top));
    REQUIRE(is_submodule(mc, bottom));
    auto top_m = submodule_as_module(mc, top).module;
    auto bottom_m = submodule_as_module(mc, bottom).module;
    CHECK(are_isomorphic(top_m, bottom_m));
    CHECK(are_isomorphic(direct_sum(top_m, bottom_m).module, mc));
    CHECK(is_direct_summand(mc, top).complement.has_value());
}

TEST_CASE("minimal generators span the module") {
    for (const auto& m : small_modules()) {
        auto gens = minimal_generators(m);
        CHECK(submodule_generated(m, gens) == whole_module(m));
    }
    CHECK(minimal_generators(regular(4)).size() == 1);
    CHECK(minimal_generators(free_module(ring_ptr(zmod(2)), 3)).size() == 3);
    CHECK(minimal_generators(regular(1)).empty());
}
