#include "pirick/instances.hpp"

#include "pirick/error.hpp"

namespace pirick {

RingPtr upper_triangular_z2() {
    auto r = triangular_ring(zmod(2), 2);
    r.set_name("t2z2");
    return std::make_shared<const FiniteRing>(std::move(r));
}

FiniteModule lower_hook_module(const RingPtr& t2z2) {
    if (t2z2->order() != 8 || t2z2->rank() != 3)
        throw Error(ErrorKind::RingMismatch, "expected the upper-triangular ring over Z_2");
    auto g = FinAbGroup::make({2, 2, 2});
    Elem x = g.basis(0), y = g.basis(1), z = g.basis(2);
    // constants[i * 3 + j] = (module basis j) * (ring basis i); ring basis E11, E12, E22
    std::vector<Elem> c(9, 0);
    c[0 * 3 + 1] = y;  // y * E11 = y
    c[1 * 3 + 1] = z;  // y * E12 = z
    c[2 * 3 + 0] = x;  // x * E22 = x
    c[2 * 3 + 2] = z;  // z * E22 = z
    auto m = FiniteModule::make(t2z2, g, c);
    m.set_name("ex23");
    return m;
}

FiniteRing field4() {
    auto g = FinAbGroup::make({2, 2});
    Elem one = g.basis(0), w = g.basis(1);
    auto r = FiniteRing::make(g, {one, w, w, g.add(one, w)}, one);
    r.set_name("f4");
    return r;
}

}  // namespace pirick
