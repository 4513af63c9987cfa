#pragma once

#include "pirick/module.hpp"
#include "pirick/ring.hpp"

namespace pirick {

// Upper-triangular 2x2 matrices over Z_2, named "t2z2".
RingPtr upper_triangular_z2();

// The module of matrices [[0, x], [y, z]] over upper_triangular_z2() with
// the matrix product as right action. Basis order: x (entry 12), y (entry 21),
// z (entry 22). Named "ex23".
FiniteModule lower_hook_module(const RingPtr& t2z2);

// Field with four elements: basis 1, w with w^2 = w + 1. Named "f4".
FiniteRing field4();

}  // namespace pirick
