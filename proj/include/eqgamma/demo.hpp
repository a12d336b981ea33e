#pragma once

#include "eqgamma/character.hpp"
#include "eqgamma/ehrhart.hpp"
#include "eqgamma/perm_group.hpp"
#include "eqgamma/poset.hpp"

namespace eqgamma {

/// The 8-element poset p1..p8 with p_i < p_{i+4} and p_i < p_{(i mod 4)+5}.
LabeledPoset d4_example_poset();
/// Rotation (p1 p2 p3 p4)(p5 p6 p7 p8).
Permutation d4_sigma();
/// Reflection (p2 p4)(p5 p6)(p7 p8).
Permutation d4_tau();
/// D4 = <sigma, tau> acting on d4_example_poset().
GroupPtr d4_group();
/// Dixon table of d4_group() with rows in the order 1, chi_1, .., chi_4 of
/// the worked example (chi_4 of degree 2; chi_1 trivial on sigma; chi_2
/// trivial on tau; chi_3 trivial on tau sigma).
TablePtr d4_named_table();

/// The octahedron conv{+-e_i} in R^3: the eight inequalities +-x +-y +-z <= 1.
LatticePolytopeHRep cross_polytope_3();
/// Cross-polytope of dimension d (2^d inequalities).
LatticePolytopeHRep cross_polytope(int d);

}  // namespace eqgamma
