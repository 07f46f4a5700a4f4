#pragma once

#include <utility>
#include <vector>

#include "fuchsian/moebius.hpp"

namespace fuchsian {

// An element of the universal cover of PSL(2,R), i.e. a lift of the boundary
// circle map to an increasing map f: R -> R with f(x + 2pi) = f(x) + 2pi.
// Stored as the base element together with u = f(0); u is congruent to
// circle_map(base, 0) mod 2pi but is not reduced. Two lifts of the same base
// differ by integer multiples of 2pi in u; the generator of the deck group,
// z = lift_z(1), is the lift of the identity with u = +2pi.
struct LiftedIsometry {
    ProjMatrix base;
    double u = 0;
};

LiftedIsometry lift_z(int k = 1);

// Lift with u reduced to [0, 2pi).
LiftedIsometry lift_principal(const ProjMatrix& m);

// For an element with a boundary fixed point, the unique lift whose map
// fixes a real number.
LiftedIsometry lift_canonical(const ProjMatrix& m, const Tolerances& tol = default_tol());

// For an elliptic element, the lift whose translation number is the rotation
// angle in (0, 2pi): the "rotation of positive angle" lift.
LiftedIsometry positive_elliptic_lift(const ProjMatrix& m,
                                      const Tolerances& tol = default_tol());

double lifted_apply(const LiftedIsometry& l, double x);

LiftedIsometry compose(const LiftedIsometry& l1, const LiftedIsometry& l2);
LiftedIsometry lift_inverse(const LiftedIsometry& l);

// Commutator of arbitrary lifts of a and b; independent of the lift choice
// since z is central.
LiftedIsometry lifted_commutator(const ProjMatrix& a, const ProjMatrix& b);

// Images of the standard generators (a_1, b_1, ..., a_g, b_g) of a surface
// group of genus pairs.size().
struct Representation {
    std::vector<std::pair<ProjMatrix, ProjMatrix>> pairs;
    int genus() const { return static_cast<int>(pairs.size()); }
};

// max-norm distance of the SL(2,R) product of commutators from +-I
// (commutators are insensitive to the sign choice of representatives).
double relation_residual(const Representation& rho);

// Milnor's algorithm: the integer e with prod [~A_i, ~B_i] = z^e. Refuses to
// round when the lifted value is not within tol.rnd of an integer multiple
// of 2pi.
int euler_class(const Representation& rho, const Tolerances& tol = default_tol(),
                double basepoint = 0.0);

// (-1)^euler, computed independently from the SL(2,R) product of commutators.
int parity(const Representation& rho, const Tolerances& tol = default_tol());

// The integer eps in {-1, 0, 1} with [~A, ~B] = canonical lift of [A,B]
// times z^eps, for [A,B] hyperbolic.
int commutator_defect(const ProjMatrix& a, const ProjMatrix& b,
                      const Tolerances& tol = default_tol());

} // namespace fuchsian
