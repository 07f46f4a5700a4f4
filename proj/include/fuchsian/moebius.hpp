#pragma once

#include <complex>
#include <vector>

#include "fuchsian/config.hpp"

namespace fuchsian {

// An element of PSL(2,R), stored as the canonical unit-determinant
// representative: trace > 0, or trace = 0 and c > 0, or trace = c = 0 and
// b > 0. canonicalize() is idempotent and identifies M with -M.
struct ProjMatrix {
    double a = 1, b = 0, c = 0, d = 1;
};

ProjMatrix canonicalize(double a, double b, double c, double d,
                        const Tolerances& tol = default_tol());
ProjMatrix canonicalize(const ProjMatrix& raw, const Tolerances& tol = default_tol());

ProjMatrix mul(const ProjMatrix& m, const ProjMatrix& n);
ProjMatrix inverse(const ProjMatrix& m);
ProjMatrix conjugate(const ProjMatrix& g, const ProjMatrix& m); // g m g^{-1}
ProjMatrix commutator(const ProjMatrix& m, const ProjMatrix& n);

inline double sl_trace(const ProjMatrix& m) { return m.a + m.d; }
inline double proj_trace(const ProjMatrix& m) { return std::abs(m.a + m.d); }

// max-norm distances on canonical representatives
double dist(const ProjMatrix& m, const ProjMatrix& n);
double identity_distance(const ProjMatrix& m);

bool approx_equal(const ProjMatrix& m, const ProjMatrix& n, double eps);

enum class IsometryClass { identity, elliptic, parabolic, hyperbolic };
const char* to_string(IsometryClass c);

IsometryClass classify(const ProjMatrix& m, const Tolerances& tol = default_tol());

// True when |Tr - 2| <= tol.cls but the matrix is not the identity: the
// classification is discontinuous there and reports should say so.
bool marginal_parabolic(const ProjMatrix& m, const Tolerances& tol = default_tol());

// Action on the boundary circle. Boundary points are coordinatized by an
// angle phi (radians); reduction to [0, 2pi) is always explicit. The chart
// is the disk model through the Cayley transform z -> (z-i)/(z+i), with the
// sign of the angle chosen so that the rotation matrix
// [[cos t, -sin t], [sin t, cos t]] moves boundary points by +2t.
double reduce_angle(double phi); // representative in [0, 2pi)
double circle_map(const ProjMatrix& m, double phi);

// Boundary angle of the real point p/q (q = 0 encodes the point at infinity).
double boundary_angle(double p, double q);

// Rotation angle in (0, 2pi) of an elliptic element acting on the boundary.
double rotation_angle(const ProjMatrix& m, const Tolerances& tol = default_tol());

// Fixed point in the upper half-plane of an elliptic element.
std::complex<double> elliptic_fixed_point(const ProjMatrix& m,
                                          const Tolerances& tol = default_tol());

// Boundary fixed angles of a parabolic (one) or hyperbolic (two, attracting
// first) element.
std::vector<double> fixed_boundary_angles(const ProjMatrix& m,
                                          const Tolerances& tol = default_tol());

// One-parameter subgroup through m, normalized so that one_param(m, 1) = m.
// For elliptic m the generator is the one whose rotation angle matches
// rotation_angle(m), so each elliptic pins a unique subgroup.
ProjMatrix one_param(const ProjMatrix& m, double t, const Tolerances& tol = default_tol());

// Elliptic rotation by boundary angle alpha in (0, 2pi) about a point of H^2.
ProjMatrix elliptic_about(std::complex<double> center, double alpha,
                          const Tolerances& tol = default_tol());

// --- hyperbolic-plane geometry helpers (upper half-plane model) ---

std::complex<double> apply_mobius(const ProjMatrix& m, std::complex<double> z);
double hyp_distance(std::complex<double> z, std::complex<double> w);

// The unique orientation-preserving isometry with p -> i and q on the upper
// imaginary axis above i.
ProjMatrix standard_position(std::complex<double> p, std::complex<double> q);

// The unique orientation-preserving isometry sending (p1, q1) to (p2, q2);
// requires d(p1,q1) = d(p2,q2).
ProjMatrix two_point_isometry(std::complex<double> p1, std::complex<double> q1,
                              std::complex<double> p2, std::complex<double> q2);

// Unsigned angle at `at` between the geodesics toward u and toward v.
double angle_at(std::complex<double> at, std::complex<double> u, std::complex<double> v);

std::complex<double> geodesic_midpoint(std::complex<double> z, std::complex<double> w);

// Point at hyperbolic distance r from i along the direction that makes the
// conformal angle psi with the upward vertical at i.
std::complex<double> point_from_center(double psi, double r);

} // namespace fuchsian
