#include "fuchsian/moebius.hpp"

#include <algorithm>
#include <cmath>

namespace fuchsian {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Coefficients of the boundary action in SU(1,1) form. With v = exp(i*phi),
// the action is v -> (alpha*v + beta) / (conj(beta)*v + conj(alpha)), and
// |alpha|^2 - |beta|^2 = det = 1, so the denominator never vanishes on the
// circle.
struct DiskCoeffs {
    std::complex<double> alpha, beta;
};

DiskCoeffs disk_coeffs(const ProjMatrix& m) {
    return {{(m.a + m.d) / 2, (m.c - m.b) / 2}, {(m.a - m.d) / 2, (m.b + m.c) / 2}};
}

double sgn_nonzero(double x) { return x < 0 ? -1.0 : 1.0; }

} // namespace

const char* errc_name(errc c) {
    switch (c) {
    case errc::non_positive_determinant: return "NonPositiveDeterminant";
    case errc::not_elliptic: return "NotElliptic";
    case errc::not_boundary_fixing: return "NotBoundaryFixing";
    case errc::no_boundary_fixed_point: return "NoBoundaryFixedPoint";
    case errc::identity_input: return "IdentityInput";
    case errc::invalid_angle: return "InvalidAngle";
    case errc::boundary_center: return "BoundaryCenter";
    case errc::relation_violated: return "RelationViolated";
    case errc::rounding_ambiguous: return "RoundingAmbiguous";
    case errc::sign_ambiguous: return "SignAmbiguous";
    case errc::not_hyperbolic_commutator: return "NotHyperbolicCommutator";
    case errc::defect_out_of_range: return "DefectOutOfRange";
    case errc::invalid_signature: return "InvalidSignature";
    case errc::not_cocompact: return "NotCocompact";
    case errc::not_hyperbolic_triple: return "NotHyperbolicTriple";
    case errc::solver_no_convergence: return "SolverNoConvergence";
    case errc::not_hyperbolic: return "NotHyperbolic";
    case errc::euler_out_of_range: return "EulerOutOfRange";
    case errc::identity_b1: return "IdentityB1";
    case errc::not_in_e: return "NotInE";
    case errc::no_rational_in_range: return "NoRationalInRange";
    case errc::first_commutator_not_hyperbolic: return "FirstCommutatorNotHyperbolic";
    case errc::bad_precondition: return "BadPrecondition";
    case errc::parse_error: return "ParseError";
    case errc::io_error: return "IoError";
    }
    return "UnknownError";
}

const char* to_string(IsometryClass c) {
    switch (c) {
    case IsometryClass::identity: return "Identity";
    case IsometryClass::elliptic: return "Elliptic";
    case IsometryClass::parabolic: return "Parabolic";
    case IsometryClass::hyperbolic: return "Hyperbolic";
    }
    return "?";
}

ProjMatrix canonicalize(double a, double b, double c, double d, const Tolerances& tol) {
    const double det = a * d - b * c;
    if (!(det > tol.det))
        fail(errc::non_positive_determinant, "matrix determinant must be positive");
    const double s = std::sqrt(det);
    a /= s;
    b /= s;
    c /= s;
    d /= s;
    const double tr = a + d;
    bool negate = false;
    if (tr < 0)
        negate = true;
    else if (tr == 0) {
        if (c < 0)
            negate = true;
        else if (c == 0 && b < 0)
            negate = true; // unreachable for det 1, but the rule is total
    }
    if (negate) {
        a = -a;
        b = -b;
        c = -c;
        d = -d;
    }
    return {a, b, c, d};
}

ProjMatrix canonicalize(const ProjMatrix& raw, const Tolerances& tol) {
    return canonicalize(raw.a, raw.b, raw.c, raw.d, tol);
}

ProjMatrix mul(const ProjMatrix& m, const ProjMatrix& n) {
    return canonicalize(m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                        m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d);
}

ProjMatrix inverse(const ProjMatrix& m) { return canonicalize(m.d, -m.b, -m.c, m.a); }

ProjMatrix conjugate(const ProjMatrix& g, const ProjMatrix& m) {
    return mul(mul(g, m), inverse(g));
}

ProjMatrix commutator(const ProjMatrix& m, const ProjMatrix& n) {
    return mul(mul(m, n), mul(inverse(m), inverse(n)));
}

double dist(const ProjMatrix& m, const ProjMatrix& n) {
    return std::max(std::max(std::abs(m.a - n.a), std::abs(m.b - n.b)),
                    std::max(std::abs(m.c - n.c), std::abs(m.d - n.d)));
}

double identity_distance(const ProjMatrix& m) { return dist(m, ProjMatrix{}); }

bool approx_equal(const ProjMatrix& m, const ProjMatrix& n, double eps) {
    return dist(m, n) <= eps;
}

IsometryClass classify(const ProjMatrix& m, const Tolerances& tol) {
    if (identity_distance(m) <= tol.cls) return IsometryClass::identity;
    const double tr = proj_trace(m);
    if (std::abs(tr - 2) <= tol.cls) return IsometryClass::parabolic;
    return tr < 2 ? IsometryClass::elliptic : IsometryClass::hyperbolic;
}

bool marginal_parabolic(const ProjMatrix& m, const Tolerances& tol) {
    return identity_distance(m) > tol.cls && std::abs(proj_trace(m) - 2) <= tol.cls;
}

double reduce_angle(double phi) {
    double r = phi - kTwoPi * std::floor(phi / kTwoPi);
    if (r >= kTwoPi) r -= kTwoPi;
    if (r < 0) r += kTwoPi;
    return r;
}

double circle_map(const ProjMatrix& m, double phi) {
    const auto [alpha, beta] = disk_coeffs(m);
    const std::complex<double> v = std::polar(1.0, phi);
    const std::complex<double> w = (alpha * v + beta) / (std::conj(beta) * v + std::conj(alpha));
    return reduce_angle(std::arg(w));
}

double boundary_angle(double p, double q) {
    const std::complex<double> w(p, -q), z(p, q);
    return reduce_angle(-std::arg(w / z));
}

double rotation_angle(const ProjMatrix& m, const Tolerances& tol) {
    if (classify(m, tol) != IsometryClass::elliptic)
        fail(errc::not_elliptic, "rotation angle requires an elliptic element");
    const double tr = m.a + m.d; // canonical, >= 0
    const double s = std::sqrt(std::max(0.0, 4 - tr * tr));
    const double alpha = reduce_angle(2 * std::atan2(sgn_nonzero(m.c) * s, tr));
    return alpha;
}

std::complex<double> elliptic_fixed_point(const ProjMatrix& m, const Tolerances& tol) {
    if (classify(m, tol) != IsometryClass::elliptic)
        fail(errc::not_elliptic, "fixed point in H^2 requires an elliptic element");
    const double tr = m.a + m.d;
    const double s = std::sqrt(std::max(0.0, 4 - tr * tr));
    // roots of c z^2 + (d-a) z - b = 0; pick the one in the upper half-plane
    return {(m.a - m.d) / (2 * m.c), s / (2 * std::abs(m.c))};
}

std::vector<double> fixed_boundary_angles(const ProjMatrix& m, const Tolerances& tol) {
    const IsometryClass cls = classify(m, tol);
    if (cls != IsometryClass::parabolic && cls != IsometryClass::hyperbolic)
        fail(errc::not_boundary_fixing, "only parabolic/hyperbolic elements fix boundary points");
    // Boundary fixed points are projectivized real eigenvectors (p : q).
    auto eigenvector_angle = [&](double lambda) {
        const double p1 = m.b, q1 = lambda - m.a;
        const double p2 = lambda - m.d, q2 = m.c;
        if (p1 * p1 + q1 * q1 >= p2 * p2 + q2 * q2) return boundary_angle(p1, q1);
        return boundary_angle(p2, q2);
    };
    const double tr = m.a + m.d; // canonical, tr >= 2 here up to tolerance
    if (cls == IsometryClass::parabolic) return {eigenvector_angle(1.0)};
    const double s = std::sqrt(std::max(0.0, tr * tr - 4));
    const double attracting = (tr + s) / 2, repelling = (tr - s) / 2;
    return {eigenvector_angle(attracting), eigenvector_angle(repelling)};
}

ProjMatrix one_param(const ProjMatrix& m, double t, const Tolerances& tol) {
    const IsometryClass cls = classify(m, tol);
    const double tr = m.a + m.d;
    switch (cls) {
    case IsometryClass::identity:
        fail(errc::identity_input, "the identity has no preferred one-parameter subgroup");
    case IsometryClass::hyperbolic: {
        const double lambda = std::acosh(tr / 2);
        const double sh = std::sinh(lambda);
        const double x0a = (m.a - tr / 2) / sh, x0b = m.b / sh;
        const double x0c = m.c / sh, x0d = (m.d - tr / 2) / sh;
        const double ch_t = std::cosh(t * lambda), sh_t = std::sinh(t * lambda);
        return canonicalize(ch_t + sh_t * x0a, sh_t * x0b, sh_t * x0c, ch_t + sh_t * x0d, tol);
    }
    case IsometryClass::parabolic: {
        return canonicalize(1 + t * (m.a - 1), t * m.b, t * m.c, 1 + t * (m.d - 1), tol);
    }
    case IsometryClass::elliptic: {
        const double alpha = rotation_angle(m, tol);
        const double theta = alpha / 2; // in (0, pi)
        const double sn = std::sin(theta), cs = std::cos(theta);
        // representative with trace 2*cos(theta); its sign equals sign(c)
        const double sigma = sgn_nonzero(m.c);
        const double x0a = (sigma * m.a - cs) / sn, x0b = sigma * m.b / sn;
        const double x0c = sigma * m.c / sn, x0d = (sigma * m.d - cs) / sn;
        const double cs_t = std::cos(t * theta), sn_t = std::sin(t * theta);
        return canonicalize(cs_t + sn_t * x0a, sn_t * x0b, sn_t * x0c, cs_t + sn_t * x0d, tol);
    }
    }
    fail(errc::bad_precondition, "unreachable");
}

ProjMatrix elliptic_about(std::complex<double> center, double alpha, const Tolerances& tol) {
    if (!(alpha > 0) || !(alpha < kTwoPi))
        fail(errc::invalid_angle, "rotation angle must lie in (0, 2pi)");
    if (!(center.imag() > 0) || !std::isfinite(center.real()) || !std::isfinite(center.imag()))
        fail(errc::boundary_center, "center must lie strictly inside H^2");
    const double x = center.real(), y = center.imag();
    const double sy = std::sqrt(y);
    const ProjMatrix g = canonicalize(sy, x / sy, 0, 1 / sy, tol);
    const double th = alpha / 2;
    const ProjMatrix rot = canonicalize(std::cos(th), -std::sin(th), std::sin(th), std::cos(th), tol);
    return conjugate(g, rot);
}

std::complex<double> apply_mobius(const ProjMatrix& m, std::complex<double> z) {
    return (m.a * z + m.b) / (m.c * z + m.d);
}

double hyp_distance(std::complex<double> z, std::complex<double> w) {
    const double n = std::norm(z - w);
    return std::acosh(1 + n / (2 * z.imag() * w.imag()));
}

ProjMatrix standard_position(std::complex<double> p, std::complex<double> q) {
    const double x = p.real(), y = p.imag();
    const double sy = std::sqrt(y);
    const ProjMatrix g = canonicalize(1 / sy, -x / sy, 0, sy);
    const std::complex<double> q1 = apply_mobius(g, q);
    const std::complex<double> w = (q1 - std::complex<double>(0, 1)) / (q1 + std::complex<double>(0, 1));
    const double th = std::arg(w) / 2;
    const ProjMatrix rot = canonicalize(std::cos(th), -std::sin(th), std::sin(th), std::cos(th));
    return mul(rot, g);
}

ProjMatrix two_point_isometry(std::complex<double> p1, std::complex<double> q1,
                              std::complex<double> p2, std::complex<double> q2) {
    return mul(inverse(standard_position(p2, q2)), standard_position(p1, q1));
}

double angle_at(std::complex<double> at, std::complex<double> u, std::complex<double> v) {
    const ProjMatrix g = standard_position(at, u);
    const std::complex<double> i1(0, 1);
    const std::complex<double> wu = (apply_mobius(g, u) - i1) / (apply_mobius(g, u) + i1);
    const std::complex<double> wv = (apply_mobius(g, v) - i1) / (apply_mobius(g, v) + i1);
    return std::abs(std::arg(wu * std::conj(wv)));
}

std::complex<double> geodesic_midpoint(std::complex<double> z, std::complex<double> w) {
    const ProjMatrix g = standard_position(z, w);
    const double d = hyp_distance(z, w);
    return apply_mobius(inverse(g), std::complex<double>(0, std::exp(d / 2)));
}

std::complex<double> point_from_center(double psi, double r) {
    const double th = -psi / 2;
    const ProjMatrix rot = canonicalize(std::cos(th), -std::sin(th), std::sin(th), std::cos(th));
    return apply_mobius(rot, std::complex<double>(0, std::exp(r)));
}

} // namespace fuchsian
