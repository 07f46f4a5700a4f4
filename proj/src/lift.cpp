#include "fuchsian/lift.hpp"

#include <cmath>

namespace fuchsian {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Guard width for representative flips at the reduction window edge: values
// this close to the top of [u, u + 2pi) are treated as wrapping to u.
constexpr double kEdgeEps = 1e-10;

struct Sl2 {
    double a, b, c, d;
};

Sl2 smul(const Sl2& x, const Sl2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Sl2 sinv(const Sl2& x) { return {x.d, -x.b, -x.c, x.a}; }

Sl2 sl_commutator(const ProjMatrix& m, const ProjMatrix& n) {
    const Sl2 x{m.a, m.b, m.c, m.d}, y{n.a, n.b, n.c, n.d};
    return smul(smul(x, y), smul(sinv(x), sinv(y)));
}

} // namespace

LiftedIsometry lift_z(int k) { return {ProjMatrix{}, kTwoPi * k}; }

LiftedIsometry lift_principal(const ProjMatrix& m) { return {m, circle_map(m, 0)}; }

double lifted_apply(const LiftedIsometry& l, double x) {
    double n = std::floor(x / kTwoPi);
    double xb = x - kTwoPi * n;
    if (xb >= kTwoPi) {
        xb -= kTwoPi;
        n += 1;
    }
    if (xb < 0) xb = 0;
    const double c = circle_map(l.base, xb);
    double r = reduce_angle(c - l.u);
    if (r > kTwoPi - kEdgeEps) r -= kTwoPi;
    return kTwoPi * n + l.u + r;
}

LiftedIsometry lift_canonical(const ProjMatrix& m, const Tolerances& tol) {
    const IsometryClass cls = classify(m, tol);
    if (cls != IsometryClass::parabolic && cls != IsometryClass::hyperbolic)
        fail(errc::no_boundary_fixed_point, "canonical lift needs a boundary fixed point");
    const double phi0 = fixed_boundary_angles(m, tol)[0];
    // representative of circle_map(m, 0) in (phi0 - 2pi, phi0]
    const double r = reduce_angle(circle_map(m, 0) - phi0);
    double u = phi0 + (r == 0 ? 0.0 : r - kTwoPi);
    LiftedIsometry l{m, u};
    // settle representative flips right at the fixed angle
    const double k = std::round((lifted_apply(l, phi0) - phi0) / kTwoPi);
    l.u -= kTwoPi * k;
    return l;
}

LiftedIsometry compose(const LiftedIsometry& l1, const LiftedIsometry& l2) {
    return {mul(l1.base, l2.base), lifted_apply(l1, l2.u)};
}

LiftedIsometry lift_inverse(const LiftedIsometry& l) {
    const ProjMatrix binv = inverse(l.base);
    const double y0 = circle_map(binv, 0);
    const double t = lifted_apply(l, y0);
    return {binv, y0 - kTwoPi * std::round(t / kTwoPi)};
}

LiftedIsometry positive_elliptic_lift(const ProjMatrix& m, const Tolerances& tol) {
    const double alpha = rotation_angle(m, tol);
    const std::complex<double> z0 = elliptic_fixed_point(m, tol);
    const double sy = std::sqrt(z0.imag());
    const ProjMatrix g = canonicalize(sy, z0.real() / sy, 0, 1 / sy, tol);
    const double th = alpha / 2;
    const LiftedIsometry rot{canonicalize(std::cos(th), -std::sin(th), std::sin(th), std::cos(th), tol),
                             alpha};
    const LiftedIsometry lg = lift_principal(g);
    return compose(lg, compose(rot, lift_inverse(lg)));
}

LiftedIsometry lifted_commutator(const ProjMatrix& a, const ProjMatrix& b) {
    const LiftedIsometry la = lift_principal(a), lb = lift_principal(b);
    return compose(compose(la, lb), compose(lift_inverse(la), lift_inverse(lb)));
}

double relation_residual(const Representation& rho) {
    Sl2 p{1, 0, 0, 1};
    for (const auto& [a, b] : rho.pairs) p = smul(p, sl_commutator(a, b));
    const double s = std::sqrt(p.a * p.d - p.b * p.c);
    p = {p.a / s, p.b / s, p.c / s, p.d / s};
    auto norm_to = [&](double sign) {
        return std::max(std::max(std::abs(p.a - sign), std::abs(p.d - sign)),
                        std::max(std::abs(p.b), std::abs(p.c)));
    };
    return std::min(norm_to(1.0), norm_to(-1.0));
}

int euler_class(const Representation& rho, const Tolerances& tol, double basepoint) {
    if (relation_residual(rho) > tol.rel)
        fail(errc::relation_violated, "commutator product is not +-identity");
    LiftedIsometry total = lift_z(0);
    for (const auto& [a, b] : rho.pairs) total = compose(total, lifted_commutator(a, b));
    const double val = (lifted_apply(total, basepoint) - basepoint) / kTwoPi;
    const double e = std::round(val);
    if (std::abs(val - e) > tol.rnd)
        fail(errc::rounding_ambiguous, "lifted relation value " + std::to_string(val) +
                                           " is not close to an integer");
    return static_cast<int>(e);
}

int parity(const Representation& rho, const Tolerances& tol) {
    Sl2 p{1, 0, 0, 1};
    for (const auto& [a, b] : rho.pairs) p = smul(p, sl_commutator(a, b));
    const double s = std::sqrt(p.a * p.d - p.b * p.c);
    p = {p.a / s, p.b / s, p.c / s, p.d / s};
    auto norm_to = [&](double sign) {
        return std::max(std::max(std::abs(p.a - sign), std::abs(p.d - sign)),
                        std::max(std::abs(p.b), std::abs(p.c)));
    };
    const double plus = norm_to(1.0), minus = norm_to(-1.0);
    if (std::min(plus, minus) > tol.rel)
        fail(errc::relation_violated, "commutator product is not +-identity");
    if (plus <= tol.rel && minus <= tol.rel)
        fail(errc::sign_ambiguous, "commutator product is ambiguously close to both +I and -I");
    return plus <= tol.rel ? 1 : -1;
}

int commutator_defect(const ProjMatrix& a, const ProjMatrix& b, const Tolerances& tol) {
    const ProjMatrix m = commutator(a, b);
    if (classify(m, tol) != IsometryClass::hyperbolic)
        fail(errc::not_hyperbolic_commutator, "[a,b] must be hyperbolic");
    const LiftedIsometry lc = lifted_commutator(a, b);
    const LiftedIsometry lcan = lift_canonical(m, tol);
    const double delta = (lc.u - lcan.u) / kTwoPi;
    const double eps = std::round(delta);
    if (std::abs(delta - eps) > tol.rnd)
        fail(errc::rounding_ambiguous, "commutator defect " + std::to_string(delta) +
                                           " is not close to an integer");
    if (std::abs(eps) > 1)
        fail(errc::defect_out_of_range, "commutator defect " + std::to_string(eps) +
                                            " outside {-1,0,1}; numerics are broken");
    return static_cast<int>(eps);
}

} // namespace fuchsian
