#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fuchsian {

inline constexpr const char* kVersion = "0.1.0";

// Tolerance context. Every operation that compares angles, traces or
// residuals takes one of these instead of hard-coding thresholds.
struct Tolerances {
    double cls = 1e-9;       // trace classification window around Tr = 2
    double rel = 1e-8;       // surface relation residual
    double real = 1e-8;      // realization certificate residual / angle error
    double rnd = 0.01;       // Euler class rounding slack |F(0)/2pi - e|
    double det = 1e-12;      // determinant positivity threshold
    int jorgensen_depth = 4; // default word-search depth
    std::uint64_t seed = 0x5eed2026u;
};

inline const Tolerances& default_tol() {
    static const Tolerances t{};
    return t;
}

enum class errc {
    non_positive_determinant,
    not_elliptic,
    not_boundary_fixing,
    no_boundary_fixed_point,
    identity_input,
    invalid_angle,
    boundary_center,
    relation_violated,
    rounding_ambiguous,
    sign_ambiguous,
    not_hyperbolic_commutator,
    defect_out_of_range,
    invalid_signature,
    not_cocompact,
    not_hyperbolic_triple,
    solver_no_convergence,
    not_hyperbolic,
    euler_out_of_range,
    identity_b1,
    not_in_e,
    no_rational_in_range,
    first_commutator_not_hyperbolic,
    bad_precondition,
    parse_error,
    io_error,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace fuchsian
