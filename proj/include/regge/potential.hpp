#pragma once

#include <functional>
#include <string>
#include <vector>

#include "regge/errors.hpp"

namespace regge {

/// Central potential V(r) on r > 0. Either an exact power law A r^v or a
/// general smooth form supplied through an analytic derivative oracle
/// (numerical differentiation is not accurate enough for the high-order
/// Taylor coefficients the recurrences consume).
class Potential {
public:
    /// fn(r, k) must return d^k V / dr^k at r > 0; k = 0 is V itself.
    using DerivativeFn = std::function<double(double r, int order)>;

    /// Confining power-law branch: A > 0, v > 0  or  A < 0, -2 < v < 0.
    static Potential power_law(double amplitude, double exponent);

    static Potential from_derivatives(DerivativeFn fn, std::string label = "general");

    double operator()(double r) const { return derivative(r, 0); }
    double derivative(double r, int order = 1) const;

    bool is_power_law() const { return power_law_; }
    double amplitude() const;
    double exponent() const;
    const std::string& label() const { return label_; }

private:
    Potential() = default;

    bool power_law_ = false;
    double amplitude_ = 0.0;
    double exponent_ = 0.0;
    DerivativeFn fn_;
    std::string label_;
};

/// Classical circular-orbit data at energy E. All members are fixed at
/// construction; instances are safe to share across threads.
struct Orbit {
    double energy = 0.0;
    double r0 = 0.0;       ///< orbit radius
    double alpha0 = 0.0;   ///< classical angular momentum sqrt(m r0^3 V'(r0))
    double omega = 0.0;    ///< sqrt(2 m (V2 + 3/2 V1)) > 0
    double mass = 0.0;     ///< mass entering omega and alpha0
    std::vector<double> v; ///< Taylor coefficients V_i of V in x = (r-r0)/r0
    std::vector<double> a; ///< normalized coefficients a_i (a[0] unused)
};

/// Radius of the classical circular orbit: the root of
/// V(r) + r V'(r)/2 = E. Power-law potentials use the closed form
/// r0 = (2E / (A (v+2)))^(1/v); general potentials are solved by a
/// geometric bracket scan followed by safeguarded Newton.
/// Throws NoOrbitError / UnstableOrbitError.
double find_orbit_radius(const Potential& pot, double energy, double rel_tol = 1e-12);

/// Taylor data of the effective well around r0, through coefficient index
/// i_max. Requires i_max >= 2 and a stable orbit.
Orbit build_orbit(const Potential& pot, double energy, double mass, int i_max);

} // namespace regge
