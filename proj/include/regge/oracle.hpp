#pragma once

#include "regge/potential.hpp"

namespace regge {

/// Radial eigenvalue solver configuration. The grid is uniform; the outer
/// boundary adapts to the WKB decay exponent and the density is refined
/// (doubled) until two successive solutions agree to richardson_rel.
struct EigenConfig {
    int points = 40000;
    double r_min_scale = 1e-6;     ///< r_min = scale * (outer turning radius)
    double decay_exponent = 40.0;  ///< WKB exponent accumulated beyond the turning point
    double energy_rel_tol = 1e-12;
    double richardson_rel = 1e-8;
    int max_refinements = 3;
    int max_iterations = 200;
    double boundary_tol = 1e-9;    ///< |u| at the endpoints relative to max|u|
};

struct EigenResult {
    double energy = 0.0;
    int nodes = 0;     ///< node count of u on (0, inf), equal to the requested n
    double l = 0.0;    ///< (real) orbital parameter
    double r_min = 0.0;
    double r_max = 0.0;
    int points = 0;
    bool converged = false;
    double residual = 0.0;  ///< normalized shooting mismatch at the matching point
};

/// Bound-state energy E_{n,l} of the radial equation
///   -(hbar^2/2m) u'' + [hbar^2 l(l+1)/(2m r^2) + V(r)] u = E u,
/// u(0) = u(inf) = 0, with real l >= 0 and n = number of nodes.
/// Numerov integration outward/inward with node-count bisection followed
/// by secant refinement of the matching defect.
EigenResult solve_eigenvalue(const Potential& pot, double mass, double hbar, double l,
                             int n, const EigenConfig& cfg = {});

/// Inverse of the spectrum in l at fixed node count: the real l such that
/// E_{n,l} equals the given energy. Throws OutOfRangeError if no state
/// with n nodes exists at this energy.
double exact_regge(const Potential& pot, double mass, double hbar, double energy, int n,
                   const EigenConfig& cfg = {});

} // namespace regge
