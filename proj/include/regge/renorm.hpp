#pragma once

#include <array>

#include "regge/engine.hpp"

namespace regge {

/// Two-parameter mass repartition m = m0 + m1*hbar + m2*hbar^2 with
/// m0 + m1*hbar_eval + m2*hbar_eval^2 = physical_mass, so every choice of
/// (m1, m2) represents the same physical mass at the evaluation point and
/// (m1, m2) = (0, 0) is the identity.
struct MassExpansion {
    double m0 = 0.0;
    double m1 = 0.0;
    double m2 = 0.0;
    double physical_mass = 0.0;
    double hbar_eval = 1.0;

    /// Builds the split with m0 tied to the constraint; throws
    /// ValidationError unless m0 > 0.
    static MassExpansion split(double physical_mass, double m1, double m2,
                               double hbar_eval = 1.0);
    static MassExpansion identity(double physical_mass, double hbar_eval = 1.0) {
        return split(physical_mass, 0.0, 0.0, hbar_eval);
    }
};

/// Renormalized trajectory series alpha~_0..alpha~_N.
Expansion renorm_expand(const Potential& pot, double energy, const MassExpansion& me,
                        int nodes, int order);

enum class Scheme {
    MinimalSensitivity,  ///< d(alpha~)/dm1 = d(alpha~)/dm2 = 0
    FastestConvergence,  ///< alpha~_3 = alpha~_4 = 0
};

struct SolverConfig {
    double hbar = 1.0;
    double tol_rel = 1e-10;       ///< residual tolerance relative to |alpha~_0|
    int max_iterations = 100;
    double deriv_step = 1e-4;     ///< 5-point stencil scale for sensitivity residuals
    double jacobian_step = 1e-6;  ///< central-difference scale for the Newton Jacobian
    bool multistart = true;       ///< grid of starts if the origin start fails
    double degenerate_condition = 1e12;
};

struct SchemeResult {
    Scheme scheme = Scheme::FastestConvergence;
    double m1 = 0.0;
    double m2 = 0.0;
    double alpha_tilde = 0.0;            ///< renormalized alpha~^(N) at hbar
    std::array<double, 2> residuals{};   ///< the two solved equations at the solution
    int iterations = 0;
    bool degenerate = false;             ///< Jacobian condition exceeded the threshold
    MassExpansion mass;
    Expansion expansion;
};

/// Principle of minimal sensitivity. Only order 4 is defined.
SchemeResult solve_scheme1(const Potential& pot, double energy, double mass, int nodes,
                           int order = 4, const SolverConfig& cfg = {});

/// Principle of fastest convergence.
SchemeResult solve_scheme2(const Potential& pot, double energy, double mass, int nodes,
                           int order = 4, const SolverConfig& cfg = {});

/// All distinct scheme roots found from a multistart grid over
/// [-0.5 m, 0.5 m]^2, sorted by distance of (m1/m, m2/m) from the origin.
/// Used for reporting when competing roots exist.
std::vector<SchemeResult> find_scheme_roots(const Potential& pot, double energy, double mass,
                                            int nodes, Scheme scheme, int order = 4,
                                            const SolverConfig& cfg = {});

} // namespace regge
