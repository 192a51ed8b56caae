#include "regge/renorm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

namespace regge {

MassExpansion MassExpansion::split(double physical_mass, double m1, double m2,
                                   double hbar_eval) {
    if (!(physical_mass > 0.0)) throw ValidationError("physical mass must be positive");
    MassExpansion me;
    me.physical_mass = physical_mass;
    me.hbar_eval = hbar_eval;
    me.m1 = m1;
    me.m2 = m2;
    me.m0 = physical_mass - m1 * hbar_eval - m2 * hbar_eval * hbar_eval;
    if (!(me.m0 > 0.0)) throw ValidationError("m0 must remain positive");
    return me;
}

Expansion renorm_expand(const Potential& pot, double energy, const MassExpansion& me,
                        int nodes, int order) {
    return expand(pot, energy, me.m0, MassTerms{me.m1, me.m2}, nodes, order);
}

namespace {

using Vec2 = std::array<double, 2>;

double norm_inf(const Vec2& v) { return std::max(std::fabs(v[0]), std::fabs(v[1])); }

struct SchemeProblem {
    const Potential& pot;
    double energy;
    double mass;
    int nodes;
    int order;
    Scheme scheme;
    SolverConfig cfg;

    std::optional<Expansion> expansion_at(const Vec2& p) const {
        const double m0 = mass - p[0] * cfg.hbar - p[1] * cfg.hbar * cfg.hbar;
        if (!(m0 > 0.0)) return std::nullopt; // reject, do not crash
        try {
            return expand(pot, energy, m0, MassTerms{p[0], p[1]}, nodes, order);
        } catch (const Error&) {
            return std::nullopt; // lost the orbit at this trial point
        }
    }

    std::optional<double> value_at(const Vec2& p) const {
        auto e = expansion_at(p);
        if (!e) return std::nullopt;
        return e->evaluate(cfg.hbar);
    }

    /// Residual system: the two scheme equations at parameters p.
    std::optional<Vec2> residual(const Vec2& p) const {
        if (scheme == Scheme::FastestConvergence) {
            auto e = expansion_at(p);
            if (!e) return std::nullopt;
            return Vec2{e->alpha[3], e->alpha[4]};
        }
        // Minimal sensitivity: 5-point central derivatives of the sum.
        Vec2 out{};
        for (int dir = 0; dir < 2; ++dir) {
            const double h = cfg.deriv_step * std::max(1.0, std::fabs(p[dir]));
            Vec2 q = p;
            double f[4];
            const double offs[4] = {2.0 * h, h, -h, -2.0 * h};
            for (int s = 0; s < 4; ++s) {
                q[dir] = p[dir] + offs[s];
                auto v = value_at(q);
                if (!v) return std::nullopt;
                f[s] = *v;
            }
            out[dir] = (-f[0] + 8.0 * f[1] - 8.0 * f[2] + f[3]) / (12.0 * h);
        }
        return out;
    }

    double residual_tol(double alpha0_scale) const {
        double tol = cfg.tol_rel * std::fabs(alpha0_scale);
        if (scheme == Scheme::MinimalSensitivity) tol /= std::max(mass, 1e-30);
        return tol;
    }
};

struct NewtonOutcome {
    Vec2 p{};
    Vec2 res{};
    int iterations = 0;
    bool converged = false;
    double jacobian_condition = 0.0;
};

/// 2x2 Jacobian of the residual by central differences.
std::optional<std::array<Vec2, 2>> numeric_jacobian(const SchemeProblem& prob,
                                                    const Vec2& p) {
    std::array<Vec2, 2> J{}; // J[row][col]
    for (int col = 0; col < 2; ++col) {
        const double h = prob.cfg.jacobian_step * std::max(1.0, std::fabs(p[col]));
        Vec2 fwd = p, bwd = p;
        fwd[col] += h;
        bwd[col] -= h;
        auto rf = prob.residual(fwd);
        auto rb = prob.residual(bwd);
        if (!rf || !rb) return std::nullopt;
        J[0][col] = ((*rf)[0] - (*rb)[0]) / (2.0 * h);
        J[1][col] = ((*rf)[1] - (*rb)[1]) / (2.0 * h);
    }
    return J;
}

double condition_estimate(const std::array<Vec2, 2>& J) {
    const double det = J[0][0] * J[1][1] - J[0][1] * J[1][0];
    const double norm = std::max(std::fabs(J[0][0]) + std::fabs(J[0][1]),
                                 std::fabs(J[1][0]) + std::fabs(J[1][1]));
    if (det == 0.0) return std::numeric_limits<double>::infinity();
    const double inv_norm = std::max(std::fabs(J[1][1]) + std::fabs(J[0][1]),
                                     std::fabs(J[1][0]) + std::fabs(J[0][0])) /
                            std::fabs(det);
    return norm * inv_norm;
}

NewtonOutcome newton_solve(const SchemeProblem& prob, Vec2 start, double tol) {
    NewtonOutcome out;
    out.p = start;
    auto res = prob.residual(out.p);
    if (!res) return out;
    out.res = *res;

    for (out.iterations = 0; out.iterations < prob.cfg.max_iterations; ++out.iterations) {
        if (norm_inf(out.res) <= tol) {
            out.converged = true;
            break;
        }
        auto J = numeric_jacobian(prob, out.p);
        if (!J) break;
        const auto& m = *J;
        const double det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        if (det == 0.0 || !std::isfinite(det)) break;
        const Vec2 step = {(-out.res[0] * m[1][1] + out.res[1] * m[0][1]) / det,
                           (-out.res[1] * m[0][0] + out.res[0] * m[1][0]) / det};
        double lambda = 1.0;
        bool accepted = false;
        while (lambda > 1e-10) {
            const Vec2 q = {out.p[0] + lambda * step[0], out.p[1] + lambda * step[1]};
            auto rq = prob.residual(q);
            if (rq && norm_inf(*rq) < norm_inf(out.res)) {
                out.p = q;
                out.res = *rq;
                accepted = true;
                break;
            }
            lambda *= 0.5;
        }
        if (!accepted) break; // stalled
    }
    if (auto J = numeric_jacobian(prob, out.p))
        out.jacobian_condition = condition_estimate(*J);
    else
        out.jacobian_condition = std::numeric_limits<double>::infinity();
    return out;
}

SchemeResult package(const SchemeProblem& prob, const NewtonOutcome& nw) {
    SchemeResult r;
    r.scheme = prob.scheme;
    r.m1 = nw.p[0];
    r.m2 = nw.p[1];
    r.residuals = nw.res;
    r.iterations = nw.iterations;
    r.degenerate = nw.jacobian_condition > prob.cfg.degenerate_condition;
    r.mass = MassExpansion::split(prob.mass, nw.p[0], nw.p[1], prob.cfg.hbar);
    r.expansion = renorm_expand(prob.pot, prob.energy, r.mass, prob.nodes, prob.order);
    r.alpha_tilde = r.expansion.evaluate(prob.cfg.hbar);
    return r;
}

/// All distinct converged roots from the multistart grid, closest to the
/// origin (in units of the physical mass) first.
std::vector<SchemeResult> root_census(const SchemeProblem& prob, double tol) {
    std::vector<SchemeResult> roots;
    auto add = [&](const NewtonOutcome& nw) {
        if (!nw.converged) return;
        for (const auto& r : roots)
            if (std::hypot(r.m1 - nw.p[0], r.m2 - nw.p[1]) < 1e-6 * std::max(1.0, prob.mass))
                return;
        roots.push_back(package(prob, nw));
    };
    add(newton_solve(prob, {0.0, 0.0}, tol));
    for (double s1 = -0.5; s1 <= 0.5; s1 += 0.25)
        for (double s2 = -0.5; s2 <= 0.5; s2 += 0.25)
            add(newton_solve(prob, {s1 * prob.mass, s2 * prob.mass}, tol));
    std::sort(roots.begin(), roots.end(), [&](const SchemeResult& a, const SchemeResult& b) {
        return std::hypot(a.m1 / prob.mass, a.m2 / prob.mass) <
               std::hypot(b.m1 / prob.mass, b.m2 / prob.mass);
    });
    return roots;
}

SchemeResult solve_scheme(const Potential& pot, double energy, double mass, int nodes,
                          Scheme scheme, int order, const SolverConfig& cfg) {
    if (order != 4)
        throw ValidationError("renormalization schemes are defined at order 4");
    if (!(mass > 0.0)) throw ValidationError("mass must be positive");

    SchemeProblem prob{pot, energy, mass, nodes, order, scheme, cfg};
    const double alpha0_scale = expand(pot, energy, mass, nodes, 0).alpha[0];
    const double tol = prob.residual_tol(alpha0_scale);

    NewtonOutcome nw = newton_solve(prob, {0.0, 0.0}, tol);
    if (nw.converged) return package(prob, nw);

    if (cfg.multistart) {
        auto roots = root_census(prob, tol);
        if (!roots.empty()) return roots.front();
    }
    throw ConvergenceError("renormalization scheme solver did not converge");
}

} // namespace

SchemeResult solve_scheme1(const Potential& pot, double energy, double mass, int nodes,
                           int order, const SolverConfig& cfg) {
    return solve_scheme(pot, energy, mass, nodes, Scheme::MinimalSensitivity, order, cfg);
}

SchemeResult solve_scheme2(const Potential& pot, double energy, double mass, int nodes,
                           int order, const SolverConfig& cfg) {
    return solve_scheme(pot, energy, mass, nodes, Scheme::FastestConvergence, order, cfg);
}

std::vector<SchemeResult> find_scheme_roots(const Potential& pot, double energy, double mass,
                                            int nodes, Scheme scheme, int order,
                                            const SolverConfig& cfg) {
    if (order != 4)
        throw ValidationError("renormalization schemes are defined at order 4");
    SchemeProblem prob{pot, energy, mass, nodes, order, scheme, cfg};
    const double alpha0_scale = expand(pot, energy, mass, nodes, 0).alpha[0];
    return root_census(prob, prob.residual_tol(alpha0_scale));
}

} // namespace regge
