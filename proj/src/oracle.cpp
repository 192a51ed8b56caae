#include "regge/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "regge/errors.hpp"
#include "regge/kernels.hpp"

namespace regge {

namespace {

/// magnitude that triggers mid-sweep renormalization
constexpr double kRescaleLimit = 1e280;
constexpr double kRescaleFactor = 1e-280;

/// normalized matching-defect size accepted as an eigenvalue
constexpr double kDefectTol = 1e-9;

/// tail magnitude (relative to max|u|) above which the box is too small
constexpr double kTailTol = 1e-6;

struct RadialGrid {
    double r_min = 0.0;
    double r_max = 0.0;
    double h = 0.0;
    int points = 0;
    double c = 0.0;           // 2m / hbar^2
    std::vector<double> r;
    std::vector<double> base; // c V(r) + l(l+1)/r^2
};

RadialGrid make_grid(const Potential& pot, double mass, double hbar, double l,
                     double r_min, double r_max, int points) {
    RadialGrid grid;
    grid.r_min = r_min;
    grid.r_max = r_max;
    grid.points = points;
    grid.h = (r_max - r_min) / (points - 1);
    grid.c = 2.0 * mass / (hbar * hbar);
    grid.r.resize(points);
    for (int i = 0; i < points; ++i) grid.r[i] = r_min + grid.h * i;

    std::vector<double> vterm(points), cterm(points);
    for (int i = 0; i < points; ++i) {
        vterm[i] = pot(grid.r[i]);
        cterm[i] = 1.0 / (grid.r[i] * grid.r[i]);
    }
    grid.base.resize(points);
    kernels::axpby(grid.c, vterm, l * (l + 1.0), cterm, grid.base);
    return grid;
}

/// Outermost radius where V(r) = energy, by geometric scan + bisection.
double outer_turning_radius(const Potential& pot, double energy) {
    double lo = 1e-6, hi = 1e-6;
    bool bracketed = false;
    for (double r = 1e-6; r <= 1e8; r *= 1.5) {
        if (pot(r) > energy) {
            hi = r;
            bracketed = true;
            break;
        }
        lo = r;
    }
    if (!bracketed) throw GridError("potential never exceeds the trial energy");
    for (int it = 0; it < 200 && (hi - lo) > 1e-10 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (pot(mid) > energy ? hi : lo) = mid;
    }
    return hi;
}

/// Radius where the accumulated WKB decay exponent beyond the turning
/// point reaches `exponent`.
double decay_radius(const Potential& pot, double mass, double hbar, double energy,
                    double r_turn, double exponent) {
    const double c = 2.0 * mass / (hbar * hbar);
    const double step = std::max(r_turn, 1e-3) / 512.0;
    double acc = 0.0;
    double r = r_turn;
    double kappa_prev = 0.0;
    while (acc < exponent) {
        r += step;
        const double q = c * (pot(r) - energy);
        const double kappa = q > 0.0 ? std::sqrt(q) : 0.0;
        acc += 0.5 * (kappa + kappa_prev) * step;
        kappa_prev = kappa;
        if (r > r_turn * 1e5 + 1e3)
            throw GridError("decay exponent unreachable: potential too shallow");
    }
    return r;
}

struct Factors {
    std::vector<double> f, g, d;
};

void build_factors(const RadialGrid& grid, double energy, Factors& fac) {
    fac.f.resize(grid.points);
    fac.g.resize(grid.points);
    fac.d.resize(grid.points);
    kernels::shift(grid.base, -grid.c * energy, fac.f);
    kernels::numerov_factors(fac.f, grid.h, fac.g, fac.d);
}

/// Outward Numerov sweep over [0, last]; writes u into `u` (pre-sized).
/// Stored entries keep consistent relative sign through renormalization.
void sweep_outward(const Factors& fac, const RadialGrid& grid, double l, int last,
                   std::vector<double>& u) {
    const auto& g = fac.g;
    const auto& d = fac.d;
    u[0] = std::pow(grid.r[0], l + 1.0);
    if (last == 0) return;
    u[1] = std::pow(grid.r[1], l + 1.0);
    for (int i = 1; i < last; ++i) {
        u[i + 1] = (d[i] * u[i] - g[i - 1] * u[i - 1]) / g[i + 1];
        if (std::fabs(u[i + 1]) > kRescaleLimit) {
            for (int j = 0; j <= i + 1; ++j) u[j] *= kRescaleFactor;
        }
    }
}

/// Inward Numerov sweep from the outer boundary down to `first`; writes
/// into u[first..points-1]. u(r_max) = 0 exactly.
void sweep_inward(const Factors& fac, const RadialGrid& grid, int first,
                  std::vector<double>& u) {
    const auto& g = fac.g;
    const auto& d = fac.d;
    const int last = grid.points - 1;
    u[last] = 0.0;
    u[last - 1] = 1e-20;
    for (int i = last - 1; i > first; --i) {
        u[i - 1] = (d[i] * u[i] - g[i + 1] * u[i + 1]) / g[i - 1];
        if (std::fabs(u[i - 1]) > kRescaleLimit) {
            for (int j = i - 1; j <= last; ++j) u[j] *= kRescaleFactor;
        }
    }
}

int count_nodes(const RadialGrid& grid, double energy, double l, Factors& fac,
                std::vector<double>& buf) {
    build_factors(grid, energy, fac);
    buf.resize(grid.points);
    sweep_outward(fac, grid, l, grid.points - 1, buf);
    return static_cast<int>(kernels::count_sign_flips(buf));
}

/// Index of the outermost sign change of f (classically allowed -> forbidden).
int match_index(const Factors& fac, int points) {
    for (int i = points - 3; i >= 2; --i)
        if (fac.f[i] < 0.0) return i;
    return points / 2;
}

struct DefectData {
    double value = 0.0;  // normalized three-term mismatch at the match point
    int match = 0;
};

DefectData matching_defect(const RadialGrid& grid, double energy, double l, Factors& fac,
                           std::vector<double>& ul, std::vector<double>& ur) {
    build_factors(grid, energy, fac);
    const int mc = match_index(fac, grid.points);
    ul.resize(grid.points);
    ur.resize(grid.points);
    sweep_outward(fac, grid, l, mc + 1, ul);
    sweep_inward(fac, grid, mc - 1, ur);
    double scale = 1.0;
    if (ur[mc] != 0.0 && ul[mc] != 0.0) scale = ul[mc] / ur[mc];
    const double t1 = fac.g[mc - 1] * ul[mc - 1];
    const double t2 = fac.g[mc + 1] * ur[mc + 1] * scale;
    const double t3 = fac.d[mc] * ul[mc];
    const double norm = std::fabs(t1) + std::fabs(t2) + std::fabs(t3);
    DefectData out;
    out.match = mc;
    out.value = norm > 0.0 ? (t1 + t2 - t3) / norm : 0.0;
    return out;
}

/// Assembled, max-normalized wavefunction at the converged energy.
std::vector<double> assemble(const RadialGrid& grid, double energy, double l, Factors& fac) {
    std::vector<double> ul, ur;
    const DefectData dd = matching_defect(grid, energy, l, fac, ul, ur);
    const int mc = dd.match;
    std::vector<double> u(grid.points);
    for (int i = 0; i <= mc; ++i) u[i] = ul[i];
    const double scale = (ur[mc] != 0.0) ? ul[mc] / ur[mc] : 1.0;
    for (int i = mc + 1; i < grid.points; ++i) u[i] = ur[i] * scale;
    const double m = kernels::max_abs(u);
    if (m > 0.0)
        for (double& x : u) x /= m;
    return u;
}

struct GridSolve {
    double energy = 0.0;
    double defect = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Locate the n-th eigenvalue on a fixed grid inside [e_lo, e_hi]
/// (node counts at the ends must straddle n). Bisection on the node
/// count, then secant on the matching defect.
GridSolve solve_on_grid(const RadialGrid& grid, double l, int n, double e_lo, double e_hi,
                        const EigenConfig& cfg) {
    Factors fac;
    std::vector<double> buf, ul, ur;
    GridSolve out;
    int iters = 0;

    double lo = e_lo, hi = e_hi;
    const double scale = std::max({std::fabs(lo), std::fabs(hi), 1.0});
    while (hi - lo > 1e-7 * scale && iters < cfg.max_iterations) {
        const double mid = 0.5 * (lo + hi);
        (count_nodes(grid, mid, l, fac, buf) <= n ? lo : hi) = mid;
        ++iters;
    }

    double a = lo, b = hi;
    double fa = matching_defect(grid, a, l, fac, ul, ur).value;
    double fb = matching_defect(grid, b, l, fac, ul, ur).value;
    double e = 0.5 * (a + b), fe = 0.0;
    if (fa * fb > 0.0) {
        // defect did not change sign across the narrow node bracket;
        // fall back to node bisection all the way down
        while (b - a > cfg.energy_rel_tol * scale && iters < cfg.max_iterations) {
            const double mid = 0.5 * (a + b);
            (count_nodes(grid, mid, l, fac, buf) <= n ? a : b) = mid;
            ++iters;
        }
        e = 0.5 * (a + b);
        fe = matching_defect(grid, e, l, fac, ul, ur).value;
    } else {
        for (; iters < cfg.max_iterations; ++iters) {
            e = (fb != fa) ? b - fb * (b - a) / (fb - fa) : 0.5 * (a + b);
            if (!(e > std::min(a, b) && e < std::max(a, b))) e = 0.5 * (a + b);
            fe = matching_defect(grid, e, l, fac, ul, ur).value;
            if (fa * fe <= 0.0) {
                b = e;
                fb = fe;
            } else {
                a = e;
                fa = fe;
            }
            if (std::fabs(b - a) <= cfg.energy_rel_tol * std::max(std::fabs(e), 1.0) ||
                fe == 0.0)
                break;
        }
    }
    out.energy = e;
    out.defect = fe;
    out.iterations = iters;
    out.converged = std::fabs(fe) <= kDefectTol;
    return out;
}

struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
};

/// Infimum of the effective potential over the scan range: every bound
/// state lies above it.
double effective_floor(const Potential& pot, double mass, double hbar, double l) {
    double vmin = std::numeric_limits<double>::infinity();
    const double cf = hbar * hbar * l * (l + 1.0) / (2.0 * mass);
    for (double r = 1e-6; r <= 1e6; r *= 1.1) {
        const double ve = pot(r) + cf / (r * r);
        vmin = std::min(vmin, ve);
    }
    return vmin;
}

/// Energy bracket containing the n-th eigenvalue, built by growing the
/// upper end until the node count exceeds n. Each trial energy gets a
/// grid sized for it.
Bracket bootstrap_bracket(const Potential& pot, double mass, double hbar, double l, int n,
                          const EigenConfig& cfg, RadialGrid& grid) {
    const double floor_e = effective_floor(pot, mass, hbar, l);
    const double e_lo = floor_e + std::max(1e-12, 1e-12 * std::fabs(floor_e));
    double delta = std::max(1e-3, 1e-3 * std::fabs(floor_e));
    Factors fac;
    std::vector<double> buf;
    for (int it = 0; it < 80; ++it) {
        const double e_hi = floor_e + delta;
        const double r_turn = outer_turning_radius(pot, e_hi);
        const double r_max = decay_radius(pot, mass, hbar, e_hi, r_turn, cfg.decay_exponent);
        const double r_min = cfg.r_min_scale * r_turn;
        grid = make_grid(pot, mass, hbar, l, r_min, r_max, cfg.points);
        if (count_nodes(grid, e_hi, l, fac, buf) > n) return {e_lo, e_hi};
        delta *= 2.0;
    }
    throw ConvergenceError("failed to bracket the requested state");
}

double tail_fraction(const RadialGrid& grid, const std::vector<double>& u) {
    const int tail = std::max(grid.points / 100, 2);
    const std::span<const double> tail_span(u.data() + grid.points - tail, tail);
    return kernels::max_abs(tail_span); // u is max-normalized
}

EigenResult solve_impl(const Potential& pot, double mass, double hbar, double l, int n,
                       const EigenConfig& cfg, bool allow_extend) {
    RadialGrid grid;
    Bracket br = bootstrap_bracket(pot, mass, hbar, l, n, cfg, grid);

    GridSolve sol = solve_on_grid(grid, l, n, br.lo, br.hi, cfg);
    int points = cfg.points;
    bool richardson_ok = false;

    // Richardson loop: double the density until the eigenvalue is stable.
    for (int ref = 0; ref < cfg.max_refinements; ++ref) {
        const int finer = 2 * points - 1;
        RadialGrid fine = make_grid(pot, mass, hbar, l, grid.r_min, grid.r_max, finer);
        const double width = std::max(1e-6 * std::fabs(sol.energy), 1e-9);
        GridSolve fine_sol =
            solve_on_grid(fine, l, n, sol.energy - width, sol.energy + width, cfg);
        const double change = std::fabs(fine_sol.energy - sol.energy);
        grid = std::move(fine);
        sol = fine_sol;
        points = finer;
        if (change <= cfg.richardson_rel * std::max(std::fabs(sol.energy), 1.0)) {
            richardson_ok = true;
            break;
        }
    }

    Factors fac;
    std::vector<double> u = assemble(grid, sol.energy, l, fac);
    const int found_nodes = static_cast<int>(kernels::count_sign_flips(u));

    if (tail_fraction(grid, u) > kTailTol) {
        if (allow_extend) {
            EigenConfig wider = cfg;
            wider.decay_exponent = cfg.decay_exponent * 2.0;
            return solve_impl(pot, mass, hbar, l, n, wider, false);
        }
        throw GridError("wavefunction not decayed at the outer boundary");
    }
    if (found_nodes != n)
        throw ConvergenceError("converged state has the wrong node count");

    EigenResult out;
    out.energy = sol.energy;
    out.nodes = found_nodes;
    out.l = l;
    out.r_min = grid.r_min;
    out.r_max = grid.r_max;
    out.points = points;
    out.converged = sol.converged && richardson_ok;
    out.residual = sol.defect;
    return out;
}

} // namespace

EigenResult solve_eigenvalue(const Potential& pot, double mass, double hbar, double l,
                             int n, const EigenConfig& cfg) {
    if (!(mass > 0.0) || !(hbar > 0.0)) throw ValidationError("mass and hbar must be positive");
    if (l < 0.0) throw ValidationError("l must be non-negative");
    if (n < 0) throw ValidationError("node count must be non-negative");
    if (cfg.points < 16) throw ValidationError("grid too coarse");
    return solve_impl(pot, mass, hbar, l, n, cfg, true);
}

double exact_regge(const Potential& pot, double mass, double hbar, double energy, int n,
                   const EigenConfig& cfg) {
    auto level = [&](double l) {
        return solve_eigenvalue(pot, mass, hbar, l, n, cfg).energy;
    };
    double lo = 0.0;
    double e_lo = level(lo);
    const double tol_e = 1e-9 * std::max(std::fabs(energy), 1.0);
    if (energy < e_lo - tol_e)
        throw OutOfRangeError("energy below the l = 0 state with this node count");
    double hi = 1.0, e_hi = level(hi);
    while (e_hi < energy) {
        lo = hi;
        e_lo = e_hi;
        hi *= 2.0;
        if (hi > 1024.0) throw OutOfRangeError("no l <= 1024 reaches this energy");
        e_hi = level(hi);
    }
    // secant with bisection safeguard on E(l) - energy
    double fa = e_lo - energy, fb = e_hi - energy;
    double l_mid = 0.5 * (lo + hi);
    for (int it = 0; it < 100; ++it) {
        l_mid = (fb != fa) ? hi - fb * (hi - lo) / (fb - fa) : 0.5 * (lo + hi);
        if (!(l_mid > lo && l_mid < hi)) l_mid = 0.5 * (lo + hi);
        const double fm = level(l_mid) - energy;
        if (fa * fm <= 0.0) {
            hi = l_mid;
            fb = fm;
        } else {
            lo = l_mid;
            fa = fm;
        }
        if (std::fabs(fm) <= tol_e || hi - lo <= 1e-10 * std::max(1.0, hi)) break;
    }
    return l_mid;
}

} // namespace regge
