#include "regge/potential.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace regge {

namespace {

/// relative accuracy of the orbit-radius root finder
constexpr double kDefaultOrbitTol = 1e-12;

/// geometric scan range for bracketing the orbit radius of general potentials
constexpr double kScanLo = 1e-6;
constexpr double kScanHi = 1e6;
constexpr int kScanPerDecade = 4;

double falling_factorial(double v, int k) {
    double out = 1.0;
    for (int j = 0; j < k; ++j) out *= (v - j);
    return out;
}

} // namespace

Potential Potential::power_law(double amplitude, double exponent) {
    if (!std::isfinite(amplitude) || !std::isfinite(exponent))
        throw ValidationError("power law parameters must be finite");
    const bool rising = amplitude > 0.0 && exponent > 0.0;
    const bool inverse = amplitude < 0.0 && exponent > -2.0 && exponent < 0.0;
    if (!rising && !inverse)
        throw ValidationError("power law outside the confining branch: need A > 0, v > 0 "
                              "or A < 0, -2 < v < 0");
    Potential p;
    p.power_law_ = true;
    p.amplitude_ = amplitude;
    p.exponent_ = exponent;
    p.label_ = "powerlaw";
    return p;
}

Potential Potential::from_derivatives(DerivativeFn fn, std::string label) {
    if (!fn) throw ValidationError("derivative oracle must be callable");
    Potential p;
    p.fn_ = std::move(fn);
    p.label_ = std::move(label);
    return p;
}

double Potential::derivative(double r, int order) const {
    if (!(r > 0.0)) throw ValidationError("potential evaluated at r <= 0");
    if (order < 0) throw ValidationError("negative derivative order");
    if (power_law_)
        return amplitude_ * falling_factorial(exponent_, order) *
               std::pow(r, exponent_ - order);
    return fn_(r, order);
}

double Potential::amplitude() const {
    if (!power_law_) throw ValidationError("not a power-law potential");
    return amplitude_;
}

double Potential::exponent() const {
    if (!power_law_) throw ValidationError("not a power-law potential");
    return exponent_;
}

namespace {

/// Energy balance on the circular orbit: zero at the orbit radius.
double orbit_defect(const Potential& pot, double r, double energy) {
    return pot(r) + 0.5 * r * pot.derivative(r, 1) - energy;
}

/// V2 + 3/2 V1 in Taylor units; omega^2 = 2m * this, so positivity is the
/// (mass-independent) stability condition.
double stability_measure(const Potential& pot, double r0) {
    const double v1 = r0 * pot.derivative(r0, 1);
    const double v2 = 0.5 * r0 * r0 * pot.derivative(r0, 2);
    return v2 + 1.5 * v1;
}

double solve_radius_general(const Potential& pot, double energy, double rel_tol) {
    double lo = 0.0, hi = 0.0, flo = 0.0;
    double prev_r = kScanLo;
    double prev_g = orbit_defect(pot, prev_r, energy);
    const double step = std::pow(10.0, 1.0 / kScanPerDecade);
    for (double r = kScanLo * step; r <= kScanHi * step; r *= step) {
        const double g = orbit_defect(pot, r, energy);
        if (std::isfinite(g) && std::isfinite(prev_g) && prev_g * g <= 0.0) {
            lo = prev_r;
            hi = r;
            flo = prev_g;
            break;
        }
        prev_r = r;
        prev_g = g;
    }
    if (hi == 0.0)
        throw NoOrbitError("no circular orbit bracketed in the scan range");

    // Newton from the bracket midpoint, with bisection safeguard.
    double r = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        const double g = orbit_defect(pot, r, energy);
        if (g == 0.0) return r;
        if ((g > 0.0) == (flo > 0.0))
            lo = r;
        else
            hi = r;
        const double dg = 1.5 * pot.derivative(r, 1) + 0.5 * r * pot.derivative(r, 2);
        double next = r - g / dg;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        const double change = std::fabs(next - r);
        r = next;
        if (change <= rel_tol * r && std::fabs(orbit_defect(pot, r, energy)) <=
                                         rel_tol * std::max(std::fabs(energy), 1.0))
            return r;
    }
    throw NoOrbitError("orbit radius iteration did not converge");
}

} // namespace

double find_orbit_radius(const Potential& pot, double energy, double rel_tol) {
    if (!(rel_tol > 0)) rel_tol = kDefaultOrbitTol;
    double r0;
    if (pot.is_power_law()) {
        const double A = pot.amplitude();
        const double v = pot.exponent();
        const double base = 2.0 * energy / (A * (v + 2.0));
        if (!(base > 0.0))
            throw NoOrbitError("no circular orbit: energy outside the physical range");
        r0 = std::pow(base, 1.0 / v);
    } else {
        r0 = solve_radius_general(pot, energy, rel_tol);
    }
    const double defect = std::fabs(orbit_defect(pot, r0, energy));
    if (!(defect <= rel_tol * std::max(std::fabs(energy), 1.0) * 1e3) || !std::isfinite(r0))
        throw NoOrbitError("orbit radius fails the energy balance");
    if (!(stability_measure(pot, r0) > 0.0))
        throw UnstableOrbitError("circular orbit is not stable");
    return r0;
}

Orbit build_orbit(const Potential& pot, double energy, double mass, int i_max) {
    if (!(mass > 0.0)) throw ValidationError("mass must be positive");
    if (i_max < 2) throw ValidationError("i_max must be at least 2");

    Orbit orb;
    orb.energy = energy;
    orb.mass = mass;
    orb.r0 = find_orbit_radius(pot, energy);

    orb.v.resize(i_max + 1);
    if (pot.is_power_law()) {
        const double v = pot.exponent();
        double t = pot.amplitude() * std::pow(orb.r0, v); // A r0^v
        orb.v[0] = t;
        for (int i = 1; i <= i_max; ++i) {
            t *= (v - (i - 1)) / i;
            orb.v[i] = t;
        }
    } else {
        double scale = 1.0; // r0^i / i!
        orb.v[0] = pot(orb.r0);
        for (int i = 1; i <= i_max; ++i) {
            scale *= orb.r0 / i;
            orb.v[i] = scale * pot.derivative(orb.r0, i);
        }
    }

    const double w2 = 2.0 * mass * (orb.v[2] + 1.5 * orb.v[1]);
    if (!(w2 > 0.0)) throw UnstableOrbitError("omega^2 <= 0");
    orb.omega = std::sqrt(w2);

    orb.a.assign(std::max(i_max - 1, 1), 0.0);
    for (int i = 1; i <= i_max - 2; ++i)
        orb.a[i] = (2.0 * mass / w2) *
                   (orb.v[i + 2] + ((i % 2) ? -1.0 : 1.0) * 0.5 * (3.0 + i) * orb.v[1]);

    orb.alpha0 = std::sqrt(mass * orb.r0 * orb.r0 * orb.r0 * pot.derivative(orb.r0, 1));
    return orb;
}

} // namespace regge
