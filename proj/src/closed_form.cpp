#include "regge/closed_form.hpp"

#include <cmath>

namespace regge {

PowerLawTerms::PowerLawTerms(double exponent, double q, double alpha0,
                             ClosedFormConstants constants)
    : v_(exponent), q_(q), alpha0_(alpha0), constants_(constants) {
    if (!(exponent > -2.0)) throw ValidationError("exponent must exceed -2");
    if (!(alpha0 > 0.0)) throw ValidationError("alpha0 must be positive");
}

double PowerLawTerms::term(int k) const {
    const double v = v_;
    const double q = q_;
    const double vf = (v - 2.0) * (v + 1.0); // common factor of orders 2..4
    switch (k) {
        case 0:
            return alpha0_;
        case 1:
            return -0.5 * (1.0 + q * std::sqrt(v + 2.0));
        case 2:
            return vf * (3.0 * q * q - 1.0) / (288.0 * alpha0_);
        case 3: {
            const double cubic = (5.0 * v * v - 29.0 * v - 58.0) * q * q * q -
                                 (v * v - 25.0 * v - 50.0) * q;
            return -vf * cubic / (13824.0 * alpha0_ * alpha0_ * std::sqrt(v + 2.0));
        }
        case 4: {
            const double c4 = ((2415.0 * v - 70170.0) * v + 24615.0) * v * v +
                              659820.0 * v + 659820.0;
            const double c2 = ((3270.0 * v + 59340.0) * v - 138330.0) * v * v -
                              1028040.0 * v - 1028040.0;
            const double c0 = ((-613.0 * v + 974.0) * v + 46947.0) * v * v +
                              179996.0 * v + 179996.0;
            const double q2 = q * q;
            const double poly = (c4 * q2 + c2) * q2 + c0;
            return vf * poly /
                   (constants_.h4_denominator * (v + 2.0) * alpha0_ * alpha0_ * alpha0_);
        }
        default:
            throw ValidationError("closed form defined through order 4 only");
    }
}

double PowerLawTerms::sum(double hbar) const {
    double out = 0.0;
    for (int k = 4; k >= 0; --k) out = term(k) + hbar * out;
    return out;
}

double power_law_alpha0(double amplitude, double exponent, double mass, double energy) {
    const double base = 2.0 * energy / (amplitude * (exponent + 2.0));
    if (!(exponent * amplitude > 0.0) || !(exponent > -2.0))
        throw ValidationError("power law outside the confining branch");
    if (!(base > 0.0) || !(mass > 0.0))
        throw ValidationError("energy outside the physical range of the power law");
    return std::sqrt(exponent * mass * amplitude) *
           std::pow(base, (exponent + 2.0) / (2.0 * exponent));
}

double alpha4_powerlaw(double amplitude, double exponent, double mass, double energy,
                       int nodes, double hbar, ClosedFormConstants constants) {
    if (nodes < 0) throw ValidationError("node count must be non-negative");
    const double alpha0 = power_law_alpha0(amplitude, exponent, mass, energy);
    const PowerLawTerms terms(exponent, 2.0 * nodes + 1.0, alpha0, constants);
    return terms.sum(hbar);
}

} // namespace regge
