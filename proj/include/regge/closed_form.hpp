#pragma once

#include "regge/errors.hpp"

namespace regge {

/// Constants of the fourth-order power-law closed form that are kept
/// configurable. The published hbar^4 denominator is garbled in print;
/// the default below is the value recovered exactly from the recurrence
/// engine (the equivalence tests re-derive and report it).
struct ClosedFormConstants {
    double h4_denominator = 298598400.0;
};

/// Explicit closed-form terms of the power-law trajectory through order
/// hbar^4. term(k) is the coefficient of hbar^k; q = 2n + 1 enters as a
/// free real parameter so parity properties can be probed directly.
class PowerLawTerms {
public:
    PowerLawTerms(double exponent, double q, double alpha0,
                  ClosedFormConstants constants = {});

    double term(int k) const; ///< k in [0, 4]
    double sum(double hbar) const;

    double q() const { return q_; }
    double exponent() const { return v_; }
    double alpha0() const { return alpha0_; }

private:
    double v_;
    double q_;
    double alpha0_;
    ClosedFormConstants constants_;
};

/// Classical angular momentum of the power-law orbit,
/// alpha0 = sqrt(v m A) (2E / (A(v+2)))^((v+2)/(2v)).
double power_law_alpha0(double amplitude, double exponent, double mass, double energy);

/// Direct evaluation of the five-term closed form; independent of the
/// recurrence engine. Throws ValidationError outside the confining branch.
double alpha4_powerlaw(double amplitude, double exponent, double mass, double energy,
                       int nodes, double hbar, ClosedFormConstants constants = {});

} // namespace regge
