#pragma once

#include <vector>

#include "regge/potential.hpp"

namespace regge {

/// hbar^k sources from a truncated mass expansion m = m0 + m1*hbar + m2*hbar^2.
/// Zero for plain (unrenormalized) trajectories; the orbit itself must be
/// built with m0.
struct MassTerms {
    double m1 = 0.0;
    double m2 = 0.0;

    double term(int k) const { return k == 1 ? m1 : (k == 2 ? m2 : 0.0); }
    bool zero() const { return m1 == 0.0 && m2 == 0.0; }
};

/// Trajectory series alpha_0..alpha_N for one (E, n) query.
struct Expansion {
    std::vector<double> alpha;
    double energy = 0.0;
    int nodes = 0;       ///< radial quantum number n
    double mass0 = 0.0;  ///< mass the orbit was built with
    MassTerms mass_terms;

    int order() const { return static_cast<int>(alpha.size()) - 1; }

    /// Plain truncated sum  sum_k alpha_k hbar^k  (no resummation).
    double evaluate(double hbar) const;
};

/// Triangular table of Laurent coefficients C_i^k of the logarithmic
/// derivative, filled in the staged order that breaks the circular
/// dependency between row k and alpha_k:
///
///   fill_zeroth_row();
///   for k = 1..N: fill_row_low(k); alpha_step(k); fill_row_high(k);
///
/// Entries with i < 2k-2 never reference alpha_k; the entry i = 2k-2 is
/// fixed by the quantization condition (n/r0 for k = 1, zero otherwise);
/// entries with i > 2k-2 require alpha_k. Misuse throws
/// DependencyOrderError.
class CoeffTable {
public:
    CoeffTable(const Orbit& orbit, int nodes, int order, MassTerms mass_terms = {});

    void fill_zeroth_row();
    void fill_row_low(int k);   ///< columns i < 2k-2, then the quantized i = 2k-2
    double alpha_step(int k);   ///< computes and stores alpha_k
    void fill_row_high(int k);  ///< columns i in [2k-1, max_column()]

    int order() const { return order_; }
    int max_column() const { return width_; }
    int nodes() const { return nodes_; }
    int filled_up_to(int k) const;
    const Orbit& orbit() const { return orbit_; }

    /// Bounds-checked element access; throws std::out_of_range for bad
    /// indices and DependencyOrderError for entries not yet computed.
    double at(int k, int i) const;

    const std::vector<double>& alphas() const { return alpha_; }

private:
    double entry(int k, int i) const;          // unchecked source for the recurrences
    double recurrence_entry(int k, int i) const;

    Orbit orbit_;
    int nodes_ = 0;
    int order_ = 0;
    int width_ = 0;      // highest column index, 2N+2
    MassTerms mass_terms_;
    std::vector<std::vector<double>> c_;
    std::vector<int> filled_;                  // per-row high-water column, -1 = empty
    std::vector<double> alpha_;
};

/// Full trajectory series for (E, n) at order N. The orbit is built with
/// `mass`; i_max defaults to 2N+4 coefficients, which covers every index
/// the recurrences touch.
Expansion expand(const Potential& pot, double energy, double mass, int nodes, int order);

/// Same staged schedule with mass-expansion sources (the orbit uses mass0).
Expansion expand(const Potential& pot, double energy, double mass0, MassTerms mass_terms,
                 int nodes, int order);

} // namespace regge
