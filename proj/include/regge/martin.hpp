#pragma once

#include <array>

namespace regge {

/// Published benchmark for the Martin potential V(r) = r^0.1 (units
/// hbar = m = A = 1): fourth-order trajectory values at the energies of
/// the bound states with integer n and l, unrenormalized and for both
/// two-parameter renormalization schemes.
struct MartinRow {
    int n;
    int l;
    double alpha_unrenormalized;
    double alpha_scheme1;
    double alpha_scheme2;
};

inline constexpr std::array<MartinRow, 6> martin_benchmark = {{
    {1, 0, 0.00622, 0.00250, 0.00165},
    {1, 1, 1.00152, 1.00051, 1.00032},
    {2, 0, 0.02022, 0.01001, 0.00726},
    {2, 1, 1.00724, 1.00301, 1.00205},
    {3, 0, 0.03699, 0.01977, 0.01487},
    {4, 0, 0.05512, 0.03908, 0.02357},
}};

inline constexpr double martin_tol_unrenormalized = 2e-4;
inline constexpr double martin_tol_scheme = 5e-4;

inline constexpr double martin_amplitude = 1.0;
inline constexpr double martin_exponent = 0.1;

} // namespace regge
