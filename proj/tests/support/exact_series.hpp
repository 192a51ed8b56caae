#pragma once

// Test-only oracle: the trajectory recurrences re-run in exact rational
// arithmetic. Parameter sets are chosen so that every intermediate
// quantity (omega, alpha0, Taylor and Laurent coefficients, the series
// coefficients themselves) is an exact rational number; the production
// engine, which works in double precision, must agree to near machine
// accuracy. Independent of the library code by construction.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <vector>

namespace regge::test {

using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Rat& x) { return x.convert_to<double>(); }

struct ExactCase {
    Rat amplitude;  // A
    Rat exponent;   // v
    Rat r0;
    Rat r0_pow_v;   // r0^v, must be supplied exactly
    Rat mass0;      // mass entering omega/alpha0 (m0 in renormalized runs)
    Rat omega;      // must satisfy omega^2 = mass0 A v (v+2) r0^v
    Rat alpha0;     // must satisfy alpha0^2 = mass0 A v r0^(v+2)
    Rat m1{0};
    Rat m2{0};
    int nodes = 0;
    int order = 4;

    Rat energy() const { return amplitude * (exponent + 2) / 2 * r0_pow_v; }
};

class ExactSeries {
public:
    explicit ExactSeries(const ExactCase& c) : case_(c) { run(); }

    const std::vector<Rat>& alphas() const { return alpha_; }
    const std::vector<std::vector<Rat>>& table() const { return c_; }
    int max_column() const { return width_; }

private:
    static Rat falling(const Rat& v, int k) {
        Rat out = 1;
        for (int j = 0; j < k; ++j) out *= (v - j);
        return out;
    }

    Rat mass_term(int k) const { return k == 1 ? case_.m1 : (k == 2 ? case_.m2 : Rat(0)); }

    Rat entry(int k, int i) const {
        const Rat& r0 = case_.r0;
        Rat t = -Rat(i - 2 * k + 3) / r0 * c_[k - 1][i];
        for (int j = 1; j <= k - 1; ++j)
            for (int p = 0; p <= i; ++p) t -= c_[j][p] * c_[k - j][i - p];
        for (int p = 1; p <= i; ++p) t -= 2 * c_[0][p] * c_[k][i - p];
        if (i - 2 * k + 2 >= 0) {
            Rat abra = alpha_[k - 1];
            for (int j = 0; j <= k; ++j) abra += alpha_[j] * alpha_[k - j];
            const Rat sgn = (i % 2) ? -1 : 1;
            t += sgn * Rat(i - 2 * k + 3) / (r0 * r0) * abra;
            t += 2 * mass_term(k) * v_[i - 2 * k + 2];
        }
        return t / (2 * c_[0][0]);
    }

    void run() {
        const int N = case_.order;
        width_ = 2 * N + 2;
        const int imax = 2 * N + 4;
        const Rat& v = case_.exponent;
        const Rat& r0 = case_.r0;

        v_.resize(imax + 1);
        Rat fact = 1;
        for (int i = 0; i <= imax; ++i) {
            if (i > 0) fact *= i;
            v_[i] = case_.amplitude * case_.r0_pow_v * falling(v, i) / fact;
        }
        const Rat w2 = 2 * case_.mass0 * (v_[2] + Rat(3, 2) * v_[1]);
        if (case_.omega * case_.omega != w2)
            throw std::logic_error("exact case: omega is not exact");
        if (case_.alpha0 * case_.alpha0 != case_.mass0 * r0 * r0 * r0 * case_.amplitude * v * case_.r0_pow_v / r0)
            throw std::logic_error("exact case: alpha0 is not exact");

        a_.assign(imax - 1, Rat(0));
        for (int i = 1; i <= imax - 2; ++i)
            a_[i] = 2 * case_.mass0 / w2 *
                    (v_[i + 2] + ((i % 2) ? -1 : 1) * Rat(3 + i, 2) * v_[1]);

        c_.assign(N + 1, std::vector<Rat>(width_ + 1, Rat(0)));
        c_[0][0] = -case_.omega;
        for (int i = 1; i <= width_; ++i) {
            Rat conv = 0;
            for (int j = 1; j <= i - 1; ++j) conv += c_[0][j] * c_[0][i - j];
            c_[0][i] = (conv - w2 * a_[i]) / (2 * case_.omega);
        }

        alpha_.assign(1, case_.alpha0);
        for (int k = 1; k <= N; ++k) {
            for (int i = 0; i <= 2 * k - 3; ++i) c_[k][i] = entry(k, i);
            c_[k][2 * k - 2] = (k == 1) ? Rat(case_.nodes) / r0 : Rat(0);
            Rat cross = 0;
            for (int j = 1; j <= k - 1; ++j) cross += alpha_[j] * alpha_[k - j];
            Rat conv = 0;
            for (int j = 0; j <= k; ++j)
                for (int p = 0; p <= 2 * k - 2; ++p)
                    conv += c_[j][p] * c_[k - j][2 * k - 2 - p];
            const Rat ak = (-alpha_[k - 1] - cross + r0 * c_[k - 1][2 * k - 2] +
                            r0 * r0 * conv + mass_term(k) * r0 * r0 * v_[1]) /
                           (2 * case_.alpha0);
            alpha_.push_back(ak);
            for (int i = 2 * k - 1; i <= width_; ++i) c_[k][i] = entry(k, i);
        }
    }

    ExactCase case_;
    int width_ = 0;
    std::vector<Rat> v_, a_, alpha_;
    std::vector<std::vector<Rat>> c_;
};

/// Scaled zeroth-row coefficients C_i^0 / omega for a power law: these are
/// rational for every rational exponent, independent of omega itself.
inline std::vector<Rat> exact_row0_scaled(const Rat& v, int imax) {
    // a_i for r0 = 1, A = m = 1 in units where omega^2 factors out
    std::vector<Rat> a(imax + 1, Rat(0));
    const Rat w2v = v * (v + 2); // omega^2 / (m A r0^v ... ) common factor
    Rat fact = 1;
    std::vector<Rat> vc(imax + 3);
    for (int i = 0; i <= imax + 2; ++i) {
        if (i > 0) fact *= i;
        Rat f = 1;
        for (int j = 0; j < i; ++j) f *= (v - j);
        vc[i] = f / fact;
    }
    for (int i = 1; i <= imax; ++i)
        a[i] = 2 * (vc[i + 2] + ((i % 2) ? -1 : 1) * Rat(3 + i, 2) * v) / w2v;
    std::vector<Rat> c(imax + 1);
    c[0] = -1;
    for (int i = 1; i <= imax; ++i) {
        Rat conv = 0;
        for (int j = 1; j <= i - 1; ++j) conv += c[j] * c[i - j];
        c[i] = (conv - a[i]) / 2;
    }
    return c;
}

} // namespace regge::test
