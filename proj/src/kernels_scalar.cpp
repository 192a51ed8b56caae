#include <cassert>
#include <cmath>

#include "regge/kernels.hpp"

// Reference kernels. std::fma is used wherever the AVX2 variants use a
// fused operation so that both backends round identically.

namespace regge::kernels::scalar {

void axpby(double a, std::span<const double> x, double b, std::span<const double> y,
           std::span<double> out) {
    assert(x.size() == y.size() && x.size() == out.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        out[i] = std::fma(a, x[i], b * y[i]);
}

void shift(std::span<const double> x, double s, std::span<double> out) {
    assert(x.size() == out.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        out[i] = x[i] + s;
}

void numerov_factors(std::span<const double> f, double h, std::span<double> g,
                     std::span<double> d) {
    assert(f.size() == g.size() && f.size() == d.size());
    const double c = h * h / 12.0;
    const double c10 = 10.0 * c;
    for (std::size_t i = 0; i < f.size(); ++i) {
        g[i] = std::fma(-c, f[i], 1.0);
        d[i] = std::fma(c10, f[i], 2.0);
    }
}

std::size_t count_sign_flips(std::span<const double> u) {
    std::size_t flips = 0;
    int last = 0; // sign of the last nonzero element seen
    for (double x : u) {
        if (x == 0.0) continue;
        const int s = x > 0.0 ? 1 : -1;
        if (last != 0 && s != last) ++flips;
        last = s;
    }
    return flips;
}

double max_abs(std::span<const double> u) {
    double m = 0.0;
    for (double x : u) m = std::fmax(m, std::fabs(x));
    return m;
}

} // namespace regge::kernels::scalar
