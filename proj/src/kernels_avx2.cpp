#if defined(REGGE_HAVE_AVX2)

#include <immintrin.h>

#include <cassert>
#include <cmath>

#include "regge/kernels.hpp"

// AVX2 variants of the grid kernels, 4 doubles per iteration with scalar
// remainder loops. Fused operations mirror the scalar reference exactly,
// so results are bit-identical between backends.

namespace regge::kernels::avx2 {

void axpby(double a, std::span<const double> x, double b, std::span<const double> y,
           std::span<double> out) {
    assert(x.size() == y.size() && x.size() == out.size());
    const std::size_t n = x.size();
    const __m256d va = _mm256_set1_pd(a);
    const __m256d vb = _mm256_set1_pd(b);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d vx = _mm256_loadu_pd(x.data() + i);
        const __m256d vy = _mm256_loadu_pd(y.data() + i);
        _mm256_storeu_pd(out.data() + i, _mm256_fmadd_pd(va, vx, _mm256_mul_pd(vb, vy)));
    }
    for (; i < n; ++i)
        out[i] = std::fma(a, x[i], b * y[i]);
}

void shift(std::span<const double> x, double s, std::span<double> out) {
    assert(x.size() == out.size());
    const std::size_t n = x.size();
    const __m256d vs = _mm256_set1_pd(s);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(out.data() + i, _mm256_add_pd(_mm256_loadu_pd(x.data() + i), vs));
    for (; i < n; ++i)
        out[i] = x[i] + s;
}

void numerov_factors(std::span<const double> f, double h, std::span<double> g,
                     std::span<double> d) {
    assert(f.size() == g.size() && f.size() == d.size());
    const std::size_t n = f.size();
    const double c = h * h / 12.0;
    const double c10 = 10.0 * c;
    const __m256d vc = _mm256_set1_pd(c);
    const __m256d vc10 = _mm256_set1_pd(c10);
    const __m256d ones = _mm256_set1_pd(1.0);
    const __m256d twos = _mm256_set1_pd(2.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d vf = _mm256_loadu_pd(f.data() + i);
        _mm256_storeu_pd(g.data() + i, _mm256_fnmadd_pd(vc, vf, ones));
        _mm256_storeu_pd(d.data() + i, _mm256_fmadd_pd(vc10, vf, twos));
    }
    for (; i < n; ++i) {
        g[i] = std::fma(-c, f[i], 1.0);
        d[i] = std::fma(c10, f[i], 2.0);
    }
}

namespace {

inline void sign_step(double x, int& last, std::size_t& flips) {
    if (x == 0.0) return;
    const int s = x > 0.0 ? 1 : -1;
    if (last != 0 && s != last) ++flips;
    last = s;
}

} // namespace

std::size_t count_sign_flips(std::span<const double> u) {
    const double* p = u.data();
    const std::size_t n = u.size();
    std::size_t flips = 0;
    std::size_t i = 0;
    int last = 0;
    // establish the first nonzero sign before entering the block loop
    for (; i < n && last == 0; ++i) {
        if (p[i] != 0.0) last = p[i] > 0.0 ? 1 : -1;
    }
    const __m256d zero = _mm256_setzero_pd();
    for (; i + 4 <= n; i += 4) {
        const __m256d v = _mm256_loadu_pd(p + i);
        if (_mm256_movemask_pd(_mm256_cmp_pd(v, zero, _CMP_EQ_OQ)) != 0) {
            // a zero inside the block: handle element-wise
            for (std::size_t j = i; j < i + 4; ++j) sign_step(p[j], last, flips);
            continue;
        }
        const unsigned signs = static_cast<unsigned>(_mm256_movemask_pd(v));
        const unsigned prev = ((signs << 1) | (last < 0 ? 1u : 0u)) & 0xFu;
        flips += static_cast<std::size_t>(__builtin_popcount(signs ^ prev));
        last = (signs & 0x8u) ? -1 : 1;
    }
    for (; i < n; ++i) sign_step(p[i], last, flips);
    return flips;
}

double max_abs(std::span<const double> u) {
    const std::size_t n = u.size();
    const __m256d abs_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    __m256d vmax = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        vmax = _mm256_max_pd(vmax, _mm256_and_pd(_mm256_loadu_pd(u.data() + i), abs_mask));
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, vmax);
    double m = std::fmax(std::fmax(lanes[0], lanes[1]), std::fmax(lanes[2], lanes[3]));
    for (; i < n; ++i) m = std::fmax(m, std::fabs(u[i]));
    return m;
}

} // namespace regge::kernels::avx2

#endif // REGGE_HAVE_AVX2
