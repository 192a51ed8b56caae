#include <cmath>
#include <cstring>
#include <random>
#include <vector>

#include "doctest.h"
#include "regge/errors.hpp"
#include "regge/kernels.hpp"

using namespace regge;

namespace {

std::vector<double> random_vec(std::size_t n, std::mt19937& rng, bool with_zeros = false) {
    std::uniform_real_distribution<double> dist(-10.0, 10.0);
    std::vector<double> out(n);
    for (auto& x : out) x = dist(rng);
    if (with_zeros && n > 2) {
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (std::size_t k = 0; k < n / 7 + 1; ++k) out[pick(rng)] = 0.0;
    }
    return out;
}

const std::size_t sizes[] = {0, 1, 2, 3, 4, 5, 7, 8, 9, 13, 31, 64, 1001, 40001};

bool bit_equal(const std::vector<double>& a, const std::vector<double>& b) {
    return a.size() == b.size() &&
           (a.empty() || std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0);
}

} // namespace

TEST_CASE("kernel backends report and select") {
    CHECK(kernels::supported(kernels::Backend::Scalar));
    const auto initial = kernels::active();
    kernels::select(kernels::Backend::Scalar);
    CHECK(kernels::active() == kernels::Backend::Scalar);
    CHECK(kernels::name(kernels::Backend::Scalar) == "scalar");
    CHECK(kernels::name(kernels::Backend::Avx2) == "avx2");
    if (kernels::supported(kernels::Backend::Avx2)) {
        kernels::select(kernels::Backend::Avx2);
        CHECK(kernels::active() == kernels::Backend::Avx2);
    }
    kernels::select(initial);
}

TEST_CASE("count_sign_flips semantics") {
    auto flips = [](std::vector<double> u) { return kernels::scalar::count_sign_flips(u); };
    CHECK(flips({}) == 0);
    CHECK(flips({1.0}) == 0);
    CHECK(flips({1.0, -1.0}) == 1);
    CHECK(flips({1.0, 0.0, -1.0}) == 1);
    CHECK(flips({1.0, 0.0, 1.0}) == 0);
    CHECK(flips({0.0, 0.0}) == 0);
    CHECK(flips({-1.0, 1.0, -1.0}) == 2);
    CHECK(flips({0.0, -2.0, 3.0, 0.0, 3.0, -1.0}) == 2);
}

TEST_CASE("scalar kernels match naive formulas") {
    std::mt19937 rng(7);
    auto x = random_vec(257, rng);
    auto y = random_vec(257, rng);
    std::vector<double> out(257);
    kernels::scalar::axpby(1.7, x, -0.3, y, out);
    for (std::size_t i = 0; i < x.size(); ++i)
        CHECK(out[i] == doctest::Approx(1.7 * x[i] - 0.3 * y[i]).epsilon(1e-15));

    kernels::scalar::shift(x, 2.5, out);
    for (std::size_t i = 0; i < x.size(); ++i) CHECK(out[i] == x[i] + 2.5);

    std::vector<double> g(x.size()), d(x.size());
    const double h = 0.01;
    kernels::scalar::numerov_factors(x, h, g, d);
    for (std::size_t i = 0; i < x.size(); ++i) {
        CHECK(g[i] == doctest::Approx(1.0 - h * h * x[i] / 12.0).epsilon(1e-15));
        CHECK(d[i] == doctest::Approx(2.0 + 10.0 * h * h * x[i] / 12.0).epsilon(1e-15));
    }

    double m = 0.0;
    for (double v : x) m = std::max(m, std::fabs(v));
    CHECK(kernels::scalar::max_abs(x) == m);
    CHECK(kernels::scalar::max_abs(std::vector<double>{}) == 0.0);
}

#if defined(REGGE_HAVE_AVX2)
TEST_CASE("avx2 kernels are bit-identical to scalar") {
    if (!kernels::supported(kernels::Backend::Avx2)) return;
    std::mt19937 rng(42);
    for (std::size_t n : sizes) {
        CAPTURE(n);
        auto x = random_vec(n, rng);
        auto y = random_vec(n, rng);
        std::vector<double> o1(n), o2(n);

        kernels::scalar::axpby(0.37, x, -1.91, y, o1);
        kernels::avx2::axpby(0.37, x, -1.91, y, o2);
        CHECK(bit_equal(o1, o2));

        kernels::scalar::shift(x, 1.0 / 3.0, o1);
        kernels::avx2::shift(x, 1.0 / 3.0, o2);
        CHECK(bit_equal(o1, o2));

        std::vector<double> g1(n), d1(n), g2(n), d2(n);
        kernels::scalar::numerov_factors(x, 0.0073, g1, d1);
        kernels::avx2::numerov_factors(x, 0.0073, g2, d2);
        CHECK(bit_equal(g1, g2));
        CHECK(bit_equal(d1, d2));

        auto z = random_vec(n, rng, /*with_zeros=*/true);
        CHECK(kernels::scalar::count_sign_flips(z) == kernels::avx2::count_sign_flips(z));
        CHECK(kernels::scalar::max_abs(z) == kernels::avx2::max_abs(z));
    }
}

TEST_CASE("dispatched kernels match the selected backend") {
    if (!kernels::supported(kernels::Backend::Avx2)) return;
    const auto initial = kernels::active();
    std::mt19937 rng(3);
    auto x = random_vec(101, rng);
    std::vector<double> expect(101), got(101);
    kernels::avx2::shift(x, -4.0, expect);
    kernels::select(kernels::Backend::Avx2);
    kernels::shift(x, -4.0, got);
    CHECK(bit_equal(expect, got));
    kernels::select(initial);
}
#endif
