#pragma once

#include <cstddef>
#include <span>
#include <string_view>

// Grid kernels used by the radial eigenvalue solver. Each kernel has a
// scalar reference implementation and, on x86-64, an AVX2 variant that is
// selected at runtime. The two backends produce bit-identical results
// (FMA usage is mirrored between them), which the test suite asserts.

namespace regge::kernels {

enum class Backend { Scalar, Avx2 };

/// Backend chosen at startup (honours the REGGE_KERNELS environment
/// variable: "scalar" or "avx2").
Backend active();
bool supported(Backend b);
/// Force a backend; throws regge::ValidationError if unsupported.
void select(Backend b);
std::string_view name(Backend b);

/// out[i] = a*x[i] + b*y[i]
void axpby(double a, std::span<const double> x, double b, std::span<const double> y,
           std::span<double> out);

/// out[i] = x[i] + s
void shift(std::span<const double> x, double s, std::span<double> out);

/// Numerov integration factors for u'' = f u on a uniform grid of step h:
/// g[i] = 1 - (h^2/12) f[i],  d[i] = 2 + (10 h^2/12) f[i].
void numerov_factors(std::span<const double> f, double h, std::span<double> g,
                     std::span<double> d);

/// Number of sign alternations between consecutive nonzero elements.
std::size_t count_sign_flips(std::span<const double> u);

/// max_i |u[i]| (0 for an empty span; inputs assumed finite).
double max_abs(std::span<const double> u);

// Reference implementations, always available.
namespace scalar {
void axpby(double a, std::span<const double> x, double b, std::span<const double> y,
           std::span<double> out);
void shift(std::span<const double> x, double s, std::span<double> out);
void numerov_factors(std::span<const double> f, double h, std::span<double> g,
                     std::span<double> d);
std::size_t count_sign_flips(std::span<const double> u);
double max_abs(std::span<const double> u);
} // namespace scalar

#if defined(REGGE_HAVE_AVX2)
namespace avx2 {
void axpby(double a, std::span<const double> x, double b, std::span<const double> y,
           std::span<double> out);
void shift(std::span<const double> x, double s, std::span<double> out);
void numerov_factors(std::span<const double> f, double h, std::span<double> g,
                     std::span<double> d);
std::size_t count_sign_flips(std::span<const double> u);
double max_abs(std::span<const double> u);
} // namespace avx2
#endif

} // namespace regge::kernels
