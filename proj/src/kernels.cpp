#include "regge/kernels.hpp"

#include <cstdlib>
#include <string>

#include "regge/errors.hpp"

namespace regge::kernels {

namespace {

struct KernelSet {
    void (*axpby)(double, std::span<const double>, double, std::span<const double>,
                  std::span<double>);
    void (*shift)(std::span<const double>, double, std::span<double>);
    void (*numerov_factors)(std::span<const double>, double, std::span<double>,
                            std::span<double>);
    std::size_t (*count_sign_flips)(std::span<const double>);
    double (*max_abs)(std::span<const double>);
};

constexpr KernelSet scalar_set = {
    &scalar::axpby, &scalar::shift, &scalar::numerov_factors,
    &scalar::count_sign_flips, &scalar::max_abs,
};

#if defined(REGGE_HAVE_AVX2)
constexpr KernelSet avx2_set = {
    &avx2::axpby, &avx2::shift, &avx2::numerov_factors,
    &avx2::count_sign_flips, &avx2::max_abs,
};
#endif

bool avx2_available() {
#if defined(REGGE_HAVE_AVX2)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Backend initial_backend() {
    if (const char* env = std::getenv("REGGE_KERNELS")) {
        std::string want(env);
        if (want == "scalar") return Backend::Scalar;
        if (want == "avx2" && avx2_available()) return Backend::Avx2;
        // unknown or unsupported request: fall through to autodetection
    }
    return avx2_available() ? Backend::Avx2 : Backend::Scalar;
}

struct Dispatch {
    Backend backend;
    const KernelSet* set;
};

Dispatch& dispatch() {
    static Dispatch d = [] {
        Backend b = initial_backend();
#if defined(REGGE_HAVE_AVX2)
        if (b == Backend::Avx2) return Dispatch{b, &avx2_set};
#endif
        return Dispatch{Backend::Scalar, &scalar_set};
    }();
    return d;
}

} // namespace

Backend active() { return dispatch().backend; }

bool supported(Backend b) {
    return b == Backend::Scalar || (b == Backend::Avx2 && avx2_available());
}

void select(Backend b) {
    if (!supported(b)) throw ValidationError("kernel backend not supported on this host");
#if defined(REGGE_HAVE_AVX2)
    if (b == Backend::Avx2) {
        dispatch() = {b, &avx2_set};
        return;
    }
#endif
    dispatch() = {Backend::Scalar, &scalar_set};
}

std::string_view name(Backend b) {
    return b == Backend::Avx2 ? "avx2" : "scalar";
}

void axpby(double a, std::span<const double> x, double b, std::span<const double> y,
           std::span<double> out) {
    dispatch().set->axpby(a, x, b, y, out);
}

void shift(std::span<const double> x, double s, std::span<double> out) {
    dispatch().set->shift(x, s, out);
}

void numerov_factors(std::span<const double> f, double h, std::span<double> g,
                     std::span<double> d) {
    dispatch().set->numerov_factors(f, h, g, d);
}

std::size_t count_sign_flips(std::span<const double> u) {
    return dispatch().set->count_sign_flips(u);
}

double max_abs(std::span<const double> u) { return dispatch().set->max_abs(u); }

} // namespace regge::kernels
