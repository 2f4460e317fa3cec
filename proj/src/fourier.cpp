#include "collapse/fourier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace collapse {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

std::map<int, cplx> fourier_coeffs_complex(const std::function<cplx(double)>& f, int qmax,
                                           int grid_n) {
    if (grid_n < 4 * qmax + 4) grid_n = 4 * qmax + 4;
    std::vector<cplx> vals(grid_n);
    for (int g = 0; g < grid_n; ++g) vals[g] = f(two_pi * g / grid_n);
    std::map<int, cplx> out;
    for (int q = -qmax; q <= qmax; ++q) {
        cplx acc = 0.0;
        for (int g = 0; g < grid_n; ++g) {
            const double ph = -two_pi * q * g / grid_n;
            acc += vals[g] * cplx(std::cos(ph), std::sin(ph));
        }
        out[q] = acc / static_cast<double>(grid_n);
    }
    return out;
}

std::map<int, cplx> fourier_coeffs(const std::function<double(double)>& f, int qmax, int grid_n) {
    return fourier_coeffs_complex([&f](double s) { return cplx(f(s), 0.0); }, qmax, grid_n);
}

std::map<int, cplx> fourier_coeffs_samples(const std::vector<double>& samples, int qmax) {
    const int grid_n = static_cast<int>(samples.size());
    if (grid_n < 2 * qmax + 1)
        throw std::invalid_argument("fourier_coeffs_samples: grid too coarse for qmax");
    std::map<int, cplx> out;
    for (int q = -qmax; q <= qmax; ++q) {
        cplx acc = 0.0;
        for (int g = 0; g < grid_n; ++g) {
            const double ph = -two_pi * q * g / grid_n;
            acc += samples[g] * cplx(std::cos(ph), std::sin(ph));
        }
        out[q] = acc / static_cast<double>(grid_n);
    }
    return out;
}

double bessel_i(int q, double x) {
    q = std::abs(q);
    const double half = 0.5 * x;
    // term_r = (x/2)^(q+2r) / (r! (q+r)!)
    double term = 1.0;
    for (int i = 1; i <= q; ++i) term *= half / i;
    double sum = term;
    for (int r = 1; r < 200; ++r) {
        term *= half * half / (r * (q + r));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

std::map<int, cplx> exp_cos_coeffs(double amplitude, double phase, int qmax) {
    std::map<int, cplx> out;
    for (int q = -qmax; q <= qmax; ++q) {
        const double mag = bessel_i(q, amplitude);
        out[q] = mag * cplx(std::cos(q * phase), std::sin(q * phase));
    }
    return out;
}

CMatrix conv_block(const std::map<int, cplx>& coeffs, const std::vector<double>& kappa) {
    const int n = static_cast<int>(kappa.size());
    CMatrix t(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const double d = kappa[a] - kappa[b];
            const int q = static_cast<int>(std::lround(d));
            if (std::abs(d - q) > 1e-9)
                throw std::invalid_argument("conv_block: non-integer mode difference");
            auto it = coeffs.find(q);
            if (it != coeffs.end()) t(a, b) = it->second;
        }
    return t;
}

}  // namespace collapse
