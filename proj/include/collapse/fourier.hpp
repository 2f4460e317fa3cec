#pragma once

#include <functional>
#include <map>
#include <vector>

#include "collapse/cmatrix.hpp"

namespace collapse {

// Fourier coefficients f_hat(q), |q| <= qmax, of a smooth 2pi-periodic function,
// computed by the trapezoid/DFT rule on a uniform grid. For smooth periodic data
// this is exact up to aliasing of modes beyond grid_n - 2*qmax.
std::map<int, cplx> fourier_coeffs(const std::function<double(double)>& f, int qmax,
                                   int grid_n = 4096);
std::map<int, cplx> fourier_coeffs_complex(const std::function<cplx(double)>& f, int qmax,
                                           int grid_n = 4096);

// Same, for a function sampled on the uniform grid s_g = 2*pi*g/G (period 2pi).
std::map<int, cplx> fourier_coeffs_samples(const std::vector<double>& samples, int qmax);

// Modified Bessel function of the first kind I_q(x), integer order, by the
// ascending series; adequate for the |x| <= ~10 warping amplitudes used here.
double bessel_i(int q, double x);

// Coefficients of exp(A*cos(s+phi)):  f_hat(q) = I_q(A) * exp(i q phi).
std::map<int, cplx> exp_cos_coeffs(double amplitude, double phase, int qmax);

// Toeplitz convolution block of a multiplication operator in the Fourier basis
// e^{i kappa_a s}: T[a][b] = f_hat(kappa_a - kappa_b). The kappa lattice must
// have integer differences (offsets cancel between rows and columns).
CMatrix conv_block(const std::map<int, cplx>& coeffs, const std::vector<double>& kappa);

}  // namespace collapse
