#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "collapse/cmatrix.hpp"

namespace collapse {

class model_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Periodic warping profile c(s) > 0 on the 2pi circle.
struct Warping {
    enum class Kind { exp_cos, constant, samples };
    Kind kind = Kind::constant;
    double amplitude = 0.0;  // exp_cos: c(s) = exp(amplitude * cos(s + phase))
    double phase = 0.0;
    double value_const = 1.0;
    std::vector<double> samples;  // uniform on [0, 2pi)

    double value(double s) const;
    double dvalue(double s) const;
    // Fourier coefficients of c(s)^power (power may be fractional; c > 0).
    // Analytic Bessel series for exp_cos, DFT for sampled profiles.
    std::map<int, cplx> coeffs_pow(double power, int qmax) const;
    // Fourier coefficients of c'(s)/c(s).
    std::map<int, cplx> coeffs_log_deriv(int qmax) const;
    double min_value() const;
};

enum class Family { warped_torus, mapping_torus, circle_bundle_t2, heisenberg, forms_torus };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

struct BundleModel {
    Family family = Family::warped_torus;
    double epsilon = 1.0;
    int k = 1;                      // fiber dimension
    std::vector<Warping> warpings;  // warped_torus: k profiles; forms_torus: one

    // mapping_torus
    std::array<std::array<long, 2>, 2> holonomy{{{1, 0}, {0, 1}}};
    CMatrix g0;  // 2x2 SPD reference fiber metric

    // circle_bundle_t2: curvature two-form A = a * dy1 ^ dy2 (a = euler/(2pi)
    // when specified through an integer Euler number)
    double curvature_a = 0.0;

    // heisenberg: metric scale exponents (p, q, r) for (X, Y, Z)
    std::array<int, 3> scale_exponents{1, 1, 2};

    // spin structure flags, 0 (periodic) or 1 (antiperiodic), base circles
    // first then fiber circles
    std::vector<int> spin_flags;

    int grid_n = 1024;

    int base_dim() const;
    double base_offset() const;                 // Fourier shift of the first base circle
    std::vector<double> fiber_offsets() const;  // per fiber circle
    void validate() const;
};

struct GeometryData {
    std::vector<double> point;
    CMatrix W;                    // k x k SPD (real entries)
    std::vector<CMatrix> calW;    // per base direction, skew
    std::vector<CMatrix> T_form;  // per base direction, symmetric
    std::vector<double> mean_curvature;  // per base direction, -(d/ds) ln vol(Z)
    // structure constants tau[c][a][b] and fiber Christoffels Gamma[c][a][b]
    std::vector<std::vector<std::vector<double>>> tau;
    std::vector<std::vector<std::vector<double>>> fiber_christoffel;
    std::vector<CMatrix> A_coeffs;  // per fiber direction: n x n antisymmetric
    double fiber_vol = 0.0;
};

GeometryData eval_geometry(const BundleModel& model, const std::vector<double>& point);

// 0.5 * (W^-1 dW - dW W^-1); exact zero when W is scalar times Id.
CMatrix connection_form(const CMatrix& w, const CMatrix& dw);

// Koszul Christoffels of an orthonormal invariant frame:
// Gamma^c_ab = 0.5 * (tau^c_ab - tau^a_bc + tau^b_ca).
std::vector<std::vector<std::vector<double>>> fiber_christoffel(
    const std::vector<std::vector<std::vector<double>>>& tau);

// scal(Z) = -1/4 sum (tau^c_ab)^2
double scal_fiber(const std::vector<std::vector<std::vector<double>>>& tau);

// ||Z||^2 = sum (Gamma^c_ab)^2
double z_norm_squared(const std::vector<std::vector<std::vector<double>>>& tau);

// Killing-type trace sum tau^c_ab tau^b_ac (vanishes for nilpotent frames).
double nilpotency_trace(const std::vector<std::vector<std::vector<double>>>& tau);

std::vector<double> mean_curvature(const BundleModel& model, const std::vector<double>& point);

struct BoundCheck {
    std::string name;
    double measured = 0.0;
    double bound = 0.0;
    bool passed = true;
};
struct BoundReport {
    std::vector<BoundCheck> checks;
    double sup_calW = 0.0;
    double sup_T = 0.0;
    double sup_A = 0.0;
    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

// Empirical sup norms of calW, T, A over a grid (>= 64 points per circle
// direction) and the connection-form bound ||calW|| <= 2 ||T||.
BoundReport verify_bounds(const BundleModel& model, int grid_points = 128);

// mapping-torus fiber metric path: W(s) (SPD square root of the bump-geodesic
// G(s) from G0 to H^T G0 H) and its s-derivative.
CMatrix mapping_torus_w(const BundleModel& model, double s);
CMatrix mapping_torus_dw(const BundleModel& model, double s);

// sqrt/log helpers for small real SPD matrices
CMatrix spd_sqrt(const CMatrix& g);
CMatrix spd_log(const CMatrix& g);
CMatrix spd_exp_sym(const CMatrix& x);
CMatrix real_inverse(const CMatrix& m);

}  // namespace collapse
