#include "collapse/geometry.hpp"

#include <cmath>
#include <numbers>

#include "collapse/fourier.hpp"
#include "collapse/spectral.hpp"

namespace collapse {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;

// C-infinity step on [0,1] with all derivatives vanishing at the endpoints.
double smooth_step(double u) {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    const double a = std::exp(-1.0 / u);
    const double b = std::exp(-1.0 / (1.0 - u));
    return a / (a + b);
}
double smooth_step_deriv(double u) {
    if (u <= 0.0 || u >= 1.0) return 0.0;
    const double a = std::exp(-1.0 / u);
    const double b = std::exp(-1.0 / (1.0 - u));
    const double da = a / (u * u);
    const double db = -b / ((1.0 - u) * (1.0 - u));
    const double den = a + b;
    return (da * den - a * (da + db)) / (den * den);
}
}  // namespace

double Warping::value(double s) const {
    switch (kind) {
        case Kind::exp_cos: return std::exp(amplitude * std::cos(s + phase));
        case Kind::constant: return value_const;
        case Kind::samples: {
            // trigonometric interpolation through the DFT of the samples
            const int g = static_cast<int>(samples.size());
            const int q = g / 2 - 1;
            auto co = fourier_coeffs_samples(samples, q);
            cplx acc = 0.0;
            for (const auto& [m, c] : co) acc += c * cplx(std::cos(m * s), std::sin(m * s));
            return acc.real();
        }
    }
    return 1.0;
}

double Warping::dvalue(double s) const {
    switch (kind) {
        case Kind::exp_cos:
            return -amplitude * std::sin(s + phase) * value(s);
        case Kind::constant: return 0.0;
        case Kind::samples: {
            const int g = static_cast<int>(samples.size());
            const int q = g / 2 - 1;
            auto co = fourier_coeffs_samples(samples, q);
            cplx acc = 0.0;
            for (const auto& [m, c] : co)
                acc += c * cplx(0.0, m) * cplx(std::cos(m * s), std::sin(m * s));
            return acc.real();
        }
    }
    return 0.0;
}

std::map<int, cplx> Warping::coeffs_pow(double power, int qmax) const {
    switch (kind) {
        case Kind::exp_cos: return exp_cos_coeffs(power * amplitude, phase, qmax);
        case Kind::constant: {
            std::map<int, cplx> out;
            out[0] = std::pow(value_const, power);
            return out;
        }
        case Kind::samples:
            return fourier_coeffs([this, power](double s) { return std::pow(value(s), power); },
                                  qmax);
    }
    return {};
}

std::map<int, cplx> Warping::coeffs_log_deriv(int qmax) const {
    switch (kind) {
        case Kind::exp_cos: {
            // c'/c = -amplitude * sin(s + phase)
            std::map<int, cplx> out;
            if (qmax >= 1) {
                const cplx e(std::cos(phase), std::sin(phase));
                out[1] = cplx(0.0, 0.5 * amplitude) * e;
                out[-1] = cplx(0.0, -0.5 * amplitude) * std::conj(e);
            }
            return out;
        }
        case Kind::constant: return {};
        case Kind::samples:
            return fourier_coeffs([this](double s) { return dvalue(s) / value(s); }, qmax);
    }
    return {};
}

double Warping::min_value() const {
    double mn = 1e300;
    for (int g = 0; g < 512; ++g) mn = std::min(mn, value(two_pi * g / 512));
    return mn;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::warped_torus: return "warped_torus";
        case Family::mapping_torus: return "mapping_torus";
        case Family::circle_bundle_t2: return "circle_bundle_t2";
        case Family::heisenberg: return "heisenberg";
        case Family::forms_torus: return "forms_torus";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    if (name == "warped_torus") return Family::warped_torus;
    if (name == "mapping_torus") return Family::mapping_torus;
    if (name == "circle_bundle_t2" || name == "circle_bundle_T2") return Family::circle_bundle_t2;
    if (name == "heisenberg") return Family::heisenberg;
    if (name == "forms_torus") return Family::forms_torus;
    throw model_error("unknown family: " + name);
}

int BundleModel::base_dim() const {
    switch (family) {
        case Family::warped_torus:
        case Family::mapping_torus:
        case Family::forms_torus: return 1;
        case Family::circle_bundle_t2: return 2;
        case Family::heisenberg: return 0;
    }
    return 0;
}

double BundleModel::base_offset() const {
    if (spin_flags.empty()) return 0.0;
    return spin_flags[0] ? 0.5 : 0.0;
}

std::vector<double> BundleModel::fiber_offsets() const {
    const int nb = base_dim();
    std::vector<double> out(static_cast<size_t>(k), 0.0);
    for (int a = 0; a < k; ++a) {
        const size_t idx = static_cast<size_t>(nb + a);
        if (idx < spin_flags.size() && spin_flags[idx]) out[a] = 0.5;
    }
    return out;
}

void BundleModel::validate() const {
    if (!(epsilon > 0.0) || epsilon > 1.0) throw model_error("epsilon must lie in (0, 1]");
    if (k < 1 && family != Family::heisenberg) throw model_error("fiber dimension must be >= 1");
    switch (family) {
        case Family::warped_torus:
            if (static_cast<int>(warpings.size()) != k)
                throw model_error("warped_torus: need one warping per fiber direction");
            for (const auto& w : warpings)
                if (w.min_value() <= 0.0) throw model_error("warping must be strictly positive");
            break;
        case Family::forms_torus:
            if (warpings.size() != 1) throw model_error("forms_torus: need exactly one warping");
            if (warpings[0].min_value() <= 0.0)
                throw model_error("warping must be strictly positive");
            break;
        case Family::mapping_torus: {
            if (k != 2) throw model_error("mapping_torus: fiber dimension must be 2");
            const long det = holonomy[0][0] * holonomy[1][1] - holonomy[0][1] * holonomy[1][0];
            if (det != 1 && det != -1) throw model_error("holonomy must lie in GL(2,Z)");
            if (g0.rows() != 2 || g0.cols() != 2) throw model_error("g0 must be 2x2");
            if (g0(0, 0).real() <= 0.0 ||
                g0(0, 0).real() * g0(1, 1).real() - g0(0, 1).real() * g0(1, 0).real() <= 0.0)
                throw model_error("g0 must be SPD");
            // fiber spin structure must be holonomy-invariant
            const auto off = fiber_offsets();
            const double d1 = holonomy[0][0] * off[0] + holonomy[1][0] * off[1];
            const double d2 = holonomy[0][1] * off[0] + holonomy[1][1] * off[1];
            auto frac_eq = [](double x, double y) {
                return std::abs(x - y - std::round(x - y)) < 1e-12;
            };
            if (!frac_eq(d1, off[0]) || !frac_eq(d2, off[1]))
                throw model_error("fiber spin structure is not holonomy invariant");
            break;
        }
        case Family::circle_bundle_t2:
            if (k != 1) throw model_error("circle_bundle_t2: fiber dimension must be 1");
            break;
        case Family::heisenberg:
            break;
    }
}

CMatrix connection_form(const CMatrix& w, const CMatrix& dw) {
    CMatrix wi = real_inverse(w);
    return (wi * dw - dw * wi) * cplx(0.5, 0.0);
}

std::vector<std::vector<std::vector<double>>> fiber_christoffel(
    const std::vector<std::vector<std::vector<double>>>& tau) {
    const int k = static_cast<int>(tau.size());
    std::vector<std::vector<std::vector<double>>> g(
        k, std::vector<std::vector<double>>(k, std::vector<double>(k, 0.0)));
    for (int c = 0; c < k; ++c)
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b)
                g[c][a][b] = 0.5 * (tau[c][a][b] - tau[a][b][c] + tau[b][c][a]);
    return g;
}

double scal_fiber(const std::vector<std::vector<std::vector<double>>>& tau) {
    double sum = 0.0;
    for (const auto& mc : tau)
        for (const auto& ma : mc)
            for (double v : ma) sum += v * v;
    return -0.25 * sum;
}

double z_norm_squared(const std::vector<std::vector<std::vector<double>>>& tau) {
    const auto g = fiber_christoffel(tau);
    double sum = 0.0;
    for (const auto& mc : g)
        for (const auto& ma : mc)
            for (double v : ma) sum += v * v;
    return sum;
}

double nilpotency_trace(const std::vector<std::vector<std::vector<double>>>& tau) {
    const int k = static_cast<int>(tau.size());
    double sum = 0.0;
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            for (int c = 0; c < k; ++c) sum += tau[c][a][b] * tau[b][a][c];
    return sum;
}

CMatrix real_inverse(const CMatrix& m) { return m.inverse(); }

CMatrix spd_sqrt(const CMatrix& g) {
    EigenPair e = eigh_jacobi(g);
    const int n = g.rows();
    CMatrix r(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cplx acc = 0.0;
            for (int p = 0; p < n; ++p) {
                if (e.values[p] <= 0.0) throw model_error("spd_sqrt: matrix not positive definite");
                acc += e.vectors(i, p) * std::sqrt(e.values[p]) * std::conj(e.vectors(j, p));
            }
            r(i, j) = acc.real();
        }
    return r;
}

CMatrix spd_log(const CMatrix& g) {
    EigenPair e = eigh_jacobi(g);
    const int n = g.rows();
    CMatrix r(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cplx acc = 0.0;
            for (int p = 0; p < n; ++p) {
                if (e.values[p] <= 0.0) throw model_error("spd_log: matrix not positive definite");
                acc += e.vectors(i, p) * std::log(e.values[p]) * std::conj(e.vectors(j, p));
            }
            r(i, j) = acc.real();
        }
    return r;
}

CMatrix spd_exp_sym(const CMatrix& x) {
    EigenPair e = eigh_jacobi(x);
    const int n = x.rows();
    CMatrix r(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cplx acc = 0.0;
            for (int p = 0; p < n; ++p)
                acc += e.vectors(i, p) * std::exp(e.values[p]) * std::conj(e.vectors(j, p));
            r(i, j) = acc.real();
        }
    return r;
}

namespace {

CMatrix holonomy_matrix(const BundleModel& m) {
    CMatrix h(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) h(i, j) = static_cast<double>(m.holonomy[i][j]);
    return h;
}

// G(s) = G0^{1/2} exp(tau(s) X) G0^{1/2} with X = log(G0^{-1/2} H^T G0 H G0^{-1/2});
// the smooth step makes the glued metric C-infinity across the seam.
struct GeodesicPath {
    CMatrix g0h, x;
    explicit GeodesicPath(const BundleModel& m) {
        const CMatrix h = holonomy_matrix(m);
        CMatrix g1 = h.adjoint() * m.g0 * h;
        g0h = spd_sqrt(m.g0);
        CMatrix g0hi = real_inverse(g0h);
        x = spd_log(g0hi * g1 * g0hi);
    }
    CMatrix g(double s) const {
        const double t = smooth_step(s / two_pi);
        return g0h * spd_exp_sym(x * cplx(t, 0.0)) * g0h;
    }
    CMatrix dg(double s) const {
        const double t = smooth_step(s / two_pi);
        const double dt = smooth_step_deriv(s / two_pi) / two_pi;
        return g0h * (x * spd_exp_sym(x * cplx(t, 0.0))) * g0h * cplx(dt, 0.0);
    }
};

// W' from the Sylvester identity W' W + W W' = G', solved in W's eigenbasis.
CMatrix sqrt_deriv(const CMatrix& w, const CMatrix& dg) {
    EigenPair e = eigh_jacobi(w);
    const int n = w.rows();
    CMatrix m(n, n);
    // m = U^T dG U, then (U^T W' U)_ij = m_ij / (d_i + d_j)
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cplx acc = 0.0;
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q)
                    acc += std::conj(e.vectors(p, i)) * dg(p, q) * e.vectors(q, j);
            m(i, j) = acc / (e.values[i] + e.values[j]);
        }
    CMatrix r(n, n);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            cplx acc = 0.0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    acc += e.vectors(p, i) * m(i, j) * std::conj(e.vectors(q, j));
            r(p, q) = acc.real();
        }
    return r;
}

std::vector<std::vector<std::vector<double>>> zero_tau(int k) {
    return std::vector<std::vector<std::vector<double>>>(
        k, std::vector<std::vector<double>>(k, std::vector<double>(k, 0.0)));
}

}  // namespace

CMatrix mapping_torus_w(const BundleModel& model, double s) {
    GeodesicPath p(model);
    return spd_sqrt(p.g(s)) * cplx(model.epsilon, 0.0);
}

CMatrix mapping_torus_dw(const BundleModel& model, double s) {
    GeodesicPath p(model);
    CMatrix w = spd_sqrt(p.g(s));
    return sqrt_deriv(w, p.dg(s)) * cplx(model.epsilon, 0.0);
}

GeometryData eval_geometry(const BundleModel& model, const std::vector<double>& point) {
    model.validate();
    GeometryData out;
    out.point = point;
    const int k = model.family == Family::heisenberg ? 3 : model.k;
    out.tau = zero_tau(k);

    switch (model.family) {
        case Family::warped_torus:
        case Family::forms_torus: {
            const double s = point.at(0);
            const int kk = model.family == Family::forms_torus ? 1 : model.k;
            CMatrix w(kk, kk), dw(kk, kk);
            for (int a = 0; a < kk; ++a) {
                const double c = model.warpings[a].value(s);
                if (c <= 0.0) throw model_error("warping not positive at sample point");
                w(a, a) = model.epsilon * c;
                dw(a, a) = model.epsilon * model.warpings[a].dvalue(s);
            }
            out.W = w;
            out.calW = {connection_form(w, dw)};
            CMatrix wi = real_inverse(w);
            out.T_form = {(wi * dw + dw * wi) * cplx(0.5, 0.0)};
            double tr = 0.0;
            for (int a = 0; a < kk; ++a) tr += out.T_form[0](a, a).real();
            out.mean_curvature = {-tr};
            out.tau = zero_tau(kk);
            out.A_coeffs.assign(static_cast<size_t>(kk), CMatrix(1, 1));
            double det = 1.0;
            for (int a = 0; a < kk; ++a) det *= w(a, a).real();
            out.fiber_vol = std::pow(two_pi, kk) * det;
            break;
        }
        case Family::mapping_torus: {
            const double s = point.at(0);
            GeodesicPath p(model);
            CMatrix g = p.g(s);
            CMatrix w = spd_sqrt(g) * cplx(model.epsilon, 0.0);
            CMatrix dw = sqrt_deriv(spd_sqrt(g), p.dg(s)) * cplx(model.epsilon, 0.0);
            out.W = w;
            out.calW = {connection_form(w, dw)};
            CMatrix wi = real_inverse(w);
            out.T_form = {(wi * dw + dw * wi) * cplx(0.5, 0.0)};
            double tr = 0.0;
            for (int a = 0; a < 2; ++a) tr += out.T_form[0](a, a).real();
            out.mean_curvature = {-tr};
            out.tau = zero_tau(2);
            out.A_coeffs.assign(2, CMatrix(1, 1));
            const double det = w(0, 0).real() * w(1, 1).real() - w(0, 1).real() * w(1, 0).real();
            out.fiber_vol = two_pi * two_pi * det;
            break;
        }
        case Family::circle_bundle_t2: {
            CMatrix w(1, 1);
            w(0, 0) = model.epsilon;
            out.W = w;
            out.calW = {CMatrix(1, 1), CMatrix(1, 1)};
            out.T_form = {CMatrix(1, 1), CMatrix(1, 1)};
            out.mean_curvature = {0.0, 0.0};
            out.tau = zero_tau(1);
            CMatrix a2(2, 2);
            a2(0, 1) = -0.5 * model.curvature_a;  // g(A(xi_1, xi_2), zeta)
            a2(1, 0) = 0.5 * model.curvature_a;
            out.A_coeffs = {a2};
            out.fiber_vol = two_pi * model.epsilon;
            break;
        }
        case Family::heisenberg: {
            const auto [p, q, r] = model.scale_exponents;
            CMatrix w(3, 3);
            w(0, 0) = std::pow(model.epsilon, p);
            w(1, 1) = std::pow(model.epsilon, q);
            w(2, 2) = std::pow(model.epsilon, r);
            out.W = w;
            out.tau = zero_tau(3);
            const double lam = std::pow(model.epsilon, r - p - q);
            out.tau[2][0][1] = lam;
            out.tau[2][1][0] = -lam;
            out.fiber_vol = std::pow(two_pi, 3) * w(0, 0).real() * w(1, 1).real() * w(2, 2).real();
            break;
        }
    }
    out.fiber_christoffel = fiber_christoffel(out.tau);
    if (out.W.rows() > 0) {
        EigenPair e = eigh_jacobi(out.W);
        if (e.values.front() <= 0.0) throw model_error("W not positive definite at sample point");
    }
    return out;
}

std::vector<double> mean_curvature(const BundleModel& model, const std::vector<double>& point) {
    return eval_geometry(model, point).mean_curvature;
}

BoundReport verify_bounds(const BundleModel& model, int grid_points) {
    if (grid_points < 64) grid_points = 64;
    BoundReport rep;
    const int nb = model.base_dim();
    auto frob = [](const CMatrix& m) {
        double s = 0.0;
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) s += std::norm(m(i, j));
        return std::sqrt(s);
    };
    if (nb == 0) {
        // point base: only fiber data; record the Z-identity check
        GeometryData g = eval_geometry(model, {});
        const double id = std::abs(z_norm_squared(g.tau) + 3.0 * scal_fiber(g.tau));
        rep.checks.push_back({"z_norm_sq + 3 scal == 0", id, 1e-12, id <= 1e-12});
        return rep;
    }
    for (int g = 0; g < grid_points; ++g) {
        std::vector<double> pt;
        if (nb == 1)
            pt = {two_pi * g / grid_points};
        else
            pt = {two_pi * (g % grid_points) / grid_points,
                  two_pi * ((g * 7) % grid_points) / grid_points};
        GeometryData geo = eval_geometry(model, pt);
        double tsq = 0.0;
        for (const auto& t : geo.T_form) {
            const double f = frob(t);
            tsq += f * f;
        }
        rep.sup_T = std::max(rep.sup_T, std::sqrt(tsq));
        for (const auto& cw : geo.calW) rep.sup_calW = std::max(rep.sup_calW, frob(cw));
        for (const auto& ac : geo.A_coeffs) rep.sup_A = std::max(rep.sup_A, frob(ac));
    }
    rep.checks.push_back({"||calW|| <= 2 ||T||", rep.sup_calW, 2.0 * rep.sup_T,
                          rep.sup_calW <= 2.0 * rep.sup_T + 1e-12});
    return rep;
}

}  // namespace collapse
