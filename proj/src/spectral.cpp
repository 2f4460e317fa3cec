#include "collapse/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace collapse {

namespace {

double hypot2(double a, double b) { return std::hypot(a, b); }

// Householder reduction of a Hermitian matrix to real symmetric tridiagonal
// form; q accumulates the unitary transform (a = q T q^dagger).
void tridiagonalize(CMatrix a, std::vector<double>& d, std::vector<double>& e, CMatrix& q) {
    const int n = a.rows();
    q = CMatrix::identity(n);
    d.assign(n, 0.0);
    e.assign(n, 0.0);
    for (int k = 0; k < n - 2; ++k) {
        // x = a[k+1..n-1, k]
        double xnorm = 0.0;
        for (int i = k + 1; i < n; ++i) xnorm += std::norm(a(i, k));
        xnorm = std::sqrt(xnorm);
        if (xnorm == 0.0) continue;
        cplx x0 = a(k + 1, k);
        cplx phase = (std::abs(x0) > 0.0) ? x0 / std::abs(x0) : cplx(1.0, 0.0);
        cplx alpha = -phase * xnorm;
        // v = x - alpha e1
        std::vector<cplx> v(n, 0.0);
        for (int i = k + 1; i < n; ++i) v[i] = a(i, k);
        v[k + 1] -= alpha;
        double vnorm2 = 0.0;
        for (int i = k + 1; i < n; ++i) vnorm2 += std::norm(v[i]);
        if (vnorm2 == 0.0) continue;
        // a <- H a H with H = I - 2 v v^dag / |v|^2
        // w = a v
        std::vector<cplx> w(n, 0.0);
        for (int i = 0; i < n; ++i) {
            cplx acc = 0.0;
            for (int j = k + 1; j < n; ++j) acc += a(i, j) * v[j];
            w[i] = acc;
        }
        const double beta = 2.0 / vnorm2;
        // K = beta^2/2 * (v^dag a v) = beta/2 * beta * v.w
        cplx vdotw = 0.0;
        for (int i = k + 1; i < n; ++i) vdotw += std::conj(v[i]) * w[i];
        // rank-2 update: a -= beta (w v^dag + v w^dag) - beta^2 (v^dag w) v v^dag
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                cplx upd = w[i] * std::conj(v[j]) + v[i] * std::conj(w[j]);
                upd -= beta * vdotw * v[i] * std::conj(v[j]);
                a(i, j) -= beta * upd;
            }
        // q <- q H
        for (int i = 0; i < n; ++i) {
            cplx acc = 0.0;
            for (int j = k + 1; j < n; ++j) acc += q(i, j) * v[j];
            for (int j = k + 1; j < n; ++j) q(i, j) -= beta * acc * std::conj(v[j]);
        }
    }
    // phase-scale so subdiagonals become real non-negative
    std::vector<cplx> ph(n, cplx(1.0, 0.0));
    for (int i = 0; i < n - 1; ++i) {
        cplx sub = a(i + 1, i) * std::conj(ph[i]) * ph[i];  // current value in scaled basis
        sub = a(i + 1, i) * ph[i];
        // choose ph[i+1] with  conj(ph[i+1]) * a(i+1,i) * ph[i]  real >= 0
        cplx val = a(i + 1, i) * ph[i];
        ph[i + 1] = (std::abs(val) > 0.0) ? val / std::abs(val) : cplx(1.0, 0.0);
        e[i] = std::abs(val);
    }
    for (int i = 0; i < n; ++i) d[i] = a(i, i).real();
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) q(i, j) *= ph[j];
}

// Implicit-shift QL on a real symmetric tridiagonal, rotations accumulated
// into the complex column basis z (classic tql2 structure).
int tql2(std::vector<double>& d, std::vector<double>& e, CMatrix& z) {
    const int n = static_cast<int>(d.size());
    if (n == 0) return 0;
    int total_iter = 0;
    e.resize(n, 0.0);
    for (int i = 1; i < n; ++i) e[i - 1] = e[i - 1];  // subdiagonal already at [0..n-2]
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= 1e-300 || std::abs(e[m]) <= 2.3e-16 * dd) break;
            }
            if (m != l) {
                if (++iter > 60) throw std::runtime_error("tql2: too many iterations");
                ++total_iter;
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = hypot2(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + (g >= 0 ? std::abs(r) : -std::abs(r)));
                double s = 1.0, c = 1.0, p = 0.0;
                for (int i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = hypot2(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    for (int k = 0; k < z.rows(); ++k) {
                        const cplx zk1 = z(k, i + 1);
                        z(k, i + 1) = s * z(k, i) + c * zk1;
                        z(k, i) = c * z(k, i) - s * zk1;
                    }
                }
                if (r == 0.0 && m - 1 >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
    return total_iter;
}

void sort_pairs(std::vector<double>& d, CMatrix& z) {
    const int n = static_cast<int>(d.size());
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&d](int a, int b) { return d[a] < d[b]; });
    std::vector<double> ds(n);
    CMatrix zs(z.rows(), n);
    for (int j = 0; j < n; ++j) {
        ds[j] = d[idx[j]];
        for (int i = 0; i < z.rows(); ++i) zs(i, j) = z(i, idx[j]);
    }
    d = std::move(ds);
    z = std::move(zs);
}

double max_residual(const CMatrix& a, const std::vector<double>& d, const CMatrix& z) {
    const int n = a.rows();
    double worst = 0.0;
    for (int j = 0; j < n; ++j) {
        double acc = 0.0;
        for (int i = 0; i < n; ++i) {
            cplx r = 0.0;
            for (int k = 0; k < n; ++k) r += a(i, k) * z(k, j);
            r -= d[j] * z(i, j);
            acc += std::norm(r);
        }
        worst = std::max(worst, std::sqrt(acc));
    }
    return worst;
}

CMatrix symmetrized(const CMatrix& a) {
    const int n = a.rows();
    CMatrix s(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
    return s;
}

}  // namespace

EigenPair eigh(const CMatrix& a_in) {
    if (a_in.rows() != a_in.cols()) throw std::invalid_argument("eigh: non-square");
    const int n = a_in.rows();
    EigenPair out;
    if (n == 0) {
        out.vectors = CMatrix(0, 0);
        return out;
    }
    CMatrix a = symmetrized(a_in);
    std::vector<double> d, e;
    CMatrix q;
    tridiagonalize(a, d, e, q);
    out.iterations = tql2(d, e, q);
    sort_pairs(d, q);
    out.values = std::move(d);
    out.vectors = std::move(q);
    out.residual = max_residual(a, out.values, out.vectors);
    return out;
}

EigenPair eigh_jacobi(const CMatrix& a_in) {
    if (a_in.rows() != a_in.cols()) throw std::invalid_argument("eigh_jacobi: non-square");
    const int n = a_in.rows();
    EigenPair out;
    if (n == 0) {
        out.vectors = CMatrix(0, 0);
        return out;
    }
    CMatrix a = symmetrized(a_in);
    CMatrix v = CMatrix::identity(n);
    int sweeps = 0;
    for (; sweeps < 100; ++sweeps) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += std::norm(a(p, q));
        if (std::sqrt(off) < 1e-14 * (1.0 + a.max_abs())) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                if (std::abs(apq) == 0.0) continue;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const cplx phase = apq / std::abs(apq);
                const double theta = 0.5 * std::atan2(2.0 * std::abs(apq), aqq - app);
                const double c = std::cos(theta);
                const cplx s = std::sin(theta) * phase;
                // columns p,q of a and v: right-multiply by J
                for (int i = 0; i < n; ++i) {
                    const cplx aip = a(i, p), aiq = a(i, q);
                    a(i, p) = c * aip - std::conj(s) * aiq;
                    a(i, q) = s * aip + c * aiq;
                    const cplx vip = v(i, p), viq = v(i, q);
                    v(i, p) = c * vip - std::conj(s) * viq;
                    v(i, q) = s * vip + c * viq;
                }
                // rows p,q of a: left-multiply by J^dagger
                for (int j = 0; j < n; ++j) {
                    const cplx apj = a(p, j), aqj = a(q, j);
                    a(p, j) = c * apj - s * aqj;
                    a(q, j) = std::conj(s) * apj + c * aqj;
                }
            }
    }
    std::vector<double> d(n);
    for (int i = 0; i < n; ++i) d[i] = a(i, i).real();
    sort_pairs(d, v);
    out.values = std::move(d);
    out.vectors = std::move(v);
    out.iterations = sweeps;
    out.residual = max_residual(symmetrized(a_in), out.values, out.vectors);
    return out;
}

EigenReport hermitian_eigenvalues(const CMatrix& a, double tol, double herm_tol) {
    EigenReport rep;
    if (a.rows() == 0) return rep;
    const double defect = a.hermiticity_defect();
    if (defect > herm_tol)
        throw std::invalid_argument("hermitian_eigenvalues: matrix not Hermitian within tolerance");
    EigenPair p = (a.rows() <= 64) ? eigh_jacobi(a) : eigh(a);
    rep.eigenvalues = std::move(p.values);
    rep.residual = p.residual;
    rep.iterations = p.iterations;
    if (rep.residual > tol * std::max(1.0, a.max_abs()) * a.rows())
        throw std::runtime_error("hermitian_eigenvalues: residual above tolerance");
    return rep;
}

std::vector<double> leading_by_abs(const std::vector<double>& vals, int count) {
    std::vector<double> v = vals;
    std::stable_sort(v.begin(), v.end(), [](double a, double b) {
        const double fa = std::abs(a), fb = std::abs(b);
        if (fa != fb) return fa < fb;
        return a < b;
    });
    if (static_cast<int>(v.size()) > count) v.resize(count);
    return v;
}

EigenReport converged_spectrum(const std::function<CMatrix(int)>& recipe, int start_n,
                               double tol) {
    EigenReport rep;
    std::vector<double> prev;
    int n = std::max(start_n, 2);
    const int n_limit = 4096;
    while (true) {
        EigenReport cur = hermitian_eigenvalues(recipe(n));
        std::vector<double> lead = leading_by_abs(cur.eigenvalues, 10);
        rep.history.emplace_back(n, lead);
        if (!prev.empty() && prev.size() == lead.size()) {
            double delta = 0.0;
            for (size_t i = 0; i < lead.size(); ++i)
                delta = std::max(delta, std::abs(lead[i] - prev[i]));
            if (delta < tol) {
                rep.eigenvalues = std::move(cur.eigenvalues);
                rep.residual = cur.residual;
                rep.iterations = cur.iterations;
                rep.converged = true;
                return rep;
            }
        }
        prev = std::move(lead);
        if (2 * n > n_limit) {
            EigenReport last = hermitian_eigenvalues(recipe(n));
            rep.eigenvalues = std::move(last.eigenvalues);
            rep.residual = last.residual;
            rep.converged = false;
            return rep;
        }
        n *= 2;
    }
}

}  // namespace collapse
