#include "collapse/clifford.hpp"

#include <stdexcept>

namespace collapse {

namespace {

const cplx kI(0.0, 1.0);

CMatrix pauli(int which) {
    CMatrix m(2, 2);
    switch (which) {
        case 1: m(0, 1) = 1.0; m(1, 0) = 1.0; break;
        case 2: m(0, 1) = -kI; m(1, 0) = kI; break;
        case 3: m(0, 0) = 1.0; m(1, 1) = -1.0; break;
        default: throw std::logic_error("pauli");
    }
    return m;
}

CMatrix volume_of(const std::vector<CMatrix>& gammas, int n) {
    const int d = gammas.empty() ? 1 : gammas.front().rows();
    CMatrix om = CMatrix::identity(d);
    for (const auto& g : gammas) om = om * g;
    const int p = ((n + 1) / 2) % 4;
    static const cplx ipow[4] = {cplx(1, 0), cplx(0, 1), cplx(-1, 0), cplx(0, -1)};
    return om * ipow[p];
}

}  // namespace

CliffordRep make_clifford_rep(int n) {
    if (n < 1) throw std::invalid_argument("make_clifford_rep: dimension must be >= 1");
    CliffordRep rep;
    rep.n = n;
    const int m = n / 2;
    // Jordan-Wigner chains: g_{2j-1} = s3^(j-1) (x) i*s1 (x) 1,  g_{2j} = ... i*s2 ...
    for (int j = 1; j <= m; ++j) {
        for (int which : {1, 2}) {
            CMatrix g(1, 1);
            g(0, 0) = 1.0;
            for (int p = 0; p < j - 1; ++p) g = g.kron(pauli(3));
            g = g.kron(pauli(which) * kI);
            for (int p = j; p < m; ++p) g = g.kron(CMatrix::identity(2));
            rep.gammas.push_back(g);
        }
    }
    if (n % 2 == 1) {
        // append -i * omega_{n-1}; makes the odd volume element act as +Id
        CMatrix om = volume_of(rep.gammas, n - 1);
        rep.gammas.push_back(om * (-kI));
    }
    rep.volume = volume_of(rep.gammas, n);
    rep.chirality_convention = +1;
    return rep;
}

CMatrix complex_volume(const CliffordRep& rep) { return volume_of(rep.gammas, rep.n); }

SplitRep split_rep(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("split_rep: dimensions must be >= 1");
    SplitRep s;
    s.n = n;
    s.k = k;
    s.base_rep = make_clifford_rep(n);
    s.fiber_rep = make_clifford_rep(k);
    const CMatrix in = CMatrix::identity(s.base_rep.dim());
    const CMatrix ik = CMatrix::identity(s.fiber_rep.dim());

    std::vector<CMatrix> gam;
    if (k % 2 == 0) {
        s.parity_case = ParityCase::k_even;
        const CMatrix& wk = s.fiber_rep.volume;
        for (const auto& g : s.base_rep.gammas) gam.push_back(g.kron(wk));
        for (const auto& g : s.fiber_rep.gammas) gam.push_back(in.kron(g));
    } else if (n % 2 == 0) {
        s.parity_case = ParityCase::n_even;
        const CMatrix& wn = s.base_rep.volume;
        for (const auto& g : s.base_rep.gammas) gam.push_back(g.kron(ik));
        for (const auto& g : s.fiber_rep.gammas) gam.push_back(wn.kron(g));
    } else {
        s.parity_case = ParityCase::both_odd;
        s.doubling_flag = true;
        // doubled carrier (S_n^+ + S_n^-) (x) S_k; the omega_n eigenbasis is
        // ordered positive block first
        for (const auto& g : s.base_rep.gammas) gam.push_back(pauli(3).kron(g.kron(ik)));
        for (const auto& g : s.fiber_rep.gammas) gam.push_back(pauli(1).kron(in.kron(g)));
    }
    s.assembled.n = n + k;
    s.assembled.gammas = std::move(gam);
    s.assembled.volume = volume_of(s.assembled.gammas, n + k);
    return s;
}

CMatrix SplitRep::embedded_omega_n() const {
    std::vector<CMatrix> horiz(assembled.gammas.begin(), assembled.gammas.begin() + n);
    const int d = carrier_dim();
    CMatrix om = CMatrix::identity(d);
    for (const auto& g : horiz) om = om * g;
    const int p = ((n + 1) / 2) % 4;
    static const cplx ipow[4] = {cplx(1, 0), cplx(0, 1), cplx(-1, 0), cplx(0, -1)};
    return om * ipow[p];
}

CMatrix SplitRep::embedded_omega_k() const {
    const int d = carrier_dim();
    CMatrix om = CMatrix::identity(d);
    for (int a = 0; a < k; ++a) om = om * assembled.gammas[n + a];
    const int p = ((k + 1) / 2) % 4;
    static const cplx ipow[4] = {cplx(1, 0), cplx(0, 1), cplx(-1, 0), cplx(0, -1)};
    return om * ipow[p];
}

double clifford_relation_defect(const std::vector<CMatrix>& gammas) {
    if (gammas.empty()) return 0.0;
    const int d = gammas.front().rows();
    const CMatrix id = CMatrix::identity(d);
    double defect = 0.0;
    for (size_t i = 0; i < gammas.size(); ++i) {
        defect = std::max(defect, (gammas[i] + gammas[i].adjoint()).max_abs());
        for (size_t j = i; j < gammas.size(); ++j) {
            CMatrix ac = gammas[i] * gammas[j] + gammas[j] * gammas[i];
            if (i == j) ac += id * 2.0;
            defect = std::max(defect, ac.max_abs());
        }
    }
    return defect;
}

}  // namespace collapse
