#pragma once

#include <vector>

#include "collapse/cmatrix.hpp"

namespace collapse {

// Irreducible complex Clifford module of Cl(n) on C^(2^floor(n/2)), with the
// skew-Hermitian convention gamma(v)^2 = -|v|^2. For odd n the representative
// is normalized so the complex volume element acts as +Id.
struct CliffordRep {
    int n = 0;
    std::vector<CMatrix> gammas;
    CMatrix volume;                // i^floor((n+1)/2) * g_1...g_n
    int chirality_convention = +1; // sign of the volume action for odd n

    int dim() const { return gammas.empty() ? 1 : gammas.front().rows(); }
};

enum class ParityCase { n_even, k_even, both_odd };

// Cl(n+k) realized on the tensor product carrier of the base and fiber modules.
// Carrier:
//   k even:    S_n (x) S_k,    gamma_h = g_n (x) w_k,     gamma_v = 1 (x) g_k
//   n even:    S_n (x) S_k,    gamma_h = g_n (x) 1,       gamma_v = w_n (x) g_k
//   both odd:  C^2 (x) S_n (x) S_k (doubled carrier),
//              gamma_h = s3 (x) g_n (x) 1,  gamma_v = s1 (x) 1 (x) g_k
// where w_m is the complex volume element of the even factor, acting as the
// chirality grading psi -> psi_bar. When both n and k are even the k-even rule
// is used (the two choices are equivalent).
struct SplitRep {
    int n = 0, k = 0;
    CliffordRep base_rep;
    CliffordRep fiber_rep;
    CliffordRep assembled;  // n+k gammas on the tensor carrier
    ParityCase parity_case = ParityCase::k_even;
    bool doubling_flag = false;

    const CMatrix& gamma_h(int alpha) const { return assembled.gammas[alpha]; }
    const CMatrix& gamma_v(int a) const { return assembled.gammas[n + a]; }
    // Volume elements of the embedded horizontal / vertical factors.
    CMatrix embedded_omega_n() const;
    CMatrix embedded_omega_k() const;
    int carrier_dim() const { return assembled.dim(); }
};

CliffordRep make_clifford_rep(int n);
CMatrix complex_volume(const CliffordRep& rep);
SplitRep split_rep(int n, int k);

// Max deviation from the Cl(n) relations g_i g_j + g_j g_i = -2 delta_ij and
// from skew-Hermiticity; zero for a valid module.
double clifford_relation_defect(const std::vector<CMatrix>& gammas);

}  // namespace collapse
