#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "collapse/cmatrix.hpp"

namespace collapse {

struct EigenPair {
    std::vector<double> values;  // ascending
    CMatrix vectors;             // columns, same order
    double residual = 0.0;       // max ||A v - lambda v||_2
    int iterations = 0;
};

// Householder tridiagonalization + implicit-shift QL, with eigenvectors.
EigenPair eigh(const CMatrix& a);

// Cyclic complex Jacobi; intended as the independent cross-check path for
// dimensions up to ~64.
EigenPair eigh_jacobi(const CMatrix& a);

struct EigenReport {
    std::vector<double> eigenvalues;
    double residual = 0.0;
    int iterations = 0;
    bool converged = true;
    // truncation history: (N, first 10 eigenvalues by |.|, negative first)
    std::vector<std::pair<int, std::vector<double>>> history;
};

// Full spectrum of a Hermitian matrix. The input must be Hermitian within
// herm_tol (it is symmetrized before solving); the residual of the returned
// pairs is checked against tol.
EigenReport hermitian_eigenvalues(const CMatrix& a, double tol = 1e-11,
                                  double herm_tol = 1e-10);

// First `count` eigenvalues ordered by absolute value, ties negative first.
std::vector<double> leading_by_abs(const std::vector<double>& sorted_ascending, int count);

// Doubles the truncation until the first 10 eigenvalues (by absolute value)
// are stable within tol between successive truncations. The recipe maps a
// truncation N to the assembled Hermitian matrix. Gives up at N > 4096 with
// converged = false and the history retained.
EigenReport converged_spectrum(const std::function<CMatrix(int)>& recipe, int start_n,
                               double tol = 1e-8);

}  // namespace collapse
