#pragma once

#include <vector>

namespace mathieu_lattice {

// One simulation instance: coupling strength q and truncation half-width J.
// The lattice carries sites j = -J..J; site j has propagation constant j^2
// and couples to its nearest neighbours with strength q.
struct LatticeConfig {
    double q = 0.0;
    int J = 64;
    double eig_tol = 1e-12;   // eigen-residual acceptance tolerance
    double tail_tol = 1e-10;  // edge-coefficient threshold for truncation contamination

    void validate() const;  // throws ConfigError
};

// Symmetric tridiagonal realization of N^2 + q(V + V^dag) on sites -J..J,
// with hard (Dirichlet) edges.  diag[j + J] = j^2; both off-diagonals are
// the constant q.
struct TruncatedOperator {
    int J = 0;
    std::vector<double> diag;
    double offdiag = 0.0;

    int dim() const { return 2 * J + 1; }

    // Dense view of the band; zero whenever |row - col| >= 2.  0-based.
    double entry(int row, int col) const;
};

TruncatedOperator build_operator(const LatticeConfig& cfg);

}  // namespace mathieu_lattice
