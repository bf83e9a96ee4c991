#pragma once

#include <vector>

namespace mathieu_lattice {

struct TridiagonalEigensystem {
    std::vector<double> values;                // ascending
    std::vector<std::vector<double>> vectors;  // vectors[k] is the unit eigenvector of values[k]
};

// Full eigensystem of a real symmetric tridiagonal matrix: implicit-shift QL
// followed by a Rayleigh-quotient / inverse-iteration polish of every pair,
// so row residuals land near roundoff of the local row scale rather than of
// the matrix norm.  diag has n entries, offdiag n-1.  Throws NumericError if
// an eigenvalue fails to converge.
TridiagonalEigensystem tridiagonal_eigensystem(const std::vector<double>& diag,
                                               const std::vector<double>& offdiag);

}  // namespace mathieu_lattice
