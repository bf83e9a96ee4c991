#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mathieu_lattice/lattice.hpp"

namespace mathieu_lattice {

// Reflection symmetry of a coefficient vector: even means A_j = A_{-j},
// odd means A_j = -A_{-j}.  none occurs only in the decoupled q = 0 basis,
// where the degenerate +-j pairs are kept as coordinate vectors.
enum class Parity { even, odd, none };

enum class MathieuKind { ce, se };

// Classical angular-Mathieu label of a lattice mode: even-parity modes in
// ascending order are ce_{2r}, odd-parity ones are se_{2r+2}; the associated
// characteristic value is 4 E at parameter 4q.
struct MathieuIndex {
    MathieuKind kind = MathieuKind::ce;
    int r = 0;

    int order() const { return kind == MathieuKind::ce ? 2 * r : 2 * r + 2; }
};

// Complete eigenbasis of a TruncatedOperator.
//
// Conventions:
//   - eigenvalues ascending; coefficient vectors unit 2-norm;
//   - sign fixed so the largest-magnitude entry (lowest |j|, then j >= 0,
//     as tie-breaks) is positive;
//   - modes whose edge coefficients exceed tail_tol are flagged
//     contaminated: they stay in the basis (completeness) but carry no
//     Mathieu label;
//   - mathieu_index is assigned only for q > 0.
struct SpectralBasis {
    double q = 0.0;
    int J = 0;
    std::vector<double> eigenvalues;
    std::vector<std::vector<double>> coefficients;  // coefficients[m][j + J]
    std::vector<Parity> parity;
    std::vector<bool> contaminated;
    std::vector<std::optional<MathieuIndex>> mathieu_index;

    int dim() const { return 2 * J + 1; }
    double coeff(int m, int site) const { return coefficients[static_cast<std::size_t>(m)][static_cast<std::size_t>(site + J)]; }

    // Number of same-parity modes below m; defines the classical order.
    int parity_rank(int m) const;
};

// Eigensystem of a reflection-symmetric lattice operator (diag[-j] == diag[j]).
// For offdiag != 0 the problem is split into independent even/odd sectors, so
// every eigenvector has exact parity even when cross-sector eigenvalues are
// degenerate to rounding.  For offdiag == 0 the matrix is already diagonal and
// the basis is the coordinate one.  No Mathieu labels are assigned.
SpectralBasis solve_reflection_symmetric(const TruncatedOperator& op, const LatticeConfig& cfg);

// solve_reflection_symmetric plus the Mathieu index map.  op must be the
// operator built from cfg.  Every mode is residual-checked against
//   |(j^2 - E) A_j + q (A_{j-1} + A_{j+1})| <= eig_tol * max(1, |E|)
// on interior sites; violation raises NumericError with the mode index.
SpectralBasis solve_spectrum(const TruncatedOperator& op, const LatticeConfig& cfg);

struct CharacteristicValue {
    int m = 0;
    MathieuKind kind = MathieuKind::ce;
    int r = 0;
    double value = 0.0;  // 4 E_m(q), the classical characteristic value at parameter 4q
};

// Classical labels and characteristic values for every cleanly converged mode
// of a q > 0 basis, in ascending mode order.
std::vector<CharacteristicValue> mathieu_characteristics(const SpectralBasis& basis);

// Characteristic curves E_m(q): the modes m = 0..m_max (inclusive) for every
// q in an ascending grid.
struct StabilityChart {
    std::vector<double> q_grid;
    int m_max = 0;
    std::vector<double> values;  // row-major: values[iq * (m_max + 1) + m]

    double at(std::size_t iq, int m) const { return values[iq * static_cast<std::size_t>(m_max + 1) + static_cast<std::size_t>(m)]; }
};

StabilityChart stability_chart(const std::vector<double>& q_grid, int J, int m_max,
                               double eig_tol = 1e-12, double tail_tol = 1e-10);

// CSV export, header "q,m,E", one row per (q, m).
std::string chart_csv(const StabilityChart& chart);

}  // namespace mathieu_lattice
