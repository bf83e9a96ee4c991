#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "mathieu_lattice/spectrum.hpp"

namespace mathieu_lattice {

// One lattice eigenmode viewed as a 2pi-periodic Floquet eigenfunction:
//   cse_m(x; q) = sum_j A_j^(m) e^{i j x},
// real-valued for even modes, purely imaginary for odd ones.
struct MathieuFunction {
    int m = 0;
    double q = 0.0;
    int J = 0;
    std::vector<double> coefficients;  // A_j, j = -J..J
    Parity parity = Parity::none;
    int parity_rank = 0;  // position among same-parity modes; defines the classical order
    std::optional<MathieuIndex> index;
    double eigenvalue = 0.0;

    double coeff(int j) const { return coefficients[static_cast<std::size_t>(j + J)]; }

    // Extracts mode m.  Truncation-contaminated modes are refused (their
    // Fourier tail is not trustworthy).
    static MathieuFunction from_basis(const SpectralBasis& basis, int m);
};

// Finite Fourier sum over j = -J..J.
std::complex<double> eval_cse(const MathieuFunction& fn, double x);

// Classical angular-Mathieu coefficients at parameter 4q recovered from the
// lattice coefficients: for even modes the table A_0, A_2, A_4, ... of
// ce_{2r}, normalized as 2 A_0^2 + sum A_{2j}^2 = 1; for odd modes the table
// B_2, B_4, ... of se_{2r+2}, normalized as sum B_{2j+2}^2 = 1.
struct ClassicalCoefficients {
    MathieuKind kind = MathieuKind::ce;
    int order = 0;
    std::vector<double> values;
};

ClassicalCoefficients classical_form(const MathieuFunction& fn);

// Max over x_grid of the angular-equation residual
//   [-d^2/dx^2 + q(e^{ix} + e^{-ix}) - E] cse(x),
// evaluated term-by-term on the Fourier sum (the second derivative maps to
// j^2, the potential to index shifts), which makes it the three-term
// recurrence residual resummed.
double ode_residual(const MathieuFunction& fn, double eigenvalue, const std::vector<double>& x_grid);

// CSV export: header "x,re,im", uniform grid of `points` samples over [0, 2pi).
std::string function_table_csv(const MathieuFunction& fn, std::size_t points);

}  // namespace mathieu_lattice
