#pragma once

#include <complex>
#include <filesystem>
#include <string>
#include <vector>

#include "mathieu_lattice/lattice.hpp"
#include "mathieu_lattice/spectrum.hpp"

namespace mathieu_lattice {

// Complex field over lattice sites -J..J at propagation distance z.
struct FieldState {
    double z = 0.0;
    std::vector<std::complex<double>> amplitudes;  // amplitudes[j + J]

    int half_width() const { return (static_cast<int>(amplitudes.size()) - 1) / 2; }
    std::complex<double>& at(int site) { return amplitudes[static_cast<std::size_t>(site + half_width())]; }
    const std::complex<double>& at(int site) const { return amplitudes[static_cast<std::size_t>(site + half_width())]; }
    double norm() const;  // sum_j |c_j|^2

    // Single excited site with unit amplitude.
    static FieldState single_site(int J, int site);
};

struct SiteObservables {
    double norm = 0.0;               // sum |c_j|^2
    double second_moment = 0.0;      // sum j^2 |c_j|^2
    double participation_ratio = 0.0;  // (sum |c_j|^2)^2 / sum |c_j|^4
};

SiteObservables observables(const FieldState& state);

struct PropagationResult {
    std::vector<double> z_grid;
    std::vector<FieldState> states;
    std::vector<SiteObservables> site_observables;

    double max_edge_amplitude = 0.0;  // max |c_{+-J}| seen anywhere in the run
    bool edge_contaminated = false;   // max_edge_amplitude > 1e-8 (hard edges reflect flux)
    double max_norm_drift = 0.0;      // direct integration only; 0 for the spectral path
    bool quality_warning = false;     // norm drift exceeded 1e-6
};

// Propagator matrix element  c_n(z; j) = sum_m A_n^(m) A_j^(m) e^{-i z E_m}.
std::complex<double> kernel_element(const SpectralBasis& basis, int n, int j, double z);

// Spectral evolution of an input field to every z in an ascending grid.
// The input's own z is the origin: phases advance by (z - input.z), so a
// state taken from a previous run can be propagated onward directly.
// Negative distances are legal (the propagator is a group).  Cost is
// O(dim^2) per grid point: one mode projection, then phase-and-reconstruct.
PropagationResult propagate(const SpectralBasis& basis, const FieldState& input,
                            const std::vector<double>& z_grid);

// Independent check of the spectral path: classical fixed-step RK4 on
//   i dc_j/dz = j^2 c_j + q (c_{j-1} + c_{j+1}),
// sampling the same grid.  step is the maximum substep; each grid interval
// is subdivided evenly so every grid point is hit exactly.  Rejects steps
// beyond the RK4 imaginary-axis stability limit; norm drift above 1e-6 sets
// quality_warning on the result.
PropagationResult integrate_direct(const LatticeConfig& cfg, const FieldState& input,
                                   const std::vector<double>& z_grid, double step);

// CSV export: header "z,j=-J,...,j=J", one row per grid point with |c_j|^2.
std::string intensity_csv(const PropagationResult& result);

// Grayscale heatmap: 16-bit binary PGM, one row per z sample, one column per
// site, intensity mapped linearly from [0, max |c|^2].
void write_intensity_pgm(const std::filesystem::path& path, const PropagationResult& result);

}  // namespace mathieu_lattice
