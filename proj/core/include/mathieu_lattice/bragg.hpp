#pragma once

#include <complex>
#include <string>
#include <vector>

#include "mathieu_lattice/propagator.hpp"

namespace mathieu_lattice {

// Physical parameters of a single first-order Bragg diffraction run.
// delta, eta and the index shift l are always derived from (omega_k, omega_D),
// never stored independently.
struct BraggConfig {
    double omega = 0.0;    // half the Bragg-Rabi frequency
    double omega_k = 1.0;  // recoil frequency k^2/2, > 0
    double omega_D = 0.0;  // Doppler shift

    double delta() const { return -omega_k; }
    double eta() const { return omega_k - omega_D; }
    double shift_index() const { return eta() / (2.0 * delta()); }  // l
    double lattice_q() const { return omega / delta(); }

    void validate() const;  // throws ConfigError (requires omega_k > 0, finite fields)

    // l rounded to the nearest integer; throws ConfigError when l is not an
    // integer, quoting l = eta / (2 delta).  Frame equivalence needs integer l.
    int integer_shift() const;
};

// Momentum-ladder amplitudes g_j(t), j = -J..J.
struct BraggState {
    double t = 0.0;
    std::vector<std::complex<double>> amplitudes;

    int half_width() const { return (static_cast<int>(amplitudes.size()) - 1) / 2; }
    std::complex<double>& at(int site) { return amplitudes[static_cast<std::size_t>(site + half_width())]; }
    const std::complex<double>& at(int site) const { return amplitudes[static_cast<std::size_t>(site + half_width())]; }
    double norm() const;

    static BraggState single_site(int J, int site);
};

struct BraggRun {
    std::vector<double> t_grid;
    std::vector<BraggState> states;
    double max_norm_drift = 0.0;
    bool quality_warning = false;  // norm drift exceeded 1e-6
};

// Fixed-step RK4 on the explicitly time-dependent ladder system
//   i dg_j/dt = -Omega [ g_{j-1} e^{i omega_D t} e^{i 2 omega_k (j-1) t}
//                      + g_{j+1} e^{-i omega_D t} e^{-i 2 omega_k j t} ],
// with the oscillatory phases evaluated exactly at every stage time.
// t_grid must ascend from 0; input is the t = 0 state.
BraggRun integrate_bragg(const BraggConfig& cfg, const BraggState& input,
                         const std::vector<double>& t_grid, double step);

// Gauge transform into the lattice frame: amplitude g_j(t) lands on lattice
// site j + l carrying the phase e^{i delta t j^2} e^{i eta t j}, at distance
// z = delta t.  The phases are unimodular, so populations are preserved
// site-for-site: |c_{j+l}(z)| = |g_j(t)|.
FieldState frame_map(const BraggConfig& cfg, const BraggState& state);

struct EquivalenceReport {
    double omega = 0.0;
    double omega_k = 0.0;
    double omega_D = 0.0;
    double delta = 0.0;
    double eta = 0.0;
    double l = 0.0;
    double q = 0.0;
    double t_max = 0.0;
    double h = 0.0;
    double max_population_discrepancy = 0.0;
    double norm_drift_bragg = 0.0;
    double norm_drift_lattice = 0.0;
};

// Integrates the time-dependent ladder, frame-maps every sample, evolves the
// frame-mapped initial state through the static lattice with q = Omega/delta
// at z = delta t (both negative), and reports the worst per-site population
// difference between the two routes.
EquivalenceReport verify_equivalence(const BraggConfig& cfg, const BraggState& input,
                                     double t_max, double step, std::size_t samples = 301);

// JSON export of the report.
std::string equivalence_json(const EquivalenceReport& report);

// Coupling-only limit: with the quadratic term dropped, a single excited site
// spreads with closed-form populations |J_n(2 Omega t)|^2.
struct RamanNathTable {
    std::vector<double> omega_t_grid;  // values of Omega * t
    int n_max = 0;
    std::vector<double> bessel_sq;     // row-major [ix][n + n_max], n = -n_max..n_max
    std::vector<double> lattice_sq;    // same layout, from the zero-diagonal lattice
    double max_deviation = 0.0;

    std::size_t columns() const { return static_cast<std::size_t>(2 * n_max + 1); }
};

// Tabulates |J_n(2 Omega t)|^2 over the grid and cross-checks it against
// spectral propagation through the lattice with its diagonal zeroed.
RamanNathTable raman_nath_profile(const std::vector<double>& omega_t_grid, int n_max, int J = 64);

// CSV export: header "x,n,bessel_sq,lattice_sq" with x = 2 Omega t.
std::string raman_nath_csv(const RamanNathTable& table);

}  // namespace mathieu_lattice
