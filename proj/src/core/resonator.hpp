#pragma once

#include <string>
#include <utility>
#include <vector>

namespace ulsim {

struct Material {
    double young_modulus_pa = 193e9;
    double density_kg_m3 = 7980.0;
    double poisson_ratio = 0.27;

    void validate() const;
};

struct BeamGeometry {
    double length_m = 0.032;
    double width_m = 0.010;
    double thickness_m = 0.001;

    void validate() const;
    bool thin() const { return thickness_m <= length_m / 10.0; }
    double area_m2() const { return width_m * thickness_m; }
    double second_moment_m4() const {
        return width_m * thickness_m * thickness_m * thickness_m / 12.0;
    }
};

struct RingGeometry {
    double outer_diameter_m = 0.010;
    double radial_thickness_m = 0.0008;
    double axial_width_m = 0.010;

    void validate() const;
    double mean_radius_m() const { return (outer_diameter_m - radial_thickness_m) / 2.0; }
    double area_m2() const { return axial_width_m * radial_thickness_m; }
    double second_moment_m4() const {
        const double t = radial_thickness_m;
        return axial_width_m * t * t * t / 12.0;
    }
};

/// One flexural mode. Positions are normalized x/L in [0,1] for beams and
/// angles in [0,2*pi) for rings. Antinode lists include the free beam ends,
/// which carry the largest displacement of a free-free shape.
struct ModeShape {
    int mode_index = 0;
    double frequency_hz = 0.0;
    std::vector<double> node_positions;
    std::vector<double> antinode_positions;
};

struct ModalResult {
    std::vector<ModeShape> modes;
    std::vector<std::string> warnings;
};

/// Driven steady-state response of one module near a single resonance.
struct ResonatorModel {
    double resonance_frequency_hz = 0.0;
    double quality_factor = 0.0;
    double gain_m_per_v = 0.0; // amplitude per volt at resonance

    void validate() const;
};

/// n-th root of cos(x)*cosh(x) = 1 (free-free beam characteristic equation),
/// n >= 1, solved to 1e-12 relative tolerance.
double free_free_characteristic_root(int n);

/// Euler-Bernoulli free-free modal analysis. Mode n has n+1 nodes; frequency
/// f_n = (beta_n L)^2 / (2*pi*L^2) * sqrt(E I / (rho A)). Thickness beyond
/// L/10 degrades the thin-beam assumption and is reported as a warning.
ModalResult beam_free_free_modes(const BeamGeometry& geom, const Material& mat, int max_mode);

/// Thin-ring in-plane flexural modes n = 2..max_mode:
///   w_n = n (n^2 - 1) / sqrt(n^2 + 1) * sqrt(E I / (rho A R^4)).
/// n = 1 is rigid translation and excluded. Mode n has 2n nodes and 2n
/// evenly spaced antinodes.
ModalResult ring_inplane_modes(const RingGeometry& geom, const Material& mat, int max_mode);

/// Lorentzian magnitude response:
///   a(V, f) = gain * V / sqrt(1 + Q^2 * (f/f0 - f0/f)^2).
/// Exactly gain*V at f = f0, monotonically decreasing with detuning.
double drive_response(const ResonatorModel& model, double voltage_v, double frequency_hz);

/// Uniform grid of (frequency, amplitude) samples over [f_start, f_end].
std::vector<std::pair<double, double>> frequency_sweep(const ResonatorModel& model,
                                                       double voltage_v, double f_start_hz,
                                                       double f_end_hz, int steps);

} // namespace ulsim
