#include "core/resonator.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "core/errors.hpp"

namespace ulsim {

namespace {

constexpr double kPi = std::numbers::pi;

// Characteristic function rewritten as cos(x) - sech(x): same roots as
// cos(x)cosh(x) = 1 but bounded for large x.
double characteristic(double x) { return std::cos(x) - 1.0 / std::cosh(x); }

// Bisection to ~1e-13 relative width; assumes f(lo) and f(hi) bracket a root.
double bisect(const std::function<double(double)>& f, double lo, double hi) {
    double flo = f(lo);
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((flo < 0.0) != (fm < 0.0)) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
        if (hi - lo <= 1e-13 * std::max(1.0, std::abs(mid))) break;
    }
    return 0.5 * (lo + hi);
}

// All roots of f in (0,1), endpoints excluded. Scans a fine grid, honoring
// exact zeros on grid points (symmetric shapes put extrema exactly at 0.5).
std::vector<double> interior_roots(const std::function<double(double)>& f, int grid) {
    std::vector<double> roots;
    double prev_x = 0.0;
    double prev_f = f(0.0);
    for (int i = 1; i <= grid; ++i) {
        const double x = static_cast<double>(i) / grid;
        const double fx = f(x);
        if (fx == 0.0) {
            if (x < 1.0) roots.push_back(x);
        } else if (prev_f == 0.0) {
            // root already recorded at prev_x (or it was the left endpoint)
        } else if ((prev_f < 0.0) != (fx < 0.0)) {
            roots.push_back(bisect(f, prev_x, x));
        }
        prev_x = x;
        prev_f = fx;
    }
    return roots;
}

} // namespace

void Material::validate() const {
    std::vector<std::string> issues;
    if (!(young_modulus_pa > 0.0)) issues.push_back("material.young_modulus_pa: must be > 0");
    if (!(density_kg_m3 > 0.0)) issues.push_back("material.density_kg_m3: must be > 0");
    if (!(poisson_ratio > 0.0 && poisson_ratio < 0.5))
        issues.push_back("material.poisson_ratio: must be in (0, 0.5)");
    if (!issues.empty()) throw ValidationError(std::move(issues));
}

void BeamGeometry::validate() const {
    std::vector<std::string> issues;
    if (!(length_m > 0.0)) issues.push_back("beam.length_m: must be > 0");
    if (!(width_m > 0.0)) issues.push_back("beam.width_m: must be > 0");
    if (!(thickness_m > 0.0)) issues.push_back("beam.thickness_m: must be > 0");
    if (!issues.empty()) throw ValidationError(std::move(issues));
}

void RingGeometry::validate() const {
    std::vector<std::string> issues;
    if (!(outer_diameter_m > 0.0)) issues.push_back("ring.outer_diameter_m: must be > 0");
    if (!(radial_thickness_m > 0.0)) issues.push_back("ring.radial_thickness_m: must be > 0");
    if (!(axial_width_m > 0.0)) issues.push_back("ring.axial_width_m: must be > 0");
    if (radial_thickness_m >= outer_diameter_m / 2.0)
        issues.push_back("ring.radial_thickness_m: must be < outer_diameter_m / 2");
    if (!issues.empty()) throw ValidationError(std::move(issues));
}

void ResonatorModel::validate() const {
    std::vector<std::string> issues;
    if (!(resonance_frequency_hz > 0.0))
        issues.push_back("resonator.resonance_frequency_hz: must be > 0");
    if (!(quality_factor > 0.0)) issues.push_back("resonator.quality_factor: must be > 0");
    if (!(gain_m_per_v > 0.0)) issues.push_back("resonator.gain_m_per_v: must be > 0");
    if (!issues.empty()) throw ValidationError(std::move(issues));
}

double free_free_characteristic_root(int n) {
    if (n < 1) throw std::invalid_argument("free_free_characteristic_root: n must be >= 1");
    // Roots sit near (2n+1)*pi/2; the offset shrinks like sech, so +-0.7
    // always brackets.
    const double center = (2.0 * n + 1.0) * kPi / 2.0;
    const double lo = center - 0.7;
    const double hi = center + 0.7;
    if ((characteristic(lo) < 0.0) == (characteristic(hi) < 0.0))
        throw std::runtime_error("free_free_characteristic_root: bracket failed for mode " +
                                 std::to_string(n));
    return bisect(characteristic, lo, hi);
}

ModalResult beam_free_free_modes(const BeamGeometry& geom, const Material& mat, int max_mode) {
    geom.validate();
    mat.validate();
    if (max_mode < 0) throw std::invalid_argument("beam_free_free_modes: max_mode must be >= 0");

    ModalResult result;
    if (!geom.thin())
        result.warnings.push_back("thin-beam validity: thickness exceeds length/10, "
                                  "Euler-Bernoulli frequencies will overestimate");

    const double L = geom.length_m;
    const double wave_speed =
        std::sqrt(mat.young_modulus_pa * geom.second_moment_m4() /
                  (mat.density_kg_m3 * geom.area_m2()));

    for (int n = 1; n <= max_mode; ++n) {
        const double lam = free_free_characteristic_root(n);
        ModeShape mode;
        mode.mode_index = n;
        mode.frequency_hz = lam * lam / (2.0 * kPi * L * L) * wave_speed;

        // Free-free shape W(xi) = cosh + cos - sigma*(sinh + sin) on xi in [0,1].
        const double sigma =
            (std::cosh(lam) - std::cos(lam)) / (std::sinh(lam) - std::sin(lam));
        auto shape = [lam, sigma](double xi) {
            return std::cosh(lam * xi) + std::cos(lam * xi) -
                   sigma * (std::sinh(lam * xi) + std::sin(lam * xi));
        };
        auto slope = [lam, sigma](double xi) {
            return lam * (std::sinh(lam * xi) - std::sin(lam * xi) -
                          sigma * (std::cosh(lam * xi) + std::cos(lam * xi)));
        };

        const int grid = 2048 * (n + 1);
        mode.node_positions = interior_roots(shape, grid);
        mode.antinode_positions = interior_roots(slope, grid);
        // ends are displacement maxima of a free-free shape
        mode.antinode_positions.insert(mode.antinode_positions.begin(), 0.0);
        mode.antinode_positions.push_back(1.0);
        result.modes.push_back(std::move(mode));
    }
    return result;
}

ModalResult ring_inplane_modes(const RingGeometry& geom, const Material& mat, int max_mode) {
    geom.validate();
    mat.validate();
    if (max_mode < 0) throw std::invalid_argument("ring_inplane_modes: max_mode must be >= 0");

    ModalResult result;
    const double R = geom.mean_radius_m();
    if (geom.radial_thickness_m >= R / 5.0)
        result.warnings.push_back("thin-ring validity: radial thickness exceeds R/5, "
                                  "closed-form frequencies degrade");

    const double base = std::sqrt(mat.young_modulus_pa * geom.second_moment_m4() /
                                  (mat.density_kg_m3 * geom.area_m2() * R * R * R * R));

    for (int n = 2; n <= max_mode; ++n) {
        ModeShape mode;
        mode.mode_index = n;
        const double nn = static_cast<double>(n);
        mode.frequency_hz = nn * (nn * nn - 1.0) / std::sqrt(nn * nn + 1.0) * base / (2.0 * kPi);
        // radial displacement ~ cos(n*theta): 2n nodes, 2n antinodes
        for (int k = 0; k < 2 * n; ++k) {
            mode.antinode_positions.push_back(k * kPi / nn);
            mode.node_positions.push_back((2 * k + 1) * kPi / (2.0 * nn));
        }
        result.modes.push_back(std::move(mode));
    }
    return result;
}

double drive_response(const ResonatorModel& model, double voltage_v, double frequency_hz) {
    if (voltage_v < 0.0) throw std::invalid_argument("drive_response: voltage must be >= 0");
    if (!(frequency_hz > 0.0)) throw std::invalid_argument("drive_response: frequency must be > 0");
    const double f0 = model.resonance_frequency_hz;
    const double detune = frequency_hz / f0 - f0 / frequency_hz;
    const double q = model.quality_factor;
    return model.gain_m_per_v * voltage_v / std::sqrt(1.0 + q * q * detune * detune);
}

std::vector<std::pair<double, double>> frequency_sweep(const ResonatorModel& model,
                                                       double voltage_v, double f_start_hz,
                                                       double f_end_hz, int steps) {
    if (!(f_start_hz < f_end_hz))
        throw std::invalid_argument("frequency_sweep: f_start must be < f_end");
    if (steps < 2) throw std::invalid_argument("frequency_sweep: steps must be >= 2");
    std::vector<std::pair<double, double>> out;
    out.reserve(steps);
    for (int i = 0; i < steps; ++i) {
        const double f = f_start_hz + (f_end_hz - f_start_hz) * i / (steps - 1);
        out.emplace_back(f, drive_response(model, voltage_v, f));
    }
    return out;
}

} // namespace ulsim
