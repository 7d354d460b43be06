#pragma once

#include "core/surfaces.hpp"

namespace ulsim {

/// Interfacial fluid film between a vibrating module face and the substrate.
/// nominal_gap_m is the mean asperity-supported separation h0; contact_area_m2
/// is the apparent face area over which the film acts.
struct FilmParams {
    double ambient_pressure_pa = 101325.0;
    double nominal_gap_m = 5e-6;
    double contact_area_m2 = 3.2e-4;
    double fluid_density_kg_m3 = 1.2;
    double fluid_viscosity_pa_s = 1.81e-5;
    FilmKind kind = FilmKind::compressible_gas;

    void validate() const;
};

struct FrictionMeasurement {
    double mu_off = 0.0;
    double mu_on = 0.0;
};

/// Excursion ratio (amplitude / gap) above which the gas-film pressure model
/// is cut off; the 1/sqrt(1-eps^2) mean diverges at eps -> 1 and amplitudes
/// beyond the gap are contact bouncing, outside this model.
inline constexpr double kExcursionClamp = 0.95;

/// Cycle-averaged excess pressure of an isothermally compressed gas film at
/// excursion ratio eps = a/h0:  p_a * (1/sqrt(1 - eps^2) - 1).
/// eps is clamped to kExcursionClamp; negative eps is an input error.
double air_film_mean_overpressure(double excursion_ratio, double ambient_pressure_pa);

/// Gas-film lift over the contact area at a given vibration amplitude.
double air_film_lift(double amplitude_m, const FilmParams& params);

/// Inertial liquid-film lift  L = C_L * rho_f * w^2 * a^2 * A.
double liquid_film_lift(double amplitude_m, double angular_frequency_radps,
                        const FilmParams& params, double inertia_coefficient);

/// Dispatch on params.kind.
double film_lift(double amplitude_m, double angular_frequency_radps,
                 const FilmParams& params, double inertia_coefficient);

/// Squeeze number sigma = 12 * mu * w * l^2 / (p_a * h0^2); the compressible
/// closed form is trustworthy for sigma >> 10.
double squeeze_number(const FilmParams& params, double angular_frequency_radps,
                      double characteristic_length_m);

/// Fractional friction drop (mu_off - mu_on) / mu_off. mu_off must be > 0.
double friction_reduction(const FrictionMeasurement& m);

/// Everything needed to turn a commanded amplitude into a friction
/// coefficient against a given surface.
struct LubricationModel {
    FilmParams film;
    double angular_frequency_radps = 0.0;
    double liquid_inertia_coeff = 1.0;

    /// Film parameters with any per-surface overrides applied.
    FilmParams film_for(const Surface& s) const;
};

/// Load-sharing friction law: the film carries eta * L of the normal load and
/// the asperity-borne remainder keeps the baseline coefficient, so
///   mu_eff = mu0 * max(0, 1 - eta * L / W_eff).
/// Clamps to 0 at full levitation. normal_load_n must be > 0.
double effective_mu(const Surface& surface, const LubricationModel& model,
                    double commanded_amplitude_m, double normal_load_n,
                    FrictionRegime regime, double position_m = 0.0);

} // namespace ulsim
