#include "core/squeezefilm.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"

namespace ulsim {

void FilmParams::validate() const {
    std::vector<std::string> issues;
    if (!(ambient_pressure_pa > 0.0)) issues.push_back("film.ambient_pressure_pa: must be > 0");
    if (!(nominal_gap_m > 0.0)) issues.push_back("film.nominal_gap_m: must be > 0");
    if (!(contact_area_m2 > 0.0)) issues.push_back("film.contact_area_m2: must be > 0");
    if (!(fluid_density_kg_m3 > 0.0)) issues.push_back("film.fluid_density_kg_m3: must be > 0");
    if (!(fluid_viscosity_pa_s > 0.0)) issues.push_back("film.fluid_viscosity_pa_s: must be > 0");
    if (!issues.empty()) throw ValidationError(std::move(issues));
}

double air_film_mean_overpressure(double excursion_ratio, double ambient_pressure_pa) {
    if (excursion_ratio < 0.0)
        throw std::invalid_argument("air_film_mean_overpressure: excursion ratio must be >= 0");
    const double eps = std::min(excursion_ratio, kExcursionClamp);
    return ambient_pressure_pa * (1.0 / std::sqrt(1.0 - eps * eps) - 1.0);
}

double air_film_lift(double amplitude_m, const FilmParams& params) {
    if (amplitude_m < 0.0) throw std::invalid_argument("air_film_lift: amplitude must be >= 0");
    const double eps = amplitude_m / params.nominal_gap_m;
    return air_film_mean_overpressure(eps, params.ambient_pressure_pa) * params.contact_area_m2;
}

double liquid_film_lift(double amplitude_m, double angular_frequency_radps,
                        const FilmParams& params, double inertia_coefficient) {
    if (amplitude_m < 0.0 || angular_frequency_radps < 0.0 || inertia_coefficient < 0.0)
        throw std::invalid_argument("liquid_film_lift: inputs must be >= 0");
    const double w = angular_frequency_radps;
    return inertia_coefficient * params.fluid_density_kg_m3 * w * w * amplitude_m * amplitude_m *
           params.contact_area_m2;
}

double film_lift(double amplitude_m, double angular_frequency_radps, const FilmParams& params,
                 double inertia_coefficient) {
    return params.kind == FilmKind::compressible_gas
               ? air_film_lift(amplitude_m, params)
               : liquid_film_lift(amplitude_m, angular_frequency_radps, params,
                                  inertia_coefficient);
}

double squeeze_number(const FilmParams& params, double angular_frequency_radps,
                      double characteristic_length_m) {
    const double l = characteristic_length_m;
    const double h0 = params.nominal_gap_m;
    return 12.0 * params.fluid_viscosity_pa_s * angular_frequency_radps * l * l /
           (params.ambient_pressure_pa * h0 * h0);
}

double friction_reduction(const FrictionMeasurement& m) {
    if (!(m.mu_off > 0.0))
        throw std::invalid_argument("friction_reduction: mu_off must be > 0");
    return (m.mu_off - m.mu_on) / m.mu_off;
}

FilmParams LubricationModel::film_for(const Surface& s) const {
    FilmParams p = film;
    p.kind = s.spec().film_kind;
    if (s.spec().nominal_gap_m) p.nominal_gap_m = *s.spec().nominal_gap_m;
    if (s.spec().liquid_density_kg_m3 && p.kind == FilmKind::incompressible_liquid)
        p.fluid_density_kg_m3 = *s.spec().liquid_density_kg_m3;
    return p;
}

double effective_mu(const Surface& surface, const LubricationModel& model,
                    double commanded_amplitude_m, double normal_load_n, FrictionRegime regime,
                    double position_m) {
    if (!(normal_load_n > 0.0))
        throw std::invalid_argument("effective_mu: normal load must be > 0");
    const double mu0 = surface.sample_mu(position_m, regime);
    const double w_eff = surface.effective_normal_load(normal_load_n);
    const double a = surface.delivered_amplitude(commanded_amplitude_m);
    const double lift = film_lift(a, model.angular_frequency_radps, model.film_for(surface),
                                  model.liquid_inertia_coeff);
    const double borne = 1.0 - surface.spec().film_efficacy * lift / w_eff;
    return mu0 * std::max(0.0, borne);
}

} // namespace ulsim
