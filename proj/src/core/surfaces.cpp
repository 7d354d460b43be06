#include "core/surfaces.hpp"

#include <cmath>
#include <numbers>

#include "core/errors.hpp"

namespace ulsim {

const char* to_string(SurfaceKind k) {
    switch (k) {
        case SurfaceKind::dry_rigid: return "dry_rigid";
        case SurfaceKind::wet: return "wet";
        case SurfaceKind::granular: return "granular";
        case SurfaceKind::viscoelastic: return "viscoelastic";
    }
    return "?";
}

const char* to_string(FilmKind k) {
    return k == FilmKind::compressible_gas ? "compressible_gas" : "incompressible_liquid";
}

std::optional<SurfaceKind> surface_kind_from_string(const std::string& s) {
    if (s == "dry_rigid") return SurfaceKind::dry_rigid;
    if (s == "wet") return SurfaceKind::wet;
    if (s == "granular") return SurfaceKind::granular;
    if (s == "viscoelastic") return SurfaceKind::viscoelastic;
    return std::nullopt;
}

std::optional<FilmKind> film_kind_from_string(const std::string& s) {
    if (s == "compressible_gas") return FilmKind::compressible_gas;
    if (s == "incompressible_liquid") return FilmKind::incompressible_liquid;
    return std::nullopt;
}

void SurfaceSpec::validate() const {
    std::vector<std::string> issues;
    const std::string where = name.empty() ? std::string("surface") : "surface '" + name + "'";
    if (!(mu_kinetic > 0.0)) issues.push_back(where + ".mu_kinetic: must be > 0");
    if (!(mu_kinetic <= mu_static)) issues.push_back(where + ".mu_kinetic: must be <= mu_static");
    if (adhesion_load_n < 0.0) issues.push_back(where + ".adhesion_load_n: must be >= 0");
    if (film_efficacy < 0.0 || film_efficacy > 1.0)
        issues.push_back(where + ".film_efficacy: must be in [0,1]");
    if (amplitude_attenuation < 0.0 || amplitude_attenuation > 1.0)
        issues.push_back(where + ".amplitude_attenuation: must be in [0,1]");
    if (roughness_noise_std < 0.0) issues.push_back(where + ".roughness_noise_std: must be >= 0");
    if (roughness_noise_std > 0.0 && !(roughness_correlation_length_m > 0.0))
        issues.push_back(where + ".roughness_correlation_length_m: must be > 0 when noise is on");
    if (nominal_gap_m && !(*nominal_gap_m > 0.0))
        issues.push_back(where + ".nominal_gap_m: must be > 0");
    if (liquid_density_kg_m3 && !(*liquid_density_kg_m3 > 0.0))
        issues.push_back(where + ".liquid_density_kg_m3: must be > 0");
    if (!issues.empty()) throw ValidationError(std::move(issues));
}

Surface::Surface(SurfaceSpec spec) : spec_(std::move(spec)) { spec_.validate(); }

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

double normal_from_key(std::uint64_t key) {
    const std::uint64_t a = splitmix64(key);
    const std::uint64_t b = splitmix64(a ^ 0xD1B54A32D192ED03ULL);
    // (0,1) open on both ends so log() stays finite
    const double u1 = (static_cast<double>(a >> 11) + 0.5) * 0x1.0p-53;
    const double u2 = (static_cast<double>(b >> 11) + 0.5) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double Surface::noise_factor(double position_m) const {
    if (spec_.roughness_noise_std <= 0.0) return 1.0;
    const double seg = std::floor(position_m / spec_.roughness_correlation_length_m);
    const auto segment_index = static_cast<std::int64_t>(seg);
    const std::uint64_t key = spec_.rng_seed ^ (static_cast<std::uint64_t>(segment_index) *
                                                0x9E3779B97F4A7C15ULL);
    const double z = normal_from_key(key);
    const double factor = 1.0 + spec_.roughness_noise_std * z;
    // mu must stay positive; clipping at 1e-3 is a > 6-sigma event at the
    // default noise level and does not bias the mean measurably
    return factor < 1e-3 ? 1e-3 : factor;
}

double Surface::sample_mu(double position_m, FrictionRegime regime) const {
    const double base =
        regime == FrictionRegime::static_contact ? spec_.mu_static : spec_.mu_kinetic;
    if (spec_.kind != SurfaceKind::granular) return base;
    return base * noise_factor(position_m);
}

double Surface::effective_normal_load(double applied_load_n) const {
    if (spec_.kind == SurfaceKind::wet || spec_.kind == SurfaceKind::viscoelastic)
        return applied_load_n + spec_.adhesion_load_n;
    return applied_load_n;
}

double Surface::delivered_amplitude(double commanded_amplitude_m) const {
    return (1.0 - spec_.amplitude_attenuation) * commanded_amplitude_m;
}

} // namespace ulsim
