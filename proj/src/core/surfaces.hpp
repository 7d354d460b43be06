#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace ulsim {

enum class SurfaceKind { dry_rigid, wet, granular, viscoelastic };
enum class FilmKind { compressible_gas, incompressible_liquid };
enum class FrictionRegime { static_contact, kinetic };

const char* to_string(SurfaceKind k);
const char* to_string(FilmKind k);
std::optional<SurfaceKind> surface_kind_from_string(const std::string& s);
std::optional<FilmKind> film_kind_from_string(const std::string& s);

/// Substrate description: baseline Coulomb friction plus the knobs that
/// control how well a squeeze film forms against it.
///
///  - adhesion_load_n   extra normal load from capillary/viscous adhesion,
///                      applied only for wet and viscoelastic kinds
///  - film_efficacy     fraction of ideal flat-plate film lift realized at
///                      the real contact, in [0,1]
///  - amplitude_attenuation  fraction of commanded vibration amplitude lost
///                      into the substrate (viscoelastic damping), in [0,1]
///  - roughness_noise_std    multiplicative friction noise for granular
///                      contacts, resampled per correlation-length segment
struct SurfaceSpec {
    std::string name;
    SurfaceKind kind = SurfaceKind::dry_rigid;
    double mu_static = 0.6;
    double mu_kinetic = 0.45;
    double adhesion_load_n = 0.0;
    double film_efficacy = 1.0;
    double amplitude_attenuation = 0.0;
    double roughness_noise_std = 0.0;
    double roughness_correlation_length_m = 1e-3;
    FilmKind film_kind = FilmKind::compressible_gas;
    std::uint64_t rng_seed = 0;
    // Per-surface overrides of the scenario film section.
    std::optional<double> nominal_gap_m;
    std::optional<double> liquid_density_kg_m3;

    /// Throws ValidationError listing every violated invariant.
    void validate() const;
};

/// A surface bound to its deterministic roughness state. Sampling is a pure
/// function of (spec, seed, position): identical seeds give identical traces.
class Surface {
public:
    Surface() = default;
    explicit Surface(SurfaceSpec spec);

    /// Baseline friction coefficient at a sliding position. Granular kinds
    /// apply piecewise-constant multiplicative noise per roughness segment;
    /// rigid kinds return the spec value exactly.
    double sample_mu(double position_m, FrictionRegime regime) const;

    /// Normal load seen by the friction law: applied load plus adhesion for
    /// wet/viscoelastic kinds.
    double effective_normal_load(double applied_load_n) const;

    /// Vibration amplitude surviving substrate damping.
    double delivered_amplitude(double commanded_amplitude_m) const;

    const SurfaceSpec& spec() const { return spec_; }

private:
    double noise_factor(double position_m) const;

    SurfaceSpec spec_;
};

/// splitmix64; used wherever a deterministic stream must be derived from a
/// seed plus an index.
std::uint64_t splitmix64(std::uint64_t x);

/// Standard normal deviate computed from a single 64-bit key (Box-Muller on
/// two splitmix64 outputs). Fully deterministic, no engine state.
double normal_from_key(std::uint64_t key);

} // namespace ulsim
