#pragma once

#include <string>
#include <vector>

#include "core/gait.hpp"
#include "core/resonator.hpp"
#include "core/squeezefilm.hpp"
#include "core/surfaces.hpp"

namespace ulsim {

/// Index value meaning "the fixed world frame" wherever a body index is
/// accepted.
inline constexpr int kWorldFrame = -1;

struct Body {
    double mass_kg = 0.0;
    double position_m = 0.0;
    double velocity_mps = 0.0;
};

/// Friction interface pressing body_a against body_b (or the world) with a
/// constant normal load. The drive (resonator + voltage) sets the vibration
/// amplitude when the schedule activates lubrication at this contact.
struct Contact {
    int body_a = 0;
    int body_b = kWorldFrame;
    Surface surface;
    double normal_load_n = 0.0;
    double drive_voltage_v = 0.0;
    ResonatorModel resonator;
};

/// Spring-damper actuator element between body_i and body_j (or the world),
/// tracking a commanded offset: F = k*(rest + u - dx) + c*(u_dot - dx_dot),
/// applied +F to body_i and -F to body_j. rest_offset_m is the zero-force
/// separation, normally the initial x_i - x_j.
struct Coupling {
    int body_i = 0;
    int body_j = kWorldFrame;
    double stiffness_n_per_m = 1e5;
    double damping_ns_per_m = 0.0;
    double rest_offset_m = 0.0;
};

struct World {
    std::vector<Body> bodies;
    std::vector<Contact> contacts;
    std::vector<Coupling> couplings;
    /// Bodies whose mean displacement is the reported net displacement
    /// (module-pair centroid, or the free rail).
    std::vector<int> report_bodies;

    void validate() const;
};

struct SimConfig {
    double timestep_s = 1e-5;
    double stick_velocity_threshold_mps = 1e-5;
    double record_interval_s = 0.01;

    void validate() const;
};

/// Decimated time series plus exact end-state scalars and per-step energy /
/// friction diagnostics accumulated at full rate.
struct SimResult {
    // traces, one sample per record interval (plus t=0 and the final step)
    std::vector<double> time_s;
    std::vector<std::string> phase;
    std::vector<std::vector<double>> body_position_m;   // [body][sample]
    std::vector<std::vector<double>> body_velocity_mps; // [body][sample]
    std::vector<std::vector<double>> contact_friction_n;  // [contact][sample]
    std::vector<std::vector<double>> contact_mu_eff;      // kinetic, at current drive
    std::vector<std::vector<double>> contact_amplitude_m; // commanded by the drive
    std::vector<std::vector<double>> contact_voltage_v;

    // exact scalars
    double net_displacement_m = 0.0;
    double stroke_total_m = 0.0;     // sum |commanded offset changes|
    double stroke_per_cycle_m = 0.0; // actuator stroke, efficiency denominator
    int cycles = 1;
    double duration_s = 0.0;
    long long steps = 0;

    // energy bookkeeping over the whole run
    double actuator_work_j = 0.0;
    double friction_dissipation_j = 0.0; // the SimResult "dissipated energy"
    double damper_dissipation_j = 0.0;
    double spring_energy_delta_j = 0.0;
    double kinetic_energy_delta_j = 0.0;

    // per-step invariant monitors
    double min_step_friction_power_w = 0.0; // most negative -F*v_rel seen in slip
    double max_friction_utilization = 0.0;  // max |F| / (mu_s_eff * W_eff)

    double energy_residual_j() const {
        return actuator_work_j - (kinetic_energy_delta_j + spring_energy_delta_j +
                                  damper_dissipation_j + friction_dissipation_j);
    }
};

/// Effective strength of one contact under the current drive state.
struct ContactStrength {
    double static_limit_n = 0.0;  // mu_s_eff * W_eff
    double kinetic_force_n = 0.0; // mu_k_eff * W_eff
    double mu_kinetic_eff = 0.0;
    double amplitude_m = 0.0; // commanded amplitude from the drive
    double w_eff_n = 0.0;
};

/// Evaluate a contact's friction strength: drive voltage -> amplitude ->
/// effective coefficients via the film model, position-dependent for
/// granular surfaces.
ContactStrength evaluate_contact(const Contact& c, const LubricationModel& lube,
                                 bool lubrication_active, double voltage_scale,
                                 double position_m);

/// Karnopp-regularized Coulomb friction. Inside the stick window the contact
/// balances the applied tangential force exactly (up to the static limit);
/// otherwise it opposes sliding at the kinetic level. At rest the breakaway
/// direction follows the applied force. |result| <= static limit always.
double friction_force(const ContactStrength& s, double relative_velocity_mps,
                      double applied_tangential_n, const SimConfig& config);

/// Convenience overload evaluating the contact in place.
double friction_force(const Contact& c, const LubricationModel& lube, bool lubrication_active,
                      double position_m, double relative_velocity_mps,
                      double applied_tangential_n, const SimConfig& config);

/// Fixed-step stick-slip integrator. Bodies advance by semi-implicit Euler;
/// friction follows the Karnopp rule with sticking bodies snapped exactly to
/// their reference frame velocity each step.
class Engine {
public:
    Engine(World world, GaitSchedule schedule, LubricationModel lube, SimConfig config);

    /// Advance one timestep. Throws SimulationAbort if the state leaves the
    /// finite range.
    void step();

    /// Run the whole schedule and collect traces.
    SimResult run();

    double time_s() const { return static_cast<double>(step_count_) * config_.timestep_s; }
    const World& world() const { return world_; }

private:
    struct PhaseCursor {
        int cycle = 0;
        std::size_t phase = 0;
        double phase_start_s = 0.0;
    };

    void advance_cursor(double t);
    const GaitPhase& phase_at(std::size_t idx) const { return schedule_.phases[idx]; }
    void commanded_state(double t, std::vector<double>& offsets, std::vector<double>& rates,
                         const std::vector<bool>*& lubrication, double& voltage_scale,
                         const std::string*& label) const;
    void record_sample(const std::string& label,
                       const std::vector<double>& friction,
                       const std::vector<ContactStrength>& strengths,
                       double voltage_scale);

    World world_;
    GaitSchedule schedule_;
    LubricationModel lube_;
    SimConfig config_;
    PhaseCursor cursor_;
    std::vector<double> phase_start_offsets_; // [phase * n_couplings + c]
    long long step_count_ = 0;
    long long total_steps_ = 0;
    long long record_every_ = 1;

    // scratch, sized once
    std::vector<double> force_n_;
    std::vector<double> offsets_;
    std::vector<double> rates_;
    std::vector<double> friction_n_;
    std::vector<ContactStrength> strengths_;
    std::vector<int> stuck_;

    double initial_spring_energy_j_ = 0.0;
    double initial_kinetic_energy_j_ = 0.0;
    std::vector<double> initial_positions_;

    SimResult result_;
    friend SimResult simulate(const World&, const GaitSchedule&, const LubricationModel&,
                              const SimConfig&);
};

/// Build, run, and return the result in one call.
SimResult simulate(const World& world, const GaitSchedule& schedule,
                   const LubricationModel& lube, const SimConfig& config);

inline double locomotion_efficiency(const SimResult& r) {
    return locomotion_efficiency(r.net_displacement_m, r.stroke_per_cycle_m, r.cycles);
}

} // namespace ulsim
