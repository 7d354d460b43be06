#pragma once

#include <string>
#include <vector>

namespace ulsim {

enum class GaitDirection { forward, backward };

/// One phase of the actuation program. Offset targets are absolute commanded
/// offsets (per coupling) to be reached by linear ramp over the phase;
/// lubrication flags are per contact. voltage_scale_* linearly modulate the
/// contact drive voltage across the phase, for ramp-style experiments.
struct GaitPhase {
    double duration_s = 0.0;
    std::vector<double> coupling_offset_targets_m;
    std::vector<bool> lubrication_active;
    double voltage_scale_start = 1.0;
    double voltage_scale_end = 1.0;
    std::string label;
};

/// Closed cyclic program: the commanded offsets at the end of the phase list
/// must equal the offsets at its start, and the list repeats `cycles` times.
struct GaitSchedule {
    std::vector<GaitPhase> phases;
    int cycles = 1;
    double stroke_per_cycle_m = 0.0; // actuator stroke (ideal displacement per cycle)
    double switching_latency_s = 0.0;

    double cycle_duration_s() const;
    double total_duration_s() const { return cycle_duration_s() * cycles; }
    /// Sum of |commanded offset changes| over the whole run, all couplings.
    double total_commanded_travel_m() const;

    /// Throws ValidationError on non-positive durations, ragged per-phase
    /// vectors, open cycles, or latency exceeding a phase.
    void validate(std::size_t n_couplings, std::size_t n_contacts) const;
};

/// Two-anchor crawl between two modules joined by one extensor coupling.
/// Contact 0 is the rear module, contact 1 the front. Each phase lubricates
/// exactly the module that must slide: forward = [extend: front], [contract:
/// rear]; backward swaps the columns.
GaitSchedule inchworm_schedule(double stroke_m, double rate_mps, int cycles,
                               GaitDirection direction);

/// Reciprocating-slider program for the fixed + moving module pair riding a
/// free rail. Contact 0 is the fixed-module interface (never lubricated),
/// contact 1 the moving module. Forward = [advance: off (grip, carry rail)],
/// [return: on (slip past rail)]; backward swaps the pattern.
GaitSchedule ovipositor_schedule(double stroke_m, double rate_mps, int cycles,
                                 GaitDirection direction);

/// Direction reversal: the sequence of lubrication patterns is reversed while
/// commanded offsets stay untouched. Involutive.
GaitSchedule reverse_schedule(const GaitSchedule& s);

/// Net displacement over the ideal (frictionless) displacement,
/// stroke_per_cycle * cycles. Throws on non-positive stroke.
double locomotion_efficiency(double net_displacement_m, double stroke_per_cycle_m, int cycles);

} // namespace ulsim
