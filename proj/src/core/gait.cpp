#include "core/gait.hpp"

#include <cmath>
#include <stdexcept>

#include "core/errors.hpp"

namespace ulsim {

double GaitSchedule::cycle_duration_s() const {
    double t = 0.0;
    for (const auto& p : phases) t += p.duration_s;
    return t;
}

double GaitSchedule::total_commanded_travel_m() const {
    if (phases.empty()) return 0.0;
    const std::size_t nc = phases.front().coupling_offset_targets_m.size();
    double travel = 0.0;
    std::vector<double> current(nc, 0.0);
    // offsets start at the last phase's targets (closed cycle)
    for (std::size_t c = 0; c < nc; ++c)
        current[c] = phases.back().coupling_offset_targets_m[c];
    for (int cyc = 0; cyc < cycles; ++cyc) {
        for (const auto& p : phases) {
            for (std::size_t c = 0; c < nc; ++c) {
                travel += std::abs(p.coupling_offset_targets_m[c] - current[c]);
                current[c] = p.coupling_offset_targets_m[c];
            }
        }
    }
    return travel;
}

void GaitSchedule::validate(std::size_t n_couplings, std::size_t n_contacts) const {
    std::vector<std::string> issues;
    if (phases.empty()) issues.push_back("gait: schedule has no phases");
    if (cycles < 1) issues.push_back("gait.cycles: must be >= 1");
    double min_duration = 1e300;
    for (std::size_t i = 0; i < phases.size(); ++i) {
        const auto& p = phases[i];
        const std::string where = "gait.phase[" + std::to_string(i) + "]";
        if (!(p.duration_s > 0.0)) issues.push_back(where + ".duration_s: must be > 0");
        min_duration = std::min(min_duration, p.duration_s);
        if (p.coupling_offset_targets_m.size() != n_couplings)
            issues.push_back(where + ".coupling_offset_targets_m: expected " +
                             std::to_string(n_couplings) + " entries");
        if (p.lubrication_active.size() != n_contacts)
            issues.push_back(where + ".lubrication_active: expected " +
                             std::to_string(n_contacts) + " entries");
    }
    if (!phases.empty() && switching_latency_s < 0.0)
        issues.push_back("gait.switching_latency_s: must be >= 0");
    if (!phases.empty() && switching_latency_s >= min_duration)
        issues.push_back("gait.switching_latency_s: must be shorter than every phase");
    if (!issues.empty()) throw ValidationError(std::move(issues));
}

namespace {

GaitSchedule two_phase(double stroke_m, double rate_mps, int cycles) {
    if (!(stroke_m > 0.0)) throw std::invalid_argument("gait: stroke must be > 0");
    if (!(rate_mps > 0.0)) throw std::invalid_argument("gait: rate must be > 0");
    if (cycles < 1) throw std::invalid_argument("gait: cycles must be >= 1");
    GaitSchedule s;
    s.cycles = cycles;
    s.stroke_per_cycle_m = stroke_m;
    const double dur = stroke_m / rate_mps;
    s.phases.resize(2);
    s.phases[0].duration_s = dur;
    s.phases[0].coupling_offset_targets_m = {stroke_m};
    s.phases[1].duration_s = dur;
    s.phases[1].coupling_offset_targets_m = {0.0}; // closed cycle
    return s;
}

} // namespace

GaitSchedule inchworm_schedule(double stroke_m, double rate_mps, int cycles,
                               GaitDirection direction) {
    GaitSchedule s = two_phase(stroke_m, rate_mps, cycles);
    s.phases[0].label = "extend";
    s.phases[1].label = "contract";
    if (direction == GaitDirection::forward) {
        s.phases[0].lubrication_active = {false, true}; // front slides forward
        s.phases[1].lubrication_active = {true, false}; // rear catches up
    } else {
        s.phases[0].lubrication_active = {true, false}; // rear slides backward
        s.phases[1].lubrication_active = {false, true}; // front pulled back
    }
    return s;
}

GaitSchedule ovipositor_schedule(double stroke_m, double rate_mps, int cycles,
                                 GaitDirection direction) {
    GaitSchedule s = two_phase(stroke_m, rate_mps, cycles);
    s.phases[0].label = "advance";
    s.phases[1].label = "return";
    if (direction == GaitDirection::forward) {
        s.phases[0].lubrication_active = {false, false}; // grip: carry the rail forward
        s.phases[1].lubrication_active = {false, true};  // slip back past the held rail
    } else {
        s.phases[0].lubrication_active = {false, true};  // slip forward past the held rail
        s.phases[1].lubrication_active = {false, false}; // grip: drag the rail backward
    }
    return s;
}

GaitSchedule reverse_schedule(const GaitSchedule& s) {
    GaitSchedule r = s;
    const std::size_t n = s.phases.size();
    for (std::size_t i = 0; i < n; ++i)
        r.phases[i].lubrication_active = s.phases[n - 1 - i].lubrication_active;
    return r;
}

double locomotion_efficiency(double net_displacement_m, double stroke_per_cycle_m, int cycles) {
    if (!(stroke_per_cycle_m > 0.0) || cycles < 1)
        throw std::invalid_argument("locomotion_efficiency: stroke and cycles must be positive");
    return std::abs(net_displacement_m) / (stroke_per_cycle_m * cycles);
}

} // namespace ulsim
