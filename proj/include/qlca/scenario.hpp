#pragma once

#include "qlca/dataset.hpp"
#include "qlca/impact.hpp"
#include "qlca/system_model.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qlca {

/// A system model under a usage scenario.
struct Scenario {
    std::string id;
    SystemModel system;
    double lifetime_hours = 26280.0;  // 3 years
    int replacement_multiplier = 1;   // 1 = no replacement
};

/// Builds the SystemModel for a scenario id defined in the dataset bundle.
Scenario make_scenario(const Dataset& dataset, const std::string& id);

/// A scenario reduced to its affine structure: fixed-phase impacts and the
/// per-hour use rate, each characterized once and reused for every
/// evaluation, sweep, and crossover.
struct CompiledScenario {
    std::string id;
    double lifetime_hours = 26280.0;
    int replacement_multiplier = 1;

    ImpactVector production{};
    ImpactVector delivery{};
    ImpactVector end_of_life{};
    ImpactVector use_rate{};  // impact per hour of use

    struct PartImpact {
        std::string label;
        std::string group;
        ImpactVector impacts{};
    };
    std::vector<PartImpact> production_parts;

    double coverage = 1.0;
    std::vector<FlowId> uncharacterized;
    std::map<std::string, double> metrics;

    ImpactVector fixed_total() const { return production + delivery + end_of_life; }
};

CompiledScenario compile_scenario(const Dataset& dataset, const Scenario& scenario);

/// Number of fixed-phase blocks charged at `hours`:
/// 1 + (multiplier - 1) * boundaries crossed, where a boundary is crossed
/// strictly after each lifetime multiple.
int fixed_phase_blocks(double hours, double lifetime_hours, int replacement_multiplier);

struct EvalResult {
    double hours = 0.0;
    std::vector<PhaseImpact> phases;  // production, delivery, use, end_of_life
    ImpactVector totals{};
    int fixed_blocks = 1;
};

/// Fixed phases once (times the replacement factor), use scaled linearly.
EvalResult evaluate(const CompiledScenario& scenario, double hours);

struct SweepSeries {
    std::string scenario;
    std::vector<double> hours;
    std::vector<EvalResult> points;
};

/// One compiled evaluation per grid point; the grid must be sorted and
/// nonnegative.
SweepSeries sweep(const CompiledScenario& scenario, const std::vector<double>& hour_grid);

/// Hours at which use-phase impact first exceeds production-phase impact,
/// or nullopt when the use rate is zero for the indicator.
std::optional<double> phase_dominance_hour(const CompiledScenario& scenario, Indicator indicator);

struct CrossoverEntry {
    enum class Status { found, none, always_equal };
    std::string scenario_x;
    std::string scenario_y;
    Indicator indicator = Indicator::climate_change;
    Status status = Status::none;
    std::optional<double> hours;
};

/// Analytic intersection of the two affine totals on [0, hours cap].
CrossoverEntry crossover(const CompiledScenario& x, const CompiledScenario& y,
                         Indicator indicator);

/// Root search / reporting domain cap.
constexpr double kCrossoverHoursCap = 1e6;

/// Hours at which the use phase overtakes each fixed phase, per indicator.
struct PhaseFlip {
    Phase fixed_phase = Phase::production;
    Indicator indicator = Indicator::climate_change;
    std::optional<double> hours;
};
std::vector<PhaseFlip> phase_flips(const CompiledScenario& scenario);

struct SensitivityReport {
    std::vector<std::string> ids;
    std::map<std::string, CompiledScenario> compiled;
    std::vector<double> hour_grid;
    std::vector<SweepSeries> sweeps;
    std::vector<CrossoverEntry> crossovers;  // all ordered pairs, each indicator
    /// Fixed-phase (production + delivery + end-of-life) ratios between
    /// scenario pairs, keyed "X/Y".
    std::map<std::string, ImpactVector> fixed_ratios;
    std::map<std::string, double> metrics;  // e.g. qec setup ratios
};

/// Default usage-hour grid for sweeps and sensitivity tables.
std::vector<double> default_hour_grid();

/// Evaluates a set of scenarios (default A, A', B, B'), their sweeps over the
/// default grid, and all pairwise crossovers.
SensitivityReport run_sensitivity(const Dataset& dataset,
                                  const std::vector<std::string>& scenario_ids = {});

}  // namespace qlca
