#include "qlca/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <set>

namespace qlca {

namespace {

ElementaryInventory phase_inventory(const InventorySystem& system, const PhaseDemand& pd) {
    ElementaryInventory g;
    if (!pd.demand.entries.empty()) {
        const std::vector<double> s = system.solve_scaling(pd.demand);
        g = system.inventory(s);
    }
    for (const auto& [flow, amount] : pd.direct) g[flow] += amount;
    return g;
}

}  // namespace

Scenario make_scenario(const Dataset& dataset, const std::string& id) {
    const ScenarioConfig& cfg = dataset.scenario(id);
    Scenario s;
    s.id = id;
    s.lifetime_hours = cfg.lifetime_hours;
    s.replacement_multiplier = cfg.replacement_multiplier;
    if (cfg.kind == ScenarioConfig::Kind::quantum) {
        s.system = build_quantum_system(*cfg.quantum, dataset);
    } else {
        s.system = build_hpc_system(*cfg.hpc, dataset);
    }
    return s;
}

CompiledScenario compile_scenario(const Dataset& dataset, const Scenario& scenario) {
    const InventorySystem& system = dataset.system();
    const ImpactMethod& method = dataset.method();

    CompiledScenario out;
    out.id = scenario.id;
    out.lifetime_hours = scenario.lifetime_hours;
    out.replacement_multiplier = scenario.replacement_multiplier;
    out.metrics = scenario.system.metrics;

    const ElementaryInventory g_production =
        phase_inventory(system, scenario.system.production);
    const ElementaryInventory g_delivery = phase_inventory(system, scenario.system.delivery);
    const ElementaryInventory g_eol = phase_inventory(system, scenario.system.end_of_life);
    const ElementaryInventory g_use = phase_inventory(system, scenario.system.use_per_hour);

    out.production = characterize(g_production, method).impacts;
    out.delivery = characterize(g_delivery, method).impacts;
    out.end_of_life = characterize(g_eol, method).impacts;
    out.use_rate = characterize(g_use, method).impacts;

    for (const Contribution& part : scenario.system.production_parts) {
        const Characterization c = characterize(phase_inventory(system, part.demand), method);
        out.production_parts.push_back({part.label, part.group, c.impacts});
    }

    // Coverage diagnostic over the whole model (fixed phases plus one hour
    // of use).
    ElementaryInventory merged = g_production;
    for (const ElementaryInventory* g : {&g_delivery, &g_eol, &g_use})
        for (const auto& [flow, amount] : *g) merged[flow] += amount;
    const Characterization all = characterize(merged, method);
    out.coverage = all.coverage;
    out.uncharacterized = all.uncharacterized;
    return out;
}

int fixed_phase_blocks(double hours, double lifetime_hours, int replacement_multiplier) {
    if (hours < 0.0 || !std::isfinite(hours))
        throw ValidationError("hours must be finite and >= 0");
    if (lifetime_hours <= 0.0) throw ValidationError("lifetime must be > 0");
    if (replacement_multiplier < 1) throw ValidationError("replacement multiplier must be >= 1");
    if (replacement_multiplier == 1 || hours <= lifetime_hours) return 1;
    const int boundaries =
        std::max(0, static_cast<int>(std::ceil(hours / lifetime_hours)) - 1);
    return 1 + (replacement_multiplier - 1) * boundaries;
}

EvalResult evaluate(const CompiledScenario& scenario, double hours) {
    if (hours < 0.0 || !std::isfinite(hours))
        throw ValidationError("evaluate: hours must be finite and >= 0");
    EvalResult out;
    out.hours = hours;
    out.fixed_blocks =
        fixed_phase_blocks(hours, scenario.lifetime_hours, scenario.replacement_multiplier);
    const double blocks = static_cast<double>(out.fixed_blocks);
    out.phases = {
        {Phase::production, scenario.production * blocks},
        {Phase::delivery, scenario.delivery * blocks},
        {Phase::use, scenario.use_rate * hours},
        {Phase::end_of_life, scenario.end_of_life * blocks},
    };
    for (const PhaseImpact& p : out.phases) out.totals = out.totals + p.impacts;
    return out;
}

SweepSeries sweep(const CompiledScenario& scenario, const std::vector<double>& hour_grid) {
    if (!std::is_sorted(hour_grid.begin(), hour_grid.end()))
        throw ValidationError("sweep: hour grid must be sorted");
    if (!hour_grid.empty() && hour_grid.front() < 0.0)
        throw ValidationError("sweep: hours must be >= 0");
    SweepSeries series;
    series.scenario = scenario.id;
    series.hours = hour_grid;
    series.points.reserve(hour_grid.size());
    for (double h : hour_grid) series.points.push_back(evaluate(scenario, h));
    return series;
}

std::optional<double> phase_dominance_hour(const CompiledScenario& scenario,
                                           Indicator indicator) {
    const std::size_t i = static_cast<std::size_t>(indicator);
    const double rate = scenario.use_rate[i];
    if (rate <= 0.0) return std::nullopt;  // use never dominates
    return scenario.production[i] / rate;
}

CrossoverEntry crossover(const CompiledScenario& x, const CompiledScenario& y,
                         Indicator indicator) {
    const std::size_t i = static_cast<std::size_t>(indicator);
    CrossoverEntry entry;
    entry.scenario_x = x.id;
    entry.scenario_y = y.id;
    entry.indicator = indicator;

    const double fx = x.fixed_total()[i];
    const double fy = y.fixed_total()[i];
    const double rx = x.use_rate[i];
    const double ry = y.use_rate[i];

    if (rx == ry) {
        const double scale = std::max({std::fabs(fx), std::fabs(fy), 1.0});
        entry.status = std::fabs(fx - fy) <= 1e-12 * scale ? CrossoverEntry::Status::always_equal
                                                           : CrossoverEntry::Status::none;
        return entry;
    }
    const double h = (fy - fx) / (rx - ry);
    if (h >= 0.0 && h <= kCrossoverHoursCap) {
        entry.status = CrossoverEntry::Status::found;
        entry.hours = h;
    }
    return entry;
}

std::vector<PhaseFlip> phase_flips(const CompiledScenario& scenario) {
    std::vector<PhaseFlip> out;
    const std::array<std::pair<Phase, const ImpactVector*>, 3> fixed{{
        {Phase::production, &scenario.production},
        {Phase::delivery, &scenario.delivery},
        {Phase::end_of_life, &scenario.end_of_life},
    }};
    for (const auto& [phase, impacts] : fixed) {
        for (Indicator ind : kIndicators) {
            const std::size_t i = static_cast<std::size_t>(ind);
            PhaseFlip flip;
            flip.fixed_phase = phase;
            flip.indicator = ind;
            if (scenario.use_rate[i] > 0.0) flip.hours = (*impacts)[i] / scenario.use_rate[i];
            out.push_back(flip);
        }
    }
    return out;
}

std::vector<double> default_hour_grid() { return {1000.0, 10000.0, 50000.0, 100000.0}; }

SensitivityReport run_sensitivity(const Dataset& dataset,
                                  const std::vector<std::string>& scenario_ids) {
    SensitivityReport report;
    report.ids = scenario_ids.empty() ? std::vector<std::string>{"A", "A'", "B", "B'"}
                                      : scenario_ids;
    report.hour_grid = default_hour_grid();

    // Scenario evaluations are independent pure computations over the
    // immutable dataset; compile them in parallel.
    std::vector<std::future<CompiledScenario>> futures;
    futures.reserve(report.ids.size());
    for (const std::string& id : report.ids) {
        futures.push_back(std::async(std::launch::async, [&dataset, id] {
            return compile_scenario(dataset, make_scenario(dataset, id));
        }));
    }
    for (std::size_t i = 0; i < report.ids.size(); ++i) {
        try {
            report.compiled.emplace(report.ids[i], futures[i].get());
        } catch (const std::exception& e) {
            throw ValidationError("sensitivity: scenario '" + report.ids[i] + "' failed: " +
                                  e.what());
        }
    }

    for (const std::string& id : report.ids)
        report.sweeps.push_back(sweep(report.compiled.at(id), report.hour_grid));

    for (const std::string& xid : report.ids) {
        for (const std::string& yid : report.ids) {
            if (xid == yid) continue;
            const CompiledScenario& x = report.compiled.at(xid);
            const CompiledScenario& y = report.compiled.at(yid);
            for (Indicator ind : kIndicators) report.crossovers.push_back(crossover(x, y, ind));
            ImpactVector ratio{};
            for (std::size_t i = 0; i < 3; ++i) {
                const double denom = y.fixed_total()[i];
                ratio[i] = denom != 0.0 ? x.fixed_total()[i] / denom : 0.0;
            }
            report.fixed_ratios[xid + "/" + yid] = ratio;
            const auto sx = x.metrics.find("qec_setups");
            const auto sy = y.metrics.find("qec_setups");
            if (sx != x.metrics.end() && sy != y.metrics.end() && sy->second != 0.0)
                report.metrics["qec_setups_ratio_" + xid + "/" + yid] =
                    sx->second / sy->second;
        }
    }
    return report;
}

}  // namespace qlca
