#include "qlca/impact.hpp"

#include <cmath>
#include <set>

namespace qlca {

std::string_view indicator_id(Indicator i) {
    switch (i) {
        case Indicator::climate_change: return "climate_change";
        case Indicator::ecosystems: return "ecosystems";
        case Indicator::human_health: return "human_health";
    }
    return "";
}

std::string_view indicator_unit(Indicator i) {
    switch (i) {
        case Indicator::climate_change: return "t CO2eq";
        case Indicator::ecosystems: return "PDF.m2.yr";
        case Indicator::human_health: return "DALY";
    }
    return "";
}

std::optional<Indicator> parse_indicator(std::string_view id) {
    for (Indicator i : kIndicators)
        if (indicator_id(i) == id) return i;
    return std::nullopt;
}

bool ImpactMethod::characterizes(const FlowId& flow) const {
    auto it = factors.find(flow);
    if (it == factors.end()) return false;
    for (double f : it->second)
        if (f != 0.0) return true;
    return false;
}

Characterization characterize(const ElementaryInventory& inventory, const ImpactMethod& method) {
    Characterization out;
    double total_abs = 0.0;
    double covered_abs = 0.0;
    for (const auto& [flow, amount] : inventory) {
        if (!std::isfinite(amount))
            throw ComputeError("non-finite inventory entry for flow '" + flow + "'");
        const double mag = std::fabs(amount);
        total_abs += mag;
        if (method.characterizes(flow)) {
            covered_abs += mag;
            for (Indicator i : kIndicators)
                out.impacts[static_cast<std::size_t>(i)] += method.factor(flow, i) * amount;
        } else if (mag > 0.0) {
            out.uncharacterized.push_back(flow);
        }
    }
    out.coverage = total_abs > 0.0 ? covered_abs / total_abs : 1.0;
    return out;
}

std::string_view phase_id(Phase p) {
    switch (p) {
        case Phase::production: return "production";
        case Phase::delivery: return "delivery";
        case Phase::use: return "use";
        case Phase::end_of_life: return "end_of_life";
    }
    return "";
}

std::optional<Phase> parse_phase(std::string_view id) {
    for (Phase p : kPhases)
        if (phase_id(p) == id) return p;
    return std::nullopt;
}

PhaseAggregate aggregate_phases(const std::vector<PhaseImpact>& phases) {
    std::set<Phase> seen;
    PhaseAggregate out;
    for (const PhaseImpact& p : phases) {
        if (!seen.insert(p.phase).second)
            throw ValidationError(std::string("duplicate phase '") +
                                  std::string(phase_id(p.phase)) + "' in aggregation");
        out.totals = out.totals + p.impacts;
    }
    for (std::size_t i = 0; i < 3; ++i) out.shares_defined[i] = out.totals[i] != 0.0;
    for (const PhaseImpact& p : phases) {
        PhaseImpact share;
        share.phase = p.phase;
        for (std::size_t i = 0; i < 3; ++i)
            share.impacts[i] = out.shares_defined[i] ? p.impacts[i] / out.totals[i] : 0.0;
        out.shares.push_back(share);
    }
    return out;
}

}  // namespace qlca
