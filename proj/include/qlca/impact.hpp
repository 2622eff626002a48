#pragma once

#include "qlca/lci.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qlca {

/// The three reported endpoint indicators.
enum class Indicator { climate_change = 0, ecosystems = 1, human_health = 2 };

inline constexpr std::array<Indicator, 3> kIndicators{
    Indicator::climate_change, Indicator::ecosystems, Indicator::human_health};

std::string_view indicator_id(Indicator i);    // climate_change / ecosystems / human_health
std::string_view indicator_unit(Indicator i);  // t CO2eq / PDF.m2.yr / DALY
std::optional<Indicator> parse_indicator(std::string_view id);

/// One value per indicator, indexed by the Indicator enum.
using ImpactVector = std::array<double, 3>;

inline ImpactVector operator+(ImpactVector a, const ImpactVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}
inline ImpactVector operator*(ImpactVector a, double s) {
    for (double& v : a) v *= s;
    return a;
}

/// Characterization factors in indicator units per flow unit. Flows without
/// an entry contribute zero and are surfaced as uncharacterized coverage.
struct ImpactMethod {
    std::string name;
    std::map<FlowId, ImpactVector> factors;

    double factor(const FlowId& flow, Indicator i) const {
        auto it = factors.find(flow);
        return it == factors.end() ? 0.0 : it->second[static_cast<std::size_t>(i)];
    }
    bool characterizes(const FlowId& flow) const;
};

struct Characterization {
    ImpactVector impacts{};
    /// Share of the inventory (by summed absolute amount) carried by flows
    /// that have at least one characterization factor. Diagnostic only: it
    /// mixes units across flows.
    double coverage = 1.0;
    std::vector<FlowId> uncharacterized;
};

/// impact[i] = sum over flows of factor(flow, i) * g[flow].
Characterization characterize(const ElementaryInventory& inventory, const ImpactMethod& method);

/// The four life cycle phases of the system boundary.
enum class Phase { production = 0, delivery = 1, use = 2, end_of_life = 3 };

inline constexpr std::array<Phase, 4> kPhases{Phase::production, Phase::delivery, Phase::use,
                                              Phase::end_of_life};

std::string_view phase_id(Phase p);
std::optional<Phase> parse_phase(std::string_view id);

struct PhaseImpact {
    Phase phase = Phase::production;
    ImpactVector impacts{};
};

/// Lifecycle totals plus per-phase shares. Shares are flagged undefined
/// (rather than NaN) for indicators whose total is zero.
struct PhaseAggregate {
    ImpactVector totals{};
    std::vector<PhaseImpact> shares;          // same phase order as the input
    std::array<bool, 3> shares_defined{};     // per indicator
};

/// Sums phase impacts per indicator. Throws on a duplicated phase.
PhaseAggregate aggregate_phases(const std::vector<PhaseImpact>& phases);

}  // namespace qlca
