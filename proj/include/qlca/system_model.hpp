#pragma once

#include "qlca/lci.hpp"

#include <map>
#include <string>
#include <vector>

namespace qlca {

/// Demand placed on the technosphere plus foreground elementary exchanges
/// (emissions booked directly against the phase, e.g. nitrogen lost to air).
struct PhaseDemand {
    DemandVector demand;
    ElementaryInventory direct;

    void merge(const PhaseDemand& other) {
        demand.merge(other.demand);
        for (const auto& [flow, amount] : other.direct) direct[flow] += amount;
    }
    PhaseDemand scaled(double factor) const {
        PhaseDemand out;
        out.demand = demand.scaled(factor);
        for (const auto& [flow, amount] : direct) out.direct[flow] = amount * factor;
        return out;
    }
};

/// One slice of the production phase, for contribution reporting. The
/// demands of all contributions sum to the production demand (residual
/// slices may carry negative entries).
struct Contribution {
    std::string label;
    std::string group;
    PhaseDemand demand;
};

/// A built lifecycle model: fixed per-phase demands plus a per-hour
/// use-phase rate. Immutable by convention once returned from a builder.
struct SystemModel {
    std::string name;
    PhaseDemand production;
    PhaseDemand delivery;
    PhaseDemand end_of_life;
    PhaseDemand use_per_hour;
    std::vector<Contribution> production_parts;
    double total_mass_kg = 0.0;
    double power_kW = 0.0;
    std::map<std::string, double> metrics;  // informational figures (t.km, L/h, counts)
};

}  // namespace qlca
