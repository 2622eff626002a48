#pragma once

#include "qlca/errors.hpp"
#include "qlca/matrix.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace qlca {

using FlowId = std::string;
using ProcessId = std::string;

enum class FlowKind { elementary, intermediate };
enum class Direction { input, output };

/// An elementary (biosphere) or intermediate (technosphere) flow.
/// Elementary flows carry a compartment (air, water, soil); intermediate
/// flows do not.
struct Flow {
    FlowId id;
    std::string name;
    FlowKind kind = FlowKind::intermediate;
    std::string unit;  // kg, kWh, tkm, unit, L, ...
    std::optional<std::string> compartment;
};

struct Exchange {
    FlowId flow;
    double amount = 0.0;  // in the flow's unit, per unit of reference product
    Direction direction = Direction::input;
};

/// A technosphere activity. Normalization convention: exactly one output
/// exchange of the reference product, amount 1.0.
struct Process {
    ProcessId id;
    std::string name;
    std::string location;  // GLO, CA-QC, ...
    FlowId reference_product;
    std::vector<Exchange> exchanges;
};

/// Sparse final-demand vector over intermediate flows.
struct DemandVector {
    std::string label;
    std::map<FlowId, double> entries;

    DemandVector& add(const FlowId& flow, double amount) {
        entries[flow] += amount;
        return *this;
    }
    void merge(const DemandVector& other) {
        for (const auto& [flow, amount] : other.entries) entries[flow] += amount;
    }
    DemandVector scaled(double factor) const {
        DemandVector out;
        out.label = label;
        for (const auto& [flow, amount] : entries) out.entries[flow] = amount * factor;
        return out;
    }
};

/// Inventory over elementary flows, in each flow's own unit.
using ElementaryInventory = std::map<FlowId, double>;

/// The assembled square technosphere system A (inputs negative off-diagonal,
/// reference output +1 on the diagonal) and biosphere matrix B, with the
/// index maps tying rows/columns back to the dataset. Immutable once built.
class InventorySystem {
public:
    /// Assembles and validates A and B from a dataset. `externally_referenced`
    /// lists flow ids referenced outside the process table (scenario configs,
    /// characterization factors); any flow referenced nowhere is rejected.
    static InventorySystem build(const std::vector<Flow>& flows,
                                 const std::vector<Process>& processes,
                                 const std::set<FlowId>& externally_referenced = {});

    /// Solves A s = f. Relative residual above 1e-9 or condition number above
    /// 1e12 is an error.
    std::vector<double> solve_scaling(const DemandVector& demand) const;

    /// g = B s (indexed by elementary flow id).
    ElementaryInventory inventory(const std::vector<double>& scaling) const;

    std::size_t size() const { return products_.size(); }
    const std::vector<FlowId>& products() const { return products_; }
    const std::vector<ProcessId>& process_order() const { return process_order_; }
    const std::vector<FlowId>& elementary_flows() const { return elementary_; }
    const Matrix& technosphere() const { return a_; }
    const Matrix& biosphere() const { return b_; }
    double condition() const { return condition_; }

    std::size_t product_index(const FlowId& flow) const;

    static constexpr double kResidualTolerance = 1e-9;
    static constexpr double kConditionLimit = 1e12;

private:
    InventorySystem() = default;

    std::vector<FlowId> products_;        // row/column i <-> product
    std::vector<ProcessId> process_order_;  // column i -> producing process
    std::vector<FlowId> elementary_;      // row j of B
    std::map<FlowId, std::size_t> product_index_;
    std::map<FlowId, std::size_t> elementary_index_;
    Matrix a_;
    Matrix b_;
    std::optional<LuSolver> lu_;
    double condition_ = 0.0;
};

/// Demand contributed by assembling `mass_kg` of equipment, each coefficient
/// given per kg of assembled mass.
struct MassCoefficient {
    FlowId flow;  // intermediate product
    double amount_per_kg = 0.0;
};
DemandVector assembly_burden(double mass_kg, const std::vector<MassCoefficient>& coefficients);

/// Tonne-kilometres: mass_kg / 1000 * distance_km.
double transport_tkm(double mass_kg, double distance_km);

/// Cut-off end of life: the non-recyclable share goes to the waste-treatment
/// product, the recyclable share is burden-free.
DemandVector eol_split(double mass_kg, double recyclable_fraction, const FlowId& waste_product);

}  // namespace qlca
