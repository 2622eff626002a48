#include "qlca/lci.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qlca {

namespace {

bool finite(double v) { return std::isfinite(v); }

}  // namespace

InventorySystem InventorySystem::build(const std::vector<Flow>& flows,
                                       const std::vector<Process>& processes,
                                       const std::set<FlowId>& externally_referenced) {
    if (processes.empty()) throw ValidationError("no processes");

    std::map<FlowId, const Flow*> flow_by_id;
    for (const Flow& f : flows) {
        if (f.id.empty()) throw ValidationError("flow with empty id");
        if (!flow_by_id.emplace(f.id, &f).second)
            throw ValidationError("duplicate flow id '" + f.id + "'");
        if (f.kind == FlowKind::elementary && !f.compartment)
            throw ValidationError("elementary flow '" + f.id + "' has no compartment");
        if (f.kind == FlowKind::intermediate && f.compartment)
            throw ValidationError("intermediate flow '" + f.id + "' carries a compartment");
    }

    // Single-producer convention: one process per intermediate product.
    std::map<FlowId, const Process*> producer;
    std::set<ProcessId> process_ids;
    for (const Process& p : processes) {
        if (!process_ids.insert(p.id).second)
            throw ValidationError("duplicate process id '" + p.id + "'");
        auto it = flow_by_id.find(p.reference_product);
        if (it == flow_by_id.end())
            throw ValidationError("process '" + p.id + "' references unknown product flow '" +
                                  p.reference_product + "'");
        if (it->second->kind != FlowKind::intermediate)
            throw ValidationError("process '" + p.id + "' has elementary reference product '" +
                                  p.reference_product + "'");
        auto [pit, inserted] = producer.emplace(p.reference_product, &p);
        if (!inserted)
            throw ValidationError("duplicate producer for product '" + p.reference_product +
                                  "': processes '" + pit->second->id + "' and '" + p.id + "'");
    }

    std::set<FlowId> referenced = externally_referenced;
    for (const Process& p : processes) {
        referenced.insert(p.reference_product);
        int reference_outputs = 0;
        for (const Exchange& e : p.exchanges) {
            auto it = flow_by_id.find(e.flow);
            if (it == flow_by_id.end())
                throw ValidationError("process '" + p.id + "' references unknown flow '" + e.flow +
                                      "'");
            if (!finite(e.amount))
                throw ValidationError("process '" + p.id + "' has non-finite amount for flow '" +
                                      e.flow + "'");
            referenced.insert(e.flow);
            const Flow& f = *it->second;
            if (f.kind == FlowKind::intermediate) {
                if (e.direction == Direction::output) {
                    if (e.flow != p.reference_product)
                        throw ValidationError("process '" + p.id +
                                              "' emits a non-reference product '" + e.flow +
                                              "' (multi-output processes are not supported)");
                    if (e.amount != 1.0)
                        throw ValidationError("process '" + p.id +
                                              "' reference output amount must be 1.0");
                    ++reference_outputs;
                } else if (e.flow == p.reference_product) {
                    throw ValidationError("process '" + p.id + "' consumes its own product");
                }
            }
        }
        if (reference_outputs != 1)
            throw ValidationError("process '" + p.id +
                                  "' must have exactly one reference output of '" +
                                  p.reference_product + "' with amount 1.0");
    }

    for (const Flow& f : flows) {
        if (f.kind == FlowKind::intermediate && !producer.count(f.id))
            throw ValidationError("intermediate flow '" + f.id + "' has no producing process");
        if (!referenced.count(f.id))
            throw ValidationError("flow '" + f.id + "' is referenced by no process");
    }

    InventorySystem sys;
    for (const auto& [product, _] : producer) sys.products_.push_back(product);  // sorted by map
    for (const Flow& f : flows)
        if (f.kind == FlowKind::elementary) sys.elementary_.push_back(f.id);
    std::sort(sys.elementary_.begin(), sys.elementary_.end());

    const std::size_t n = sys.products_.size();
    const std::size_t m = sys.elementary_.size();
    for (std::size_t i = 0; i < n; ++i) sys.product_index_[sys.products_[i]] = i;
    for (std::size_t j = 0; j < m; ++j) sys.elementary_index_[sys.elementary_[j]] = j;

    sys.a_ = Matrix(n, n);
    sys.b_ = Matrix(m, n);
    sys.process_order_.resize(n);
    for (std::size_t col = 0; col < n; ++col) {
        const Process& p = *producer.at(sys.products_[col]);
        sys.process_order_[col] = p.id;
        sys.a_(col, col) = 1.0;
        for (const Exchange& e : p.exchanges) {
            const Flow& f = *flow_by_id.at(e.flow);
            if (f.kind == FlowKind::intermediate) {
                if (e.direction == Direction::input)
                    sys.a_(sys.product_index_.at(e.flow), col) -= e.amount;
            } else {
                const double sign = e.direction == Direction::output ? 1.0 : -1.0;
                sys.b_(sys.elementary_index_.at(e.flow), col) += sign * e.amount;
            }
        }
    }

    sys.lu_.emplace(sys.a_);  // throws with the offending pivot index when singular
    sys.condition_ = sys.lu_->condition1();
    if (sys.condition_ > kConditionLimit) {
        std::ostringstream msg;
        msg << "technosphere matrix is ill-conditioned (condition estimate " << sys.condition_
            << " exceeds " << kConditionLimit << ")";
        throw ComputeError(msg.str());
    }
    return sys;
}

std::size_t InventorySystem::product_index(const FlowId& flow) const {
    auto it = product_index_.find(flow);
    if (it == product_index_.end())
        throw ComputeError("demand references flow '" + flow + "' not indexed in the system");
    return it->second;
}

std::vector<double> InventorySystem::solve_scaling(const DemandVector& demand) const {
    const std::size_t n = size();
    std::vector<double> f(n, 0.0);
    for (const auto& [flow, amount] : demand.entries) {
        if (!finite(amount))
            throw ComputeError("demand '" + demand.label + "' has non-finite amount for flow '" +
                               flow + "'");
        f[product_index(flow)] += amount;
    }

    std::vector<double> s = lu_->solve(f);

    // One step of iterative refinement, then enforce the residual contract.
    double fnorm = 0.0;
    for (double v : f) fnorm += std::fabs(v);
    const std::vector<double> as = a_.multiply(s);
    std::vector<double> r(n);
    double rnorm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        r[i] = f[i] - as[i];
        rnorm += std::fabs(r[i]);
    }
    if (fnorm > 0.0 && rnorm / fnorm > kResidualTolerance) {
        const std::vector<double> dx = lu_->solve(r);
        for (std::size_t i = 0; i < n; ++i) s[i] += dx[i];
        const std::vector<double> as2 = a_.multiply(s);
        rnorm = 0.0;
        for (std::size_t i = 0; i < n; ++i) rnorm += std::fabs(f[i] - as2[i]);
        if (rnorm / fnorm > kResidualTolerance) {
            std::ostringstream msg;
            msg << "scaling solve residual " << rnorm / fnorm << " exceeds "
                << kResidualTolerance;
            throw ComputeError(msg.str());
        }
    }
    return s;
}

ElementaryInventory InventorySystem::inventory(const std::vector<double>& scaling) const {
    if (scaling.size() != size()) throw ComputeError("scaling vector does not match the system");
    const std::vector<double> g = b_.multiply(scaling);
    ElementaryInventory out;
    for (std::size_t j = 0; j < elementary_.size(); ++j) out[elementary_[j]] = g[j];
    return out;
}

DemandVector assembly_burden(double mass_kg, const std::vector<MassCoefficient>& coefficients) {
    if (mass_kg < 0.0 || !std::isfinite(mass_kg))
        throw ValidationError("assembly_burden: negative mass");
    DemandVector out;
    out.label = "assembly";
    if (mass_kg == 0.0) return out;
    for (const MassCoefficient& c : coefficients) {
        if (!std::isfinite(c.amount_per_kg))
            throw ValidationError("assembly_burden: non-finite coefficient for '" + c.flow + "'");
        out.add(c.flow, c.amount_per_kg * mass_kg);
    }
    return out;
}

double transport_tkm(double mass_kg, double distance_km) {
    if (mass_kg < 0.0 || distance_km < 0.0)
        throw ValidationError("transport_tkm: negative input");
    return mass_kg / 1000.0 * distance_km;
}

DemandVector eol_split(double mass_kg, double recyclable_fraction, const FlowId& waste_product) {
    if (mass_kg < 0.0) throw ValidationError("eol_split: negative mass");
    if (!(recyclable_fraction >= 0.0 && recyclable_fraction <= 1.0))
        throw ValidationError("eol_split: recyclable fraction out of [0,1]");
    DemandVector out;
    out.label = "end_of_life";
    const double waste = (1.0 - recyclable_fraction) * mass_kg;
    if (waste > 0.0) out.add(waste_product, waste);
    return out;
}

}  // namespace qlca
