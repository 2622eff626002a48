#include "qlca/quantum.hpp"

#include "qlca/dataset.hpp"

#include <cmath>

namespace qlca {

namespace {

constexpr double kHoursPerWeek = 168.0;

void check_config(const QuantumConfig& cfg) {
    if (cfg.logical_qubits < 1) throw ValidationError("quantum config: logical_qubits must be >= 1");
    if (cfg.overhead_factor < 1.0) throw ValidationError("quantum config: overhead factor must be >= 1");
    if (cfg.multiplexing_factor < 1.0)
        throw ValidationError("quantum config: multiplexing factor must be >= 1");
    if (cfg.cryostat_count < 1 && !cfg.cryostat_capacity)
        throw ValidationError("quantum config: cryostat count must be >= 1");
    if (cfg.control_unit_count < 1)
        throw ValidationError("quantum config: control unit count must be >= 1");
    for (double p : {cfg.per_setup_cryo_power_W, cfg.per_setup_rack_power_W,
                     cfg.compressor_power_kW, cfg.ghs_power_kW, cfg.desktop_power_kW})
        if (p < 0.0 || !std::isfinite(p))
            throw ValidationError("quantum config: powers must be finite and >= 0");
}

}  // namespace

long long qec_setups(long long logical_qubits, double overhead_factor,
                     double multiplexing_factor) {
    if (logical_qubits < 1) throw ValidationError("qec_setups: logical qubits must be >= 1");
    if (overhead_factor < 1.0) throw ValidationError("qec_setups: overhead factor must be >= 1");
    if (multiplexing_factor < 1.0)
        throw ValidationError("qec_setups: multiplexing factor must be >= 1");
    const double raw =
        static_cast<double>(logical_qubits) * overhead_factor / multiplexing_factor;
    return static_cast<long long>(std::ceil(raw - 1e-9));  // hardware units are integral
}

int cryostats_for_capacity(long long setups, double capacity) {
    if (setups < 1) throw ValidationError("cryostats_for_capacity: setups must be >= 1");
    if (capacity <= 0.0) throw ValidationError("cryostats_for_capacity: capacity must be > 0");
    return static_cast<int>(std::ceil(static_cast<double>(setups) / capacity - 1e-9));
}

SubsystemCounts subsystem_counts(long long setups, int cryostat_count, int control_units) {
    if (cryostat_count < 1) throw ValidationError("subsystem_counts: zero cryostats");
    if (setups < 0) throw ValidationError("subsystem_counts: negative setup count");
    if (control_units < 1) throw ValidationError("subsystem_counts: control units must be >= 1");
    SubsystemCounts c;
    c.cryostats = cryostat_count;
    c.compressors = cryostat_count;                    // one compressor per cryostat
    c.ghs_units = (cryostat_count + 1) / 2;            // one GHS operates two compressors
    c.control_units = control_units;
    c.qec_setups = setups;
    c.setups_per_cryostat = static_cast<double>(setups) / cryostat_count;
    return c;
}

PowerBreakdown quantum_power(const SubsystemCounts& counts, const QuantumConfig& cfg) {
    check_config(cfg);
    PowerBreakdown p;
    p.compressors_kW = counts.compressors * cfg.compressor_power_kW;
    p.ghs_kW = counts.ghs_units * cfg.ghs_power_kW;
    p.qec_kW = static_cast<double>(counts.qec_setups) *
               (cfg.per_setup_cryo_power_W + cfg.per_setup_rack_power_W) / 1000.0;
    p.control_units_kW = 0.0;  // negligible power for the control unit
    p.total_kW = p.compressors_kW + p.ghs_kW + p.qec_kW + p.control_units_kW;
    return p;
}

SystemModel build_quantum_system(const QuantumConfig& cfg, const Dataset& dataset) {
    check_config(cfg);

    const long long setups =
        qec_setups(cfg.logical_qubits, cfg.overhead_factor, cfg.multiplexing_factor);
    const int cryostats = cfg.cryostat_capacity
                              ? cryostats_for_capacity(setups, *cfg.cryostat_capacity)
                              : cfg.cryostat_count;
    const SubsystemCounts counts = subsystem_counts(setups, cryostats, cfg.control_unit_count);
    const PowerBreakdown power = quantum_power(counts, cfg);

    struct RoleCount {
        const char* role;
        double count;
        const char* group;
    };
    const RoleCount roles[] = {
        {"cryostat", static_cast<double>(counts.cryostats), "cryostat"},
        {"qec_setup", static_cast<double>(counts.qec_setups), "cryostat"},
        {"cables", static_cast<double>(counts.qec_setups), "cryostat"},
        {"ghs", static_cast<double>(counts.ghs_units), "ghs"},
        {"compressor", static_cast<double>(counts.compressors), "compressor"},
        {"nitrogen_tank", static_cast<double>(counts.compressors), "compressor"},
        {"control_unit", static_cast<double>(counts.control_units), "control_unit"},
    };

    SystemModel model;
    model.name = "quantum";
    model.power_kW = power.total_kW;

    double total_mass = 0.0;
    for (const RoleCount& rc : roles) {
        auto it = cfg.subsystems.find(rc.role);
        if (it == cfg.subsystems.end())
            throw ValidationError(std::string("quantum config: missing subsystem '") + rc.role +
                                  "'");
        const SubsystemSpec& spec = it->second;
        const FlowId& product = dataset.product_of(spec.process);
        // Processes stocked by the kilogram are demanded by mass, unit
        // processes by count.
        const bool by_mass = dataset.flow(product).unit == "kg";
        const double amount = by_mass ? rc.count * spec.mass_kg : rc.count;

        Contribution part;
        part.label = rc.role;
        part.group = rc.group;
        part.demand.demand.label = rc.role;
        part.demand.demand.add(product, amount);
        model.production_parts.push_back(part);
        model.production.demand.add(product, amount);

        total_mass += rc.count * spec.mass_kg;

        const double tkm = transport_tkm(rc.count * spec.mass_kg, spec.distance_km);
        model.delivery.demand.add(dataset.product_of(cfg.freight_process), tkm);
        model.metrics["delivery_tkm_" + std::string(rc.role)] = tkm;
    }
    model.total_mass_kg = total_mass;

    if (!cfg.helium_process.empty() && cfg.helium_L_per_cryostat > 0.0) {
        // The helium circuit is closed: the charge is bought once, in production.
        Contribution helium;
        helium.label = "helium_charge";
        helium.group = "cryostat";
        helium.demand.demand.label = "helium_charge";
        helium.demand.demand.add(dataset.product_of(cfg.helium_process),
                                 counts.cryostats * cfg.helium_L_per_cryostat);
        model.production.demand.merge(helium.demand.demand);
        model.production_parts.push_back(helium);
    }

    const DemandVector assembly = assembly_burden(total_mass, cfg.assembly_coefficients);
    if (!assembly.entries.empty()) {
        Contribution part;
        part.label = "assembly";
        part.group = "assembly";
        part.demand.demand = assembly;
        model.production_parts.push_back(part);
        model.production.demand.merge(assembly);
    }
    model.production.demand.label = "production";

    model.delivery.demand.label = "delivery";
    double tkm_total = 0.0;
    for (const auto& [key, value] : model.metrics)
        if (key.rfind("delivery_tkm_", 0) == 0) tkm_total += value;
    model.metrics["delivery_tkm_total"] = tkm_total;

    // Constant operation: electricity at the total system power, the desktop
    // companion, and nitrogen boil-off emitted to air. No sleep or off mode.
    model.use_per_hour.demand.label = "use_per_hour";
    model.use_per_hour.demand.add(dataset.product_of(cfg.grid_process), power.total_kW);
    if (!cfg.desktop_process.empty() && cfg.desktop_power_kW > 0.0)
        model.use_per_hour.demand.add(dataset.product_of(cfg.desktop_process),
                                      cfg.desktop_power_kW);
    const double nitrogen_L_per_hour =
        counts.compressors * cfg.nitrogen_L_per_week_per_compressor / kHoursPerWeek;
    if (nitrogen_L_per_hour > 0.0) {
        if (cfg.nitrogen_air_flow.empty())
            throw ValidationError("quantum config: nitrogen_air_flow not set");
        if (dataset.flow(cfg.nitrogen_air_flow).kind != FlowKind::elementary)
            throw ValidationError("quantum config: nitrogen_air_flow must be elementary");
        model.use_per_hour.direct[cfg.nitrogen_air_flow] =
            nitrogen_L_per_hour * cfg.nitrogen_density_kg_per_L;
    }
    model.metrics["nitrogen_L_per_hour"] = nitrogen_L_per_hour;

    model.end_of_life.demand =
        eol_split(total_mass, cfg.recyclable_fraction, dataset.product_of(cfg.waste_process));

    model.metrics["qec_setups"] = static_cast<double>(counts.qec_setups);
    model.metrics["cryostats"] = counts.cryostats;
    model.metrics["ghs_units"] = counts.ghs_units;
    model.metrics["compressors"] = counts.compressors;
    model.metrics["control_units"] = counts.control_units;
    model.metrics["setups_per_cryostat"] = counts.setups_per_cryostat;
    model.metrics["power_compressors_kW"] = power.compressors_kW;
    model.metrics["power_ghs_kW"] = power.ghs_kW;
    model.metrics["power_qec_kW"] = power.qec_kW;
    model.metrics["power_total_kW"] = power.total_kW;
    model.metrics["total_mass_kg"] = total_mass;
    return model;
}

}  // namespace qlca
