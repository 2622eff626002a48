#pragma once

#include "qlca/system_model.hpp"

#include <map>
#include <optional>
#include <string>

namespace qlca {

class Dataset;

/// One quantum-computer subsystem as stocked in the dataset: its producing
/// process, per-unit mass, and shipping origin/distance.
struct SubsystemSpec {
    ProcessId process;
    double mass_kg = 0.0;
    double distance_km = 0.0;
    std::string origin;
};

/// Parameters of the superconducting quantum computer model. Power defaults
/// are the published per-setup and per-subsystem figures.
struct QuantumConfig {
    long long logical_qubits = 100;      // L
    double overhead_factor = 7.0;        // O, physical qubits per logical qubit
    double multiplexing_factor = 4.0;    // M
    int cryostat_count = 6;              // scenario input; see cryostat_capacity
    std::optional<double> cryostat_capacity;  // setups per cryostat; derives the count when set
    int control_unit_count = 1;

    double per_setup_cryo_power_W = 36.0;
    double per_setup_rack_power_W = 209.0;
    double compressor_power_kW = 10.7;
    double ghs_power_kW = 1.8;

    double nitrogen_L_per_week_per_compressor = 10.0;
    double nitrogen_density_kg_per_L = 0.807;  // implementation constant, not a published value
    FlowId nitrogen_air_flow;

    // Subsystems keyed by role: cryostat, ghs, compressor, control_unit,
    // nitrogen_tank (one per compressor), qec_setup and cables (one per setup).
    std::map<std::string, SubsystemSpec> subsystems;

    ProcessId helium_process;
    double helium_L_per_cryostat = 0.0;

    ProcessId grid_process;     // electricity, Quebec mix by default
    ProcessId freight_process;
    ProcessId waste_process;
    ProcessId desktop_process;  // desktop-operation product, one unit per kWh
    double desktop_power_kW = 0.0;
    double recyclable_fraction = 0.0;
    std::vector<MassCoefficient> assembly_coefficients;  // per kg of assembled mass
};

struct SubsystemCounts {
    int cryostats = 0;
    int ghs_units = 0;
    int compressors = 0;
    int control_units = 0;
    long long qec_setups = 0;
    double setups_per_cryostat = 0.0;
};

/// ceil(L * O / M): QEC setups replicated per logical qubit after overhead
/// and multiplexing.
long long qec_setups(long long logical_qubits, double overhead_factor, double multiplexing_factor);

/// Optional helper: cryostats needed at a given setups-per-cryostat capacity.
int cryostats_for_capacity(long long setups, double capacity);

/// Compressors track cryostats one to one; one GHS drives two compressors.
SubsystemCounts subsystem_counts(long long setups, int cryostat_count, int control_units);

struct PowerBreakdown {
    double compressors_kW = 0.0;
    double ghs_kW = 0.0;
    double qec_kW = 0.0;
    double control_units_kW = 0.0;  // negligible by assumption, kept for the breakdown
    double total_kW = 0.0;
};

PowerBreakdown quantum_power(const SubsystemCounts& counts, const QuantumConfig& cfg);

/// Assembles the full lifecycle model: subsystem production plus assembly,
/// origin-wise freight, the constant-use-rate power/nitrogen draw, and
/// cut-off end of life. Helium appears only in production.
SystemModel build_quantum_system(const QuantumConfig& cfg, const Dataset& dataset);

}  // namespace qlca
