#pragma once

#include "qlca/hpc.hpp"
#include "qlca/impact.hpp"
#include "qlca/lci.hpp"
#include "qlca/quantum.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qlca {

struct Diagnostic {
    enum class Severity { error, warning };
    Severity severity = Severity::error;
    std::string file;
    int line = 0;  // 0 when not tied to a line
    std::string message;

    std::string to_string() const;
};

/// One scenario section of the scenario file.
struct ScenarioConfig {
    std::string id;
    enum class Kind { quantum, hpc } kind = Kind::quantum;
    double lifetime_hours = 26280.0;  // 3-year warranty
    int replacement_multiplier = 1;
    std::optional<QuantumConfig> quantum;
    std::optional<HpcConfig> hpc;
};

/// An immutable, validated dataset bundle: flows, processes, characterization
/// factors, scenario configurations, and the assembled inventory system.
class Dataset {
public:
    const std::vector<Flow>& flows() const { return flows_; }
    const std::vector<Process>& processes() const { return processes_; }
    const ImpactMethod& method() const { return method_; }
    const InventorySystem& system() const { return system_; }
    const std::map<std::string, ScenarioConfig>& scenarios() const { return scenarios_; }

    const Flow& flow(const FlowId& id) const;
    const Process& process(const ProcessId& id) const;
    /// Reference product of a process; the unit of demand on that process.
    const FlowId& product_of(const ProcessId& id) const;
    const ScenarioConfig& scenario(const std::string& id) const;

    const std::filesystem::path& directory() const { return directory_; }

private:
    friend struct DatasetLoader;
    std::filesystem::path directory_;
    std::vector<Flow> flows_;
    std::vector<Process> processes_;
    ImpactMethod method_;
    std::map<std::string, ScenarioConfig> scenarios_;
    InventorySystem system_;
    std::map<FlowId, std::size_t> flow_lookup_;
    std::map<ProcessId, std::size_t> process_lookup_;
};

struct LoadResult {
    std::optional<Dataset> dataset;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return dataset.has_value(); }
    bool has_errors() const;
    std::vector<Diagnostic> warnings() const;
};

/// Loads and validates a dataset bundle directory (flows.tsv, processes.tsv,
/// factors.tsv, scenarios.tsv). Never throws on malformed input: every
/// problem becomes a positional diagnostic.
LoadResult load_dataset(const std::filesystem::path& directory);

/// Convenience wrapper that throws ValidationError with the collected
/// diagnostics when loading fails.
Dataset load_dataset_or_throw(const std::filesystem::path& directory);

/// Names of the four bundle files.
constexpr const char* kFlowsFile = "flows.tsv";
constexpr const char* kProcessesFile = "processes.tsv";
constexpr const char* kFactorsFile = "factors.tsv";
constexpr const char* kScenariosFile = "scenarios.tsv";

}  // namespace qlca
