#include "qlca/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace qlca {

namespace {

struct Row {
    int line = 0;
    std::vector<std::string> fields;
};

struct TsvFile {
    std::string name;
    std::vector<Row> rows;
};

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find('\t', start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            break;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

class Diagnostics {
public:
    explicit Diagnostics(std::vector<Diagnostic>& sink) : sink_(sink) {}

    void error(const std::string& file, int line, const std::string& message) {
        sink_.push_back({Diagnostic::Severity::error, file, line, message});
    }
    void warning(const std::string& file, int line, const std::string& message) {
        sink_.push_back({Diagnostic::Severity::warning, file, line, message});
    }
    bool has_errors() const {
        return std::any_of(sink_.begin(), sink_.end(), [](const Diagnostic& d) {
            return d.severity == Diagnostic::Severity::error;
        });
    }

private:
    std::vector<Diagnostic>& sink_;
};

/// Reads one bundle file: a `# qlca-<kind> v1` version header, a column
/// header row, then tab-separated data rows. `#` lines and blanks are
/// skipped. Rows shorter than the header are padded with empty fields.
std::optional<TsvFile> read_tsv(const std::filesystem::path& path, const std::string& kind,
                                const std::vector<std::string>& columns, Diagnostics& diag) {
    const std::string fname = path.filename().string();
    std::ifstream in(path);
    if (!in) {
        diag.error(fname, 0, "cannot open file");
        return std::nullopt;
    }
    TsvFile out;
    out.name = fname;
    std::string line;
    int lineno = 0;
    bool version_seen = false;
    bool header_seen = false;
    const std::string expected_version = "# qlca-" + kind + " v1";
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!version_seen) {
            if (trim(line) != expected_version) {
                diag.error(fname, lineno,
                           "missing or wrong version header (expected '" + expected_version +
                               "')");
                return std::nullopt;
            }
            version_seen = true;
            continue;
        }
        if (trim(line).empty()) continue;
        if (line[0] == '#') continue;
        std::vector<std::string> fields = split_tabs(line);
        if (!header_seen) {
            bool ok = fields.size() == columns.size();
            for (std::size_t i = 0; ok && i < columns.size(); ++i)
                ok = trim(fields[i]) == columns[i];
            if (!ok) {
                std::string want;
                for (const std::string& c : columns) want += (want.empty() ? "" : "\\t") + c;
                diag.error(fname, lineno, "bad column header (expected '" + want + "')");
                return std::nullopt;
            }
            header_seen = true;
            continue;
        }
        if (fields.size() > columns.size()) {
            diag.error(fname, lineno, "too many fields (expected " +
                                          std::to_string(columns.size()) + ")");
            continue;
        }
        fields.resize(columns.size());
        for (std::string& f : fields) f = trim(f);
        out.rows.push_back({lineno, std::move(fields)});
    }
    if (!version_seen) {
        diag.error(fname, 0, "empty file: missing version header '" + expected_version + "'");
        return std::nullopt;
    }
    if (!header_seen) {
        diag.error(fname, 0, "missing column header row");
        return std::nullopt;
    }
    return out;
}

std::optional<double> parse_double(const std::string& s) {
    if (s.empty()) return std::nullopt;
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size()) return std::nullopt;
    if (!std::isfinite(v)) return std::nullopt;
    return v;
}

std::optional<long long> parse_int(const std::string& s) {
    if (s.empty()) return std::nullopt;
    char* end = nullptr;
    const long long v = std::strtoll(s.c_str(), &end, 10);
    if (end != s.c_str() + s.size()) return std::nullopt;
    return v;
}

struct ScenarioEntry {
    int line = 0;
    std::string value;
};

using ScenarioKeyMap = std::map<std::string, std::vector<ScenarioEntry>>;

/// Keys that may appear more than once per scenario.
bool repeatable_key(const std::string& key) { return key == "assembly_coefficient"; }

class ScenarioReader {
public:
    ScenarioReader(const std::string& file, const std::string& id, const ScenarioKeyMap& keys,
                   Diagnostics& diag)
        : file_(file), id_(id), keys_(keys), diag_(diag) {}

    std::optional<std::string> text(const std::string& key) {
        const ScenarioEntry* e = single(key);
        return e ? std::optional<std::string>(e->value) : std::nullopt;
    }

    std::optional<double> number(const std::string& key) {
        const ScenarioEntry* e = single(key);
        if (!e) return std::nullopt;
        auto v = parse_double(e->value);
        if (!v)
            diag_.error(file_, e->line,
                        "scenario '" + id_ + "': key '" + key + "' is not a number: '" +
                            e->value + "'");
        return v;
    }

    std::optional<long long> integer(const std::string& key) {
        const ScenarioEntry* e = single(key);
        if (!e) return std::nullopt;
        auto v = parse_int(e->value);
        if (!v)
            diag_.error(file_, e->line,
                        "scenario '" + id_ + "': key '" + key + "' is not an integer: '" +
                            e->value + "'");
        return v;
    }

    std::string require_text(const std::string& key) {
        auto v = text(key);
        if (!v) {
            diag_.error(file_, 0, "scenario '" + id_ + "': missing required key '" + key + "'");
            return {};
        }
        return *v;
    }

    double require_number(const std::string& key) {
        auto v = number(key);
        if (!v && !keys_.count(key))
            diag_.error(file_, 0, "scenario '" + id_ + "': missing required key '" + key + "'");
        return v.value_or(0.0);
    }

    const std::vector<ScenarioEntry>* repeated(const std::string& key) {
        auto it = keys_.find(key);
        return it == keys_.end() ? nullptr : &it->second;
    }

    void mark_known(const std::string& key) { known_.insert(key); }
    void check_unknown_keys(const std::set<std::string>& known_prefixes) {
        for (const auto& [key, entries] : keys_) {
            if (known_.count(key)) continue;
            bool prefixed = false;
            for (const std::string& p : known_prefixes)
                if (key.rfind(p, 0) == 0) prefixed = true;
            if (!prefixed)
                diag_.error(file_, entries.front().line,
                            "scenario '" + id_ + "': unknown key '" + key + "'");
        }
    }

private:
    const ScenarioEntry* single(const std::string& key) {
        known_.insert(key);
        auto it = keys_.find(key);
        if (it == keys_.end()) return nullptr;
        if (it->second.size() > 1 && !repeatable_key(key)) {
            diag_.error(file_, it->second[1].line,
                        "scenario '" + id_ + "': key '" + key + "' given more than once");
        }
        return &it->second.front();
    }

    std::string file_;
    std::string id_;
    const ScenarioKeyMap& keys_;
    Diagnostics& diag_;
    std::set<std::string> known_;
};

}  // namespace

std::string Diagnostic::to_string() const {
    std::ostringstream out;
    out << file;
    if (line > 0) out << ":" << line;
    out << ": " << (severity == Severity::error ? "error" : "warning") << ": " << message;
    return out.str();
}

bool LoadResult::has_errors() const {
    return std::any_of(diagnostics.begin(), diagnostics.end(), [](const Diagnostic& d) {
        return d.severity == Diagnostic::Severity::error;
    });
}

std::vector<Diagnostic> LoadResult::warnings() const {
    std::vector<Diagnostic> out;
    for (const Diagnostic& d : diagnostics)
        if (d.severity == Diagnostic::Severity::warning) out.push_back(d);
    return out;
}

const Flow& Dataset::flow(const FlowId& id) const {
    auto it = flow_lookup_.find(id);
    if (it == flow_lookup_.end()) throw ValidationError("unknown flow '" + id + "'");
    return flows_[it->second];
}

const Process& Dataset::process(const ProcessId& id) const {
    auto it = process_lookup_.find(id);
    if (it == process_lookup_.end()) throw ValidationError("unknown process '" + id + "'");
    return processes_[it->second];
}

const FlowId& Dataset::product_of(const ProcessId& id) const {
    return process(id).reference_product;
}

const ScenarioConfig& Dataset::scenario(const std::string& id) const {
    auto it = scenarios_.find(id);
    if (it == scenarios_.end()) throw ValidationError("unknown scenario '" + id + "'");
    return it->second;
}

struct DatasetLoader {
    Dataset dataset;
    std::vector<Diagnostic>& sink;
    Diagnostics diag;

    explicit DatasetLoader(std::vector<Diagnostic>& s) : sink(s), diag(s) {}

    void load_flows(const std::filesystem::path& dir) {
        auto file = read_tsv(dir / kFlowsFile, "flows", {"id", "name", "kind", "unit", "compartment"},
                             diag);
        if (!file) return;
        for (const Row& row : file->rows) {
            Flow f;
            f.id = row.fields[0];
            f.name = row.fields[1];
            const std::string& kind = row.fields[2];
            if (kind == "elementary") {
                f.kind = FlowKind::elementary;
            } else if (kind == "intermediate") {
                f.kind = FlowKind::intermediate;
            } else {
                diag.error(file->name, row.line, "flow '" + f.id + "': bad kind '" + kind + "'");
                continue;
            }
            f.unit = row.fields[3];
            if (f.id.empty() || f.unit.empty()) {
                diag.error(file->name, row.line, "flow row needs id and unit");
                continue;
            }
            if (!row.fields[4].empty()) f.compartment = row.fields[4];
            dataset.flows_.push_back(std::move(f));
        }
    }

    void load_processes(const std::filesystem::path& dir) {
        auto file = read_tsv(dir / kProcessesFile, "processes",
                             {"row", "id", "name", "location", "flow", "amount", "direction"},
                             diag);
        if (!file) return;
        std::map<ProcessId, std::size_t> index;
        std::vector<std::pair<Row, bool>> deferred;  // exchange rows, resolved after processes
        for (const Row& row : file->rows) {
            const std::string& tag = row.fields[0];
            if (tag == "process") {
                Process p;
                p.id = row.fields[1];
                p.name = row.fields[2];
                p.location = row.fields[3];
                p.reference_product = row.fields[4];
                if (p.id.empty() || p.reference_product.empty()) {
                    diag.error(file->name, row.line, "process row needs id and reference flow");
                    continue;
                }
                if (index.count(p.id)) {
                    diag.error(file->name, row.line, "duplicate process id '" + p.id + "'");
                    continue;
                }
                index[p.id] = dataset.processes_.size();
                dataset.processes_.push_back(std::move(p));
            } else if (tag == "exchange") {
                deferred.push_back({row, false});
            } else {
                diag.error(file->name, row.line, "bad row tag '" + tag + "' (process|exchange)");
            }
        }
        for (auto& [row, _] : deferred) {
            const std::string& pid = row.fields[1];
            auto it = index.find(pid);
            if (it == index.end()) {
                diag.error(file->name, row.line,
                           "exchange references undefined process '" + pid + "' (flow '" +
                               row.fields[4] + "')");
                continue;
            }
            Exchange e;
            e.flow = row.fields[4];
            auto amount = parse_double(row.fields[5]);
            if (e.flow.empty() || !amount) {
                diag.error(file->name, row.line,
                           "exchange of process '" + pid + "' needs a flow and a finite amount");
                continue;
            }
            e.amount = *amount;
            const std::string& dir = row.fields[6];
            if (dir == "input") {
                e.direction = Direction::input;
            } else if (dir == "output") {
                e.direction = Direction::output;
            } else {
                diag.error(file->name, row.line,
                           "exchange of process '" + pid + "': bad direction '" + dir + "'");
                continue;
            }
            dataset.processes_[it->second].exchanges.push_back(std::move(e));
        }
    }

    void load_factors(const std::filesystem::path& dir) {
        auto file =
            read_tsv(dir / kFactorsFile, "factors", {"flow", "indicator", "factor", "unit"}, diag);
        if (!file) return;
        dataset.method_.name = "reference endpoint factors";
        std::map<FlowId, const Flow*> flow_by_id;
        for (const Flow& f : dataset.flows_) flow_by_id[f.id] = &f;
        for (const Row& row : file->rows) {
            const std::string& flow_id = row.fields[0];
            auto ind = parse_indicator(row.fields[1]);
            if (!ind) {
                diag.error(file->name, row.line, "unknown indicator '" + row.fields[1] + "'");
                continue;
            }
            auto factor = parse_double(row.fields[2]);
            if (!factor) {
                diag.error(file->name, row.line, "bad factor value '" + row.fields[2] + "'");
                continue;
            }
            auto fit = flow_by_id.find(flow_id);
            if (fit == flow_by_id.end()) {
                diag.warning(file->name, row.line,
                             "characterization factor references unknown flow '" + flow_id +
                                 "' (skipped)");
                continue;
            }
            if (fit->second->kind != FlowKind::elementary) {
                diag.error(file->name, row.line,
                           "characterization factor on intermediate flow '" + flow_id + "'");
                continue;
            }
            // Unit discipline: the unit column must read <indicator unit>/<flow
            // unit>. Climate-change factors may be stated in kg CO2eq and are
            // converted to t CO2eq exactly once, here.
            const std::string& unit = row.fields[3];
            const std::string flow_unit = fit->second->unit;
            const std::string natural = std::string(indicator_unit(*ind)) + "/" + flow_unit;
            double scale = 1.0;
            if (unit != natural) {
                if (*ind == Indicator::climate_change && unit == "kg CO2eq/" + flow_unit) {
                    scale = 1e-3;
                } else {
                    diag.error(file->name, row.line,
                               "factor unit '" + unit + "' does not match '" + natural + "'" +
                                   (*ind == Indicator::climate_change
                                        ? " (or 'kg CO2eq/" + flow_unit + "')"
                                        : ""));
                    continue;
                }
            }
            auto& vec = dataset.method_.factors[flow_id];
            const std::size_t idx = static_cast<std::size_t>(*ind);
            if (vec[idx] != 0.0)
                diag.warning(file->name, row.line,
                             "duplicate factor for ('" + flow_id + "', " + row.fields[1] +
                                 "); keeping the last");
            vec[idx] = *factor * scale;
        }
    }

    std::vector<MassCoefficient> parse_assembly(ScenarioReader& reader, const std::string& file) {
        std::vector<MassCoefficient> out;
        reader.mark_known("assembly_coefficient");
        const auto* entries = reader.repeated("assembly_coefficient");
        if (!entries) return out;
        for (const ScenarioEntry& e : *entries) {
            const std::size_t colon = e.value.rfind(':');
            auto amount = colon == std::string::npos
                              ? std::nullopt
                              : parse_double(e.value.substr(colon + 1));
            if (!amount) {
                diag.error(file, e.line,
                           "assembly_coefficient must be '<process>:<amount per kg>', got '" +
                               e.value + "'");
                continue;
            }
            const std::string pid = e.value.substr(0, colon);
            const FlowId* product = resolve_process(file, e.line, pid);
            if (!product) continue;
            out.push_back({*product, *amount});
        }
        return out;
    }

    /// Returns the reference product of a process id, or records an error.
    const FlowId* resolve_process(const std::string& file, int line, const ProcessId& pid) {
        for (const Process& p : dataset.processes_)
            if (p.id == pid) return &p.reference_product;
        diag.error(file, line, "reference to unknown process '" + pid + "'");
        return nullptr;
    }

    void check_process_exists(const std::string& file, const std::string& scenario,
                              const std::string& key, const ProcessId& pid) {
        if (pid.empty()) return;
        for (const Process& p : dataset.processes_)
            if (p.id == pid) return;
        diag.error(file, 0, "scenario '" + scenario + "': " + key + " references unknown process '" +
                                pid + "'");
    }

    void load_scenarios(const std::filesystem::path& dir, std::set<FlowId>& external_refs) {
        auto file =
            read_tsv(dir / kScenariosFile, "scenarios", {"scenario", "key", "value"}, diag);
        if (!file) return;
        std::map<std::string, ScenarioKeyMap> raw;
        std::vector<std::string> order;
        for (const Row& row : file->rows) {
            const std::string& id = row.fields[0];
            if (id.empty() || row.fields[1].empty()) {
                diag.error(file->name, row.line, "scenario row needs scenario and key");
                continue;
            }
            if (!raw.count(id)) order.push_back(id);
            raw[id][row.fields[1]].push_back({row.line, row.fields[2]});
        }
        for (const std::string& id : order) {
            ScenarioConfig cfg = parse_scenario(file->name, id, raw[id], external_refs);
            dataset.scenarios_.emplace(id, std::move(cfg));
        }
    }

    ScenarioConfig parse_scenario(const std::string& file, const std::string& id,
                                  const ScenarioKeyMap& keys, std::set<FlowId>& external_refs) {
        ScenarioConfig cfg;
        cfg.id = id;
        ScenarioReader reader(file, id, keys, diag);

        const std::string kind = reader.require_text("kind");
        if (kind == "quantum") {
            cfg.kind = ScenarioConfig::Kind::quantum;
        } else if (kind == "hpc") {
            cfg.kind = ScenarioConfig::Kind::hpc;
        } else {
            diag.error(file, 0, "scenario '" + id + "': kind must be quantum or hpc");
            return cfg;
        }

        if (auto v = reader.number("lifetime_hours")) {
            if (*v <= 0.0)
                diag.error(file, 0, "scenario '" + id + "': lifetime_hours must be > 0");
            cfg.lifetime_hours = *v;
        }
        if (auto v = reader.integer("replacement_multiplier")) {
            if (*v < 1)
                diag.error(file, 0, "scenario '" + id + "': replacement_multiplier must be >= 1");
            cfg.replacement_multiplier = static_cast<int>(*v);
        }

        if (cfg.kind == ScenarioConfig::Kind::quantum) {
            QuantumConfig q = parse_quantum(file, id, reader, external_refs);
            reader.check_unknown_keys({"subsystem."});
            cfg.quantum = std::move(q);
        } else {
            HpcConfig h = parse_hpc(file, id, reader);
            reader.check_unknown_keys({});
            cfg.hpc = std::move(h);
        }
        return cfg;
    }

    QuantumConfig parse_quantum(const std::string& file, const std::string& id,
                                ScenarioReader& reader, std::set<FlowId>& external_refs) {
        QuantumConfig q;
        if (auto v = reader.integer("logical_qubits")) q.logical_qubits = *v;
        if (auto v = reader.number("overhead_factor")) q.overhead_factor = *v;
        if (auto v = reader.number("multiplexing_factor")) q.multiplexing_factor = *v;
        if (auto v = reader.integer("cryostat_count")) q.cryostat_count = static_cast<int>(*v);
        if (auto v = reader.number("cryostat_capacity")) q.cryostat_capacity = *v;
        if (auto v = reader.integer("control_unit_count"))
            q.control_unit_count = static_cast<int>(*v);
        if (auto v = reader.number("per_setup_cryo_power_W")) q.per_setup_cryo_power_W = *v;
        if (auto v = reader.number("per_setup_rack_power_W")) q.per_setup_rack_power_W = *v;
        if (auto v = reader.number("compressor_power_kW")) q.compressor_power_kW = *v;
        if (auto v = reader.number("ghs_power_kW")) q.ghs_power_kW = *v;
        if (auto v = reader.number("nitrogen_L_per_week_per_compressor"))
            q.nitrogen_L_per_week_per_compressor = *v;
        if (auto v = reader.number("nitrogen_density_kg_per_L")) q.nitrogen_density_kg_per_L = *v;
        q.nitrogen_air_flow = reader.require_text("nitrogen_air_flow");
        if (!q.nitrogen_air_flow.empty()) external_refs.insert(q.nitrogen_air_flow);

        if (auto v = reader.text("helium_process")) q.helium_process = *v;
        if (auto v = reader.number("helium_L_per_cryostat")) q.helium_L_per_cryostat = *v;
        q.grid_process = reader.require_text("grid_process");
        q.freight_process = reader.require_text("freight_process");
        q.waste_process = reader.require_text("waste_process");
        if (auto v = reader.text("desktop_process")) q.desktop_process = *v;
        if (auto v = reader.number("desktop_power_kW")) q.desktop_power_kW = *v;
        if (auto v = reader.number("recyclable_fraction")) q.recyclable_fraction = *v;
        q.assembly_coefficients = parse_assembly(reader, file);

        for (const char* role : {"cryostat", "ghs", "compressor", "control_unit", "nitrogen_tank",
                                 "qec_setup", "cables"}) {
            const std::string prefix = std::string("subsystem.") + role + ".";
            SubsystemSpec spec;
            bool any = false;
            if (auto v = reader.text(prefix + "process")) {
                spec.process = *v;
                any = true;
            }
            if (auto v = reader.number(prefix + "mass_kg")) {
                spec.mass_kg = *v;
                any = true;
            }
            if (auto v = reader.number(prefix + "distance_km")) {
                spec.distance_km = *v;
                any = true;
            }
            if (auto v = reader.text(prefix + "origin")) spec.origin = *v;
            if (!any) {
                diag.error(file, 0,
                           "scenario '" + id + "': missing subsystem '" + role + "' definition");
                continue;
            }
            if (spec.process.empty()) {
                diag.error(file, 0, "scenario '" + id + "': subsystem '" + role +
                                        "' has no process");
                continue;
            }
            check_process_exists(file, id, std::string("subsystem.") + role, spec.process);
            q.subsystems[role] = std::move(spec);
        }

        for (const auto& [key, pid] :
             std::initializer_list<std::pair<const char*, ProcessId>>{
                 {"grid_process", q.grid_process},
                 {"freight_process", q.freight_process},
                 {"waste_process", q.waste_process},
                 {"desktop_process", q.desktop_process},
                 {"helium_process", q.helium_process}})
            check_process_exists(file, id, key, pid);
        return q;
    }

    HpcConfig parse_hpc(const std::string& file, const std::string& id, ScenarioReader& reader) {
        HpcConfig h;
        if (auto v = reader.integer("target_cores")) h.target_cores = *v;
        if (auto v = reader.integer("cores_per_cpu")) h.cores_per_cpu = static_cast<int>(*v);
        if (auto v = reader.integer("cpus_per_blade")) h.cpus_per_blade = static_cast<int>(*v);
        if (auto v = reader.number("blade_power_kW")) h.blade_power_kW = *v;
        if (auto v = reader.number("blade_mass_kg")) h.blade_mass_kg = *v;
        if (auto v = reader.number("cable_mass_per_blade_kg")) h.cable_mass_per_blade_kg = *v;
        if (auto v = reader.integer("psu_count")) h.psu_count = static_cast<int>(*v);
        if (auto v = reader.number("psu_rating_W")) h.psu_rating_W = *v;
        if (auto v = reader.number("psu_load_fraction")) h.psu_load_fraction = *v;
        if (auto v = reader.number("origin_distance_km")) {
            h.origin_distance_km = *v;
        } else {
            diag.error(file, 0, "scenario '" + id + "': missing required key 'origin_distance_km'");
        }
        if (auto v = reader.text("origin")) h.origin = *v;
        if (auto v = reader.number("hours_per_year")) h.hours_per_year = *v;
        h.blade_process = reader.require_text("blade_process");
        h.grid_process = reader.require_text("grid_process");
        h.freight_process = reader.require_text("freight_process");
        h.waste_process = reader.require_text("waste_process");
        if (auto v = reader.text("desktop_process")) h.desktop_process = *v;
        if (auto v = reader.number("desktop_power_kW")) h.desktop_power_kW = *v;
        if (auto v = reader.number("recyclable_fraction")) h.recyclable_fraction = *v;
        h.assembly_coefficients = parse_assembly(reader, file);

        for (const auto& [key, pid] :
             std::initializer_list<std::pair<const char*, ProcessId>>{
                 {"blade_process", h.blade_process},
                 {"grid_process", h.grid_process},
                 {"freight_process", h.freight_process},
                 {"waste_process", h.waste_process},
                 {"desktop_process", h.desktop_process}})
            check_process_exists(file, id, key, pid);
        return h;
    }

    void finalize(const std::filesystem::path& dir, const std::set<FlowId>& external_refs) {
        if (diag.has_errors()) return;
        // Deterministic, order-independent: internal order is by id.
        std::sort(dataset.flows_.begin(), dataset.flows_.end(),
                  [](const Flow& a, const Flow& b) { return a.id < b.id; });
        std::sort(dataset.processes_.begin(), dataset.processes_.end(),
                  [](const Process& a, const Process& b) { return a.id < b.id; });
        for (std::size_t i = 0; i < dataset.flows_.size(); ++i)
            dataset.flow_lookup_[dataset.flows_[i].id] = i;
        for (std::size_t i = 0; i < dataset.processes_.size(); ++i)
            dataset.process_lookup_[dataset.processes_[i].id] = i;

        std::set<FlowId> refs = external_refs;
        for (const auto& [flow, _] : dataset.method_.factors) refs.insert(flow);
        try {
            dataset.system_ = InventorySystem::build(dataset.flows_, dataset.processes_, refs);
        } catch (const std::exception& e) {
            diag.error(kProcessesFile, 0, e.what());
            return;
        }

        // Elementary flows no factor characterizes are legal but surfaced.
        for (const Flow& f : dataset.flows_) {
            if (f.kind == FlowKind::elementary && !dataset.method_.characterizes(f.id))
                diag.warning(kFactorsFile, 0,
                             "elementary flow '" + f.id + "' is uncharacterized (contributes 0)");
        }
        dataset.directory_ = dir;
    }
};

LoadResult load_dataset(const std::filesystem::path& directory) {
    LoadResult result;
    DatasetLoader loader(result.diagnostics);
    std::error_code ec;
    if (!std::filesystem::is_directory(directory, ec)) {
        loader.diag.error(directory.string(), 0, "dataset directory does not exist");
        return result;
    }
    std::set<FlowId> external_refs;
    loader.load_flows(directory);
    loader.load_processes(directory);
    loader.load_factors(directory);
    loader.load_scenarios(directory, external_refs);
    loader.finalize(directory, external_refs);
    if (!loader.diag.has_errors()) result.dataset = std::move(loader.dataset);
    return result;
}

Dataset load_dataset_or_throw(const std::filesystem::path& directory) {
    LoadResult result = load_dataset(directory);
    if (!result.ok()) {
        std::string msg = "dataset '" + directory.string() + "' failed to load:";
        for (const Diagnostic& d : result.diagnostics)
            if (d.severity == Diagnostic::Severity::error) msg += "\n  " + d.to_string();
        throw ValidationError(msg);
    }
    return std::move(*result.dataset);
}

}  // namespace qlca
