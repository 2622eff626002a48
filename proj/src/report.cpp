#include "qlca/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace qlca {

namespace {

const char* kPhaseColors[] = {"#4472c4", "#ed7d31", "#a5a5a5", "#ffc000"};  // blue/orange/grey/yellow
const char* kSeriesColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                               "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22"};

std::string unit_of_metric(const std::string& name) {
    struct Suffix {
        const char* suffix;
        const char* unit;
    };
    static const Suffix suffixes[] = {
        {"_kW", "kW"},           {"_kg", "kg"},      {"_tkm", "t.km"},
        {"_L_per_hour", "L/h"},  {"_kWh", "kWh"},    {"_kWh_per_blade", "kWh"},
        {"_per_cryostat", "1/cryostat"},
    };
    for (const Suffix& s : suffixes) {
        const std::size_t len = std::string(s.suffix).size();
        if (name.size() >= len && name.compare(name.size() - len, len, s.suffix) == 0)
            return s.unit;
    }
    if (name.rfind("delivery_tkm_", 0) == 0) return "t.km";
    return "count";
}

double nice_ceil(double v) {
    if (v <= 0.0) return 1.0;
    const double mag = std::pow(10.0, std::floor(std::log10(v)));
    for (double m : {1.0, 2.0, 2.5, 5.0, 10.0})
        if (v <= m * mag) return m * mag;
    return 10.0 * mag;
}

std::string svg_coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

struct SvgBuilder {
    std::ostringstream out;

    SvgBuilder(int width, int height) {
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
            << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
        out << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
            << "\" fill=\"#ffffff\"/>\n";
    }
    void rect(double x, double y, double w, double h, const std::string& fill) {
        out << "<rect x=\"" << svg_coord(x) << "\" y=\"" << svg_coord(y) << "\" width=\""
            << svg_coord(w) << "\" height=\"" << svg_coord(h) << "\" fill=\"" << fill << "\"/>\n";
    }
    void line(double x1, double y1, double x2, double y2, const std::string& stroke,
              double width = 1.0) {
        out << "<line x1=\"" << svg_coord(x1) << "\" y1=\"" << svg_coord(y1) << "\" x2=\""
            << svg_coord(x2) << "\" y2=\"" << svg_coord(y2) << "\" stroke=\"" << stroke
            << "\" stroke-width=\"" << svg_coord(width) << "\"/>\n";
    }
    void polyline(const std::vector<std::pair<double, double>>& pts, const std::string& stroke) {
        out << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"2\" points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i) out << " ";
            out << svg_coord(pts[i].first) << "," << svg_coord(pts[i].second);
        }
        out << "\"/>\n";
    }
    void circle(double x, double y, double r, const std::string& fill) {
        out << "<circle cx=\"" << svg_coord(x) << "\" cy=\"" << svg_coord(y) << "\" r=\""
            << svg_coord(r) << "\" fill=\"" << fill << "\"/>\n";
    }
    void text(double x, double y, const std::string& s, int size = 12,
              const std::string& anchor = "start") {
        out << "<text x=\"" << svg_coord(x) << "\" y=\"" << svg_coord(y)
            << "\" font-family=\"sans-serif\" font-size=\"" << size << "\" text-anchor=\""
            << anchor << "\">" << s << "</text>\n";
    }
    std::string finish() {
        out << "</svg>\n";
        return out.str();
    }
};

}  // namespace

std::string format_number(double value) {
    if (value == 0.0) value = 0.0;  // normalize -0
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.7g", value);
    return buf;
}

double parse_number(const std::string& text) {
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size())
        throw ValidationError("not a number: '" + text + "'");
    return v;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string phase_impact_csv(const std::vector<std::pair<std::string, EvalResult>>& results) {
    std::ostringstream out;
    out << "scenario,phase,indicator,hours,value,unit\n";
    for (const auto& [scenario, result] : results) {
        for (const PhaseImpact& p : result.phases) {
            for (Indicator ind : kIndicators) {
                out << csv_escape(scenario) << "," << phase_id(p.phase) << ","
                    << indicator_id(ind) << "," << format_number(result.hours) << ","
                    << format_number(p.impacts[static_cast<std::size_t>(ind)]) << ","
                    << indicator_unit(ind) << "\n";
            }
        }
        for (Indicator ind : kIndicators) {
            out << csv_escape(scenario) << ",total," << indicator_id(ind) << ","
                << format_number(result.hours) << ","
                << format_number(result.totals[static_cast<std::size_t>(ind)]) << ","
                << indicator_unit(ind) << "\n";
        }
    }
    return out.str();
}

std::string sweep_csv(const std::vector<SweepSeries>& series) {
    std::ostringstream out;
    out << "scenario,indicator,phase,hours,value,unit\n";
    for (const SweepSeries& s : series) {
        for (const EvalResult& point : s.points) {
            for (Indicator ind : kIndicators) {
                for (const PhaseImpact& p : point.phases) {
                    out << csv_escape(s.scenario) << "," << indicator_id(ind) << ","
                        << phase_id(p.phase) << "," << format_number(point.hours) << ","
                        << format_number(p.impacts[static_cast<std::size_t>(ind)]) << ","
                        << indicator_unit(ind) << "\n";
                }
                out << csv_escape(s.scenario) << "," << indicator_id(ind) << ",total,"
                    << format_number(point.hours) << ","
                    << format_number(point.totals[static_cast<std::size_t>(ind)]) << ","
                    << indicator_unit(ind) << "\n";
            }
        }
    }
    return out.str();
}

std::string crossover_csv(const std::vector<CrossoverEntry>& entries) {
    std::ostringstream out;
    out << "scenario_x,scenario_y,indicator,status,crossover_hours,unit\n";
    for (const CrossoverEntry& e : entries) {
        const char* status = e.status == CrossoverEntry::Status::found ? "found"
                             : e.status == CrossoverEntry::Status::none ? "none"
                                                                        : "always_equal";
        out << csv_escape(e.scenario_x) << "," << csv_escape(e.scenario_y) << ","
            << indicator_id(e.indicator) << "," << status << ","
            << (e.hours ? format_number(*e.hours) : "") << ",h\n";
    }
    return out.str();
}

std::string contribution_csv(const std::string& scenario, const CompiledScenario& compiled) {
    std::ostringstream out;
    out << "scenario,component,group,indicator,value,unit,share\n";
    ImpactVector totals{};
    for (const auto& part : compiled.production_parts) totals = totals + part.impacts;
    for (const auto& part : compiled.production_parts) {
        for (Indicator ind : kIndicators) {
            const std::size_t i = static_cast<std::size_t>(ind);
            const double share = totals[i] != 0.0 ? part.impacts[i] / totals[i] : 0.0;
            out << csv_escape(scenario) << "," << csv_escape(part.label) << ","
                << csv_escape(part.group) << "," << indicator_id(ind) << ","
                << format_number(part.impacts[i]) << "," << indicator_unit(ind) << ","
                << format_number(share) << "\n";
        }
    }
    return out.str();
}

std::string crosscheck_csv(const std::vector<CrosscheckRow>& rows) {
    std::ostringstream out;
    out << "machine,cell,computed,expected,rel_diff,within_tolerance,informational\n";
    for (const CrosscheckRow& r : rows) {
        out << r.machine << "," << r.cell << "," << format_number(r.computed) << ","
            << format_number(r.expected) << "," << format_number(r.rel_diff) << ","
            << (r.within_tolerance ? "yes" : "no") << "," << (r.informational ? "yes" : "no")
            << "\n";
    }
    return out.str();
}

std::string metrics_csv(const std::string& scenario,
                        const std::map<std::string, double>& metrics) {
    std::ostringstream out;
    out << "scenario,metric,value,unit\n";
    for (const auto& [name, value] : metrics) {
        out << csv_escape(scenario) << "," << csv_escape(name) << "," << format_number(value)
            << "," << unit_of_metric(name) << "\n";
    }
    return out.str();
}

std::string fixed_ratio_csv(const std::map<std::string, ImpactVector>& ratios) {
    std::ostringstream out;
    out << "scenario_pair,indicator,fixed_phase_ratio,unit\n";
    for (const auto& [pair, ratio] : ratios) {
        for (Indicator ind : kIndicators) {
            out << csv_escape(pair) << "," << indicator_id(ind) << ","
                << format_number(ratio[static_cast<std::size_t>(ind)]) << ",ratio\n";
        }
    }
    return out.str();
}

std::string stacked_bar_chart_svg(const std::vector<SweepSeries>& series, Indicator indicator) {
    if (series.empty() || series.front().points.empty())
        throw ValidationError("chart: empty series");
    const std::size_t i = static_cast<std::size_t>(indicator);
    const int width = 760, height = 480;
    const double left = 80, right = 740, top = 50, bottom = 400;

    double max_total = 0.0;
    for (const SweepSeries& s : series)
        for (const EvalResult& p : s.points)
            max_total = std::max(max_total, p.totals[i]);
    const double y_max = nice_ceil(max_total);

    SvgBuilder svg(width, height);
    svg.text(left, 28, std::string("Life cycle phase contributions, ") +
                           std::string(indicator_id(indicator)) + " (" +
                           std::string(indicator_unit(indicator)) + ")", 15);

    // y axis with 5 ticks
    svg.line(left, top, left, bottom, "#333333");
    svg.line(left, bottom, right, bottom, "#333333");
    for (int t = 0; t <= 5; ++t) {
        const double v = y_max * t / 5.0;
        const double y = bottom - (bottom - top) * t / 5.0;
        svg.line(left - 4, y, left, y, "#333333");
        svg.text(left - 8, y + 4, format_number(v), 11, "end");
        if (t > 0) svg.line(left, y, right, y, "#eeeeee");
    }

    const std::size_t n_hours = series.front().points.size();
    const std::size_t n_series = series.size();
    const double group_w = (right - left) / static_cast<double>(n_hours);
    const double bar_w = group_w * 0.7 / static_cast<double>(n_series);

    for (std::size_t hi = 0; hi < n_hours; ++hi) {
        const double group_x = left + group_w * (static_cast<double>(hi) + 0.15);
        for (std::size_t si = 0; si < n_series; ++si) {
            const EvalResult& p = series[si].points[hi];
            const double x = group_x + bar_w * static_cast<double>(si);
            double y = bottom;
            for (std::size_t pi = 0; pi < p.phases.size(); ++pi) {
                const double v = p.phases[pi].impacts[i];
                if (v <= 0.0 || y_max <= 0.0) continue;
                const double h = (bottom - top) * v / y_max;
                y -= h;
                svg.rect(x, y, bar_w * 0.9, h,
                         kPhaseColors[static_cast<std::size_t>(p.phases[pi].phase)]);
            }
            svg.text(x + bar_w * 0.45, bottom + 26, series[si].scenario, 10, "middle");
        }
        svg.text(group_x + bar_w * n_series / 2.0, bottom + 14,
                 format_number(series.front().points[hi].hours) + " h", 11, "middle");
    }

    double lx = left;
    for (Phase phase : kPhases) {
        svg.rect(lx, height - 36, 12, 12, kPhaseColors[static_cast<std::size_t>(phase)]);
        svg.text(lx + 16, height - 26, std::string(phase_id(phase)), 11);
        lx += 120;
    }
    svg.text(lx + 10, height - 26,
             std::string("unit: ") + std::string(indicator_unit(indicator)), 11);
    return svg.finish();
}

std::string comparison_line_chart_svg(const std::vector<SweepSeries>& series,
                                      Indicator indicator) {
    if (series.empty() || series.front().points.empty())
        throw ValidationError("chart: empty series");
    const std::size_t i = static_cast<std::size_t>(indicator);
    const int width = 760, height = 480;
    const double left = 80, right = 740, top = 50, bottom = 400;

    double min_pos = 0.0, max_v = 0.0, h_min = 0.0, h_max = 0.0;
    for (const SweepSeries& s : series) {
        for (const EvalResult& p : s.points) {
            const double v = p.totals[i];
            if (v > 0.0 && (min_pos == 0.0 || v < min_pos)) min_pos = v;
            max_v = std::max(max_v, v);
            h_max = std::max(h_max, p.hours);
        }
    }
    if (min_pos == 0.0) min_pos = 1.0;
    if (max_v <= 0.0) max_v = 1.0;
    const double lo = std::floor(std::log10(min_pos));
    const double hi = std::ceil(std::log10(max_v));
    const double decades = std::max(1.0, hi - lo);
    h_min = 0.0;
    if (h_max <= 0.0) h_max = 1.0;

    auto x_of = [&](double h) { return left + (right - left) * (h - h_min) / (h_max - h_min); };
    auto y_of = [&](double v) {
        const double lv = std::log10(std::max(v, min_pos * 1e-3));
        return bottom - (bottom - top) * (lv - lo) / decades;
    };

    SvgBuilder svg(width, height);
    svg.text(left, 28, std::string("Lifecycle total vs usage hours, ") +
                           std::string(indicator_id(indicator)) + " (" +
                           std::string(indicator_unit(indicator)) + ", log scale)", 15);
    svg.line(left, top, left, bottom, "#333333");
    svg.line(left, bottom, right, bottom, "#333333");
    for (double d = lo; d <= hi; d += 1.0) {
        const double y = y_of(std::pow(10.0, d));
        svg.line(left - 4, y, left, y, "#333333");
        svg.line(left, y, right, y, "#eeeeee");
        svg.text(left - 8, y + 4, "1e" + format_number(d), 11, "end");
    }
    for (int t = 0; t <= 5; ++t) {
        const double h = h_min + (h_max - h_min) * t / 5.0;
        const double x = x_of(h);
        svg.line(x, bottom, x, bottom + 4, "#333333");
        svg.text(x, bottom + 18, format_number(h), 11, "middle");
    }
    svg.text((left + right) / 2.0, bottom + 36, "usage hours", 12, "middle");

    for (std::size_t si = 0; si < series.size(); ++si) {
        const std::string color = kSeriesColors[si % 8];
        std::vector<std::pair<double, double>> pts;
        for (const EvalResult& p : series[si].points) {
            if (p.totals[i] <= 0.0) continue;
            pts.push_back({x_of(p.hours), y_of(p.totals[i])});
        }
        svg.polyline(pts, color);
        for (const auto& [x, y] : pts) svg.circle(x, y, 3.0, color);
        svg.rect(left + 10 + 110.0 * static_cast<double>(si), height - 36, 12, 12, color);
        svg.text(left + 26 + 110.0 * static_cast<double>(si), height - 26, series[si].scenario,
                 11);
    }
    return svg.finish();
}

}  // namespace qlca
