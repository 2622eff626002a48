#pragma once

#include "qlca/hpc.hpp"
#include "qlca/scenario.hpp"

#include <string>
#include <vector>

namespace qlca {

/// Decimal formatting used in every report: seven significant digits,
/// correctly rounded, so the published table values print exactly
/// (12629.33, 18312.53, 25258.67, ...).
std::string format_number(double value);

/// format(parse(format(x))) == format(x); used by the round-trip tests.
double parse_number(const std::string& text);

std::string csv_escape(const std::string& field);

/// scenario,phase,indicator,hours,value,unit
std::string phase_impact_csv(const std::vector<std::pair<std::string, EvalResult>>& results);

/// scenario,indicator,phase,hours,value,unit — long form of a sweep set.
std::string sweep_csv(const std::vector<SweepSeries>& series);

/// scenario_x,scenario_y,indicator,status,crossover_hours,unit
std::string crossover_csv(const std::vector<CrossoverEntry>& entries);

/// scenario,component,group,indicator,value,unit,share
std::string contribution_csv(const std::string& scenario, const CompiledScenario& compiled);

/// machine,cell,computed,expected,rel_diff,within_tolerance,informational
std::string crosscheck_csv(const std::vector<CrosscheckRow>& rows);

/// scenario,metric,value,unit
std::string metrics_csv(const std::string& scenario, const std::map<std::string, double>& metrics);

/// scenario_pair,indicator,fixed_phase_ratio,unit
std::string fixed_ratio_csv(const std::map<std::string, ImpactVector>& ratios);

/// Stacked bars (phases) per scenario and grid hour, one chart per indicator.
std::string stacked_bar_chart_svg(const std::vector<SweepSeries>& series, Indicator indicator);

/// Log-scale comparison of lifecycle totals over usage hours.
std::string comparison_line_chart_svg(const std::vector<SweepSeries>& series,
                                      Indicator indicator);

}  // namespace qlca
