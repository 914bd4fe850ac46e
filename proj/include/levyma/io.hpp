#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "levyma/bench.hpp"
#include "levyma/estimate.hpp"
#include "levyma/simulate.hpp"
#include "levyma/spectral.hpp"
#include "levyma/weights.hpp"

namespace levyma {

/// Shortest decimal form that round-trips the double exactly.
std::string format_double(double v);

void write_path_csv(const std::string& file, const SamplePath& path);
/// Reads a `t,z` CSV; validates a strictly increasing uniform time grid.
/// Returns times and values.
std::pair<std::vector<double>, std::vector<double>> read_path_csv(const std::string& file);

void write_jumps_csv(const std::string& file, const SamplePath& path);
void write_psi_csv(const std::string& file, const PsiEstimate& psi);
void write_density_csv(const std::string& file, const DensityEstimate& density);
void write_weights_csv(const std::string& file, const WeightFamily& family,
                       std::size_t points = 1001);

void write_report_csv(const std::string& file, const McReport& report);
/// Whitespace-separated columns for gnuplot candlesticks:
/// n  q0  q1  q2  q3  q4, one block per (parameter, alpha).
void write_report_gnuplot(const std::string& file, const McReport& report);
nlohmann::json un_tables_json(const McReport& report);

nlohmann::json triplet_to_json(const LevyTriplet& t);
LevyTriplet triplet_from_json(const nlohmann::json& j);

nlohmann::json estimation_to_json(const EstimationResult& r);

void write_text_file(const std::string& file, const std::string& content);

}  // namespace levyma
