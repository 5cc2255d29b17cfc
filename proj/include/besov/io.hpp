#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "besov/coef_field.hpp"
#include "besov/experiment.hpp"
#include "besov/planner.hpp"
#include "besov/solver.hpp"
#include "besov/synthesis.hpp"

namespace besov {

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csvField(const std::string& text);

// CoefField CSV: header `level,position,value`, one row per coefficient.
std::string coefFieldCsv(const CoefField& u);
/// maxLevel defaults to the largest level present; absent indices are zero.
CoefField parseCoefFieldCsv(std::istream& in, std::optional<int> maxLevel = std::nullopt);
CoefField readCoefFieldCsv(const std::filesystem::path& path,
                           std::optional<int> maxLevel = std::nullopt);
void writeCoefFieldCsv(const std::filesystem::path& path, const CoefField& u);

/// Writes <prefix>_clean.csv, <prefix>_noisy.csv and the sidecar <prefix>_noise.json {delta, seed}.
void writeNoisyData(const std::filesystem::path& prefix, const NoisyData& data);
NoisyData readNoisyData(const std::filesystem::path& prefix);

/**
 * A signature read from JSON. Every numeric field may be a JSON integer, a
 * JSON float, or a string such as "3/2" or "0.001". When no field is a JSON
 * float the exact form is available and the planner runs in rational
 * arithmetic.
 */
struct ParsedSignature {
  ProblemSignature numeric;
  std::optional<ExactSignature> exact;
};

ParsedSignature parseSignature(const nlohmann::json& j);
nlohmann::json toJson(const ProblemSignature& sig);

template <class Num>
nlohmann::json planToJson(const BasicPlan<Num>& plan);
extern template nlohmann::json planToJson(const BasicPlan<double>&);
extern template nlohmann::json planToJson(const BasicPlan<Rational>&);

template <class Num>
std::string planTable(const std::vector<BasicPlan<Num>>& plans);
extern template std::string planTable(const std::vector<BasicPlan<double>>&);
extern template std::string planTable(const std::vector<BasicPlan<Rational>>&);

ExperimentConfig parseExperimentConfig(const nlohmann::json& j);
nlohmann::json toJson(const RateReport& report);
/// CSV with header delta,alpha,error_h_sigma,error_b_r; shortest round-trip formatting.
std::string rateReportCsv(const RateReport& report);

nlohmann::json toJson(const SolveReport& report);

/// Parses JSON text; syntax errors become ValidationError with line and column.
nlohmann::json parseJsonText(const std::string& text, const std::string& source);
nlohmann::json readJsonFile(const std::filesystem::path& path);
std::string readTextFile(const std::filesystem::path& path);
void writeTextFile(const std::filesystem::path& path, const std::string& text);

}  // namespace besov
