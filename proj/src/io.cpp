#include "besov/io.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <vector>

#include "besov/errors.hpp"

namespace besov {

using nlohmann::json;

std::string csvField(const std::string& text) {
  if (text.find_first_of(",\"\n\r") == std::string::npos) {
    return text;
  }
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string coefFieldCsv(const CoefField& u) {
  std::string out = "level,position,value\n";
  for (int j = 0; j <= u.maxLevel(); ++j) {
    const auto values = u.level(j);
    for (std::size_t k = 0; k < values.size(); ++k) {
      out += std::to_string(j);
      out += ',';
      out += std::to_string(k);
      out += ',';
      out += formatDouble(values[k]);
      out += '\n';
    }
  }
  return out;
}

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> splitComma(const std::string& line) {
  std::vector<std::string> fields;
  std::string current;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(trim(current));
      current.clear();
    } else {
      current += c;
    }
  }
  fields.push_back(trim(current));
  return fields;
}

template <class T>
T parseField(const std::string& text, std::size_t lineNo, const char* name) {
  T value{};
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto result = std::from_chars(begin, end, value);
  if (text.empty() || result.ec != std::errc() || result.ptr != end) {
    throw ValidationError("CSV line " + std::to_string(lineNo) + ": field '" + name +
                          "' is not a valid number: '" + text + "'");
  }
  return value;
}

}  // namespace

CoefField parseCoefFieldCsv(std::istream& in, std::optional<int> maxLevel) {
  std::string line;
  std::size_t lineNo = 0;
  bool sawHeader = false;
  struct Entry {
    DyadicIndex index;
    double value;
    std::size_t line;
  };
  std::vector<Entry> entries;
  while (std::getline(in, line)) {
    ++lineNo;
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (!sawHeader) {
      if (t != "level,position,value") {
        throw ValidationError("CSV line " + std::to_string(lineNo) +
                              ": expected header 'level,position,value'");
      }
      sawHeader = true;
      continue;
    }
    const auto fields = splitComma(t);
    if (fields.size() != 3) {
      throw ValidationError("CSV line " + std::to_string(lineNo) + ": expected 3 fields, got " +
                            std::to_string(fields.size()));
    }
    Entry e{{parseField<int>(fields[0], lineNo, "level"),
             parseField<std::int64_t>(fields[1], lineNo, "position")},
            parseField<double>(fields[2], lineNo, "value"),
            lineNo};
    if (e.index.level < 0 || e.index.level > CoefField::kMaxSupportedLevel || e.index.position < 0 ||
        static_cast<std::size_t>(e.index.position) >= CoefField::levelSize(e.index.level)) {
      throw ValidationError("CSV line " + std::to_string(lineNo) +
                            ": field 'position' out of range for its level");
    }
    if (!std::isfinite(e.value)) {
      throw ValidationError("CSV line " + std::to_string(lineNo) + ": field 'value' is not finite");
    }
    entries.push_back(e);
  }
  if (!sawHeader) {
    throw ValidationError("CSV input is empty; expected header 'level,position,value'");
  }
  int J = 0;
  for (const Entry& e : entries) J = std::max(J, e.index.level);
  if (maxLevel) {
    if (*maxLevel < J) {
      throw ValidationError("CSV contains level " + std::to_string(J) + " above maxLevel " +
                            std::to_string(*maxLevel));
    }
    J = *maxLevel;
  }
  CoefField u(J);
  std::vector<bool> seen(u.size(), false);
  for (const Entry& e : entries) {
    const std::size_t flat =
        CoefField::levelOffset(e.index.level) + static_cast<std::size_t>(e.index.position);
    if (seen[flat]) {
      throw ValidationError("CSV line " + std::to_string(e.line) + ": duplicate index (" +
                            std::to_string(e.index.level) + ", " +
                            std::to_string(e.index.position) + ")");
    }
    seen[flat] = true;
    u.set(e.index, e.value);
  }
  return u;
}

CoefField readCoefFieldCsv(const std::filesystem::path& path, std::optional<int> maxLevel) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("cannot open " + path.string());
  }
  try {
    return parseCoefFieldCsv(in, maxLevel);
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

void writeCoefFieldCsv(const std::filesystem::path& path, const CoefField& u) {
  writeTextFile(path, coefFieldCsv(u));
}

namespace {

std::filesystem::path withSuffix(const std::filesystem::path& prefix, const std::string& suffix) {
  return prefix.parent_path() / (prefix.filename().string() + suffix);
}

}  // namespace

void writeNoisyData(const std::filesystem::path& prefix, const NoisyData& data) {
  writeCoefFieldCsv(withSuffix(prefix, "_clean.csv"), data.clean);
  writeCoefFieldCsv(withSuffix(prefix, "_noisy.csv"), data.noisy);
  const json sidecar = {{"delta", data.delta}, {"seed", data.seed}};
  writeTextFile(withSuffix(prefix, "_noise.json"), sidecar.dump(2) + "\n");
}

NoisyData readNoisyData(const std::filesystem::path& prefix) {
  NoisyData data;
  data.clean = readCoefFieldCsv(withSuffix(prefix, "_clean.csv"));
  data.noisy = readCoefFieldCsv(withSuffix(prefix, "_noisy.csv"), data.clean.maxLevel());
  const json sidecar = readJsonFile(withSuffix(prefix, "_noise.json"));
  try {
    data.delta = sidecar.at("delta").get<double>();
    data.seed = sidecar.at("seed").get<std::uint64_t>();
  } catch (const json::exception& e) {
    throw ValidationError("noise sidecar: " + std::string(e.what()));
  }
  return data;
}

namespace {

struct NumberField {
  double value = 0.0;
  std::optional<Rational> exact;
};

NumberField readNumber(const json& parent, const std::string& key, const std::string& path) {
  if (!parent.is_object() || !parent.contains(key)) {
    throw ValidationError("missing field '" + path + "'");
  }
  const json& v = parent.at(key);
  NumberField out;
  if (v.is_number_integer()) {
    out.exact = v.is_number_unsigned() ? Rational(v.get<std::uint64_t>())
                                       : Rational(v.get<std::int64_t>());
    out.value = toDouble(*out.exact);
  } else if (v.is_number_float()) {
    out.value = v.get<double>();
  } else if (v.is_string()) {
    out.exact = parseRational(v.get<std::string>());
    out.value = toDouble(*out.exact);
  } else {
    throw ValidationError("field '" + path + "' must be a number or a rational string");
  }
  if (!std::isfinite(out.value)) {
    throw ValidationError("field '" + path + "' is not finite");
  }
  return out;
}

struct SpaceFields {
  NumberField s, p;
};

SpaceFields readSpace(const json& root, const std::string& key) {
  if (!root.contains(key) || !root.at(key).is_object()) {
    throw ValidationError("missing object '" + key + "' with fields s and p");
  }
  const json& obj = root.at(key);
  return {readNumber(obj, "s", key + ".s"), readNumber(obj, "p", key + ".p")};
}

}  // namespace

ParsedSignature parseSignature(const json& j) {
  if (!j.is_object()) {
    throw ValidationError("signature must be a JSON object");
  }
  int d = 1;
  if (j.contains("dimension")) {
    if (!j.at("dimension").is_number_integer() || j.at("dimension").get<int>() < 1) {
      throw ValidationError("field 'dimension' must be a positive integer");
    }
    d = j.at("dimension").get<int>();
  }
  const SpaceFields D = readSpace(j, "domain");
  const SpaceFields G = readSpace(j, "adjoint_range");
  const SpaceFields S = readSpace(j, "source");
  NumberField eps{1e-3, Rational(1, 1000)};
  if (j.contains("epsilon")) eps = readNumber(j, "epsilon", "epsilon");

  ParsedSignature out;
  out.numeric = {{D.s.value, D.p.value, d},
                 {G.s.value, G.p.value, d},
                 {S.s.value, S.p.value, d},
                 eps.value};
  if (D.s.exact && D.p.exact && G.s.exact && G.p.exact && S.s.exact && S.p.exact && eps.exact) {
    out.exact = ExactSignature{{*D.s.exact, *D.p.exact, d},
                               {*G.s.exact, *G.p.exact, d},
                               {*S.s.exact, *S.p.exact, d},
                               *eps.exact};
  }
  return out;
}

json toJson(const ProblemSignature& sig) {
  auto space = [](const BesovSpace& b) { return json{{"s", b.s}, {"p", b.p}}; };
  return {{"dimension", sig.dimension()},
          {"domain", space(sig.domain)},
          {"adjoint_range", space(sig.adjointRange)},
          {"source", space(sig.source)},
          {"epsilon", sig.epsilon}};
}

template <class Num>
json planToJson(const BasicPlan<Num>& plan) {
  json feasibility = json::array();
  for (const ConstraintCheck& c : plan.feasibility) {
    feasibility.push_back({{"name", c.name}, {"satisfied", c.satisfied}, {"detail", c.detail}});
  }
  json out = {
      {"rule", toString(plan.rule)},
      {"p", toDouble(plan.weakenedP)},
      {"penalty_space",
       {{"s", toDouble(plan.penaltySpace.s)},
        {"p", toDouble(plan.penaltySpace.p)},
        {"d", plan.penaltySpace.d}}},
      {"penalty_power", toDouble(plan.penaltyPower)},
      {"sigma", toDouble(plan.sigma)},
      {"epsilon_tilde", toDouble(plan.epsilonTilde)},
      {"optimal_case", toString(plan.optimalCase)},
      {"rate_space_is_penalty_space", plan.rateSpaceIsPenaltySpace},
      {"exact", is_exact_v<Num>},
      {"feasibility", feasibility},
  };
  if constexpr (is_exact_v<Num>) {
    out["exact_values"] = {{"p", formatRational(plan.weakenedP)},
                           {"s_R", formatRational(plan.penaltySpace.s)},
                           {"p_R", formatRational(plan.penaltyPower)},
                           {"sigma", formatRational(plan.sigma)},
                           {"epsilon_tilde", formatRational(plan.epsilonTilde)}};
  }
  return out;
}

template json planToJson(const BasicPlan<double>&);
template json planToJson(const BasicPlan<Rational>&);

template <class Num>
std::string planTable(const std::vector<BasicPlan<Num>>& plans) {
  std::ostringstream out;
  auto cell = [](const Num& x) {
    std::string text = formatDouble(toDouble(x));
    if constexpr (is_exact_v<Num>) {
      const std::string exact = formatRational(x);
      if (exact != text) text = exact + " (" + text + ")";
    }
    return text;
  };
  out << std::left << std::setw(10) << "rule" << std::setw(16) << "p" << std::setw(16) << "p_R"
      << std::setw(36) << "s_R" << std::setw(36) << "sigma" << "eps_tilde\n";
  for (const BasicPlan<Num>& plan : plans) {
    out << std::left << std::setw(10) << toString(plan.rule) << std::setw(16)
        << cell(plan.weakenedP) << std::setw(16) << cell(plan.penaltyPower) << std::setw(36)
        << cell(plan.penaltySpace.s) << std::setw(36) << cell(plan.sigma)
        << cell(plan.epsilonTilde) << '\n';
  }
  return out.str();
}

template std::string planTable(const std::vector<BasicPlan<double>>&);
template std::string planTable(const std::vector<BasicPlan<Rational>>&);

ExperimentConfig parseExperimentConfig(const json& j) {
  if (!j.is_object()) {
    throw ValidationError("experiment config must be a JSON object");
  }
  ExperimentConfig config;
  if (!j.contains("signature")) {
    throw ValidationError("missing object 'signature'");
  }
  config.signature = parseSignature(j.at("signature")).numeric;
  try {
    if (j.contains("plan")) {
      const json& plan = j.at("plan");
      std::string rule;
      if (plan.is_string()) {
        rule = plan.get<std::string>();
      } else if (plan.is_object()) {
        rule = plan.at("rule").get<std::string>();
        if (rule == "weakened") config.plan.weakenedP = readNumber(plan, "p", "plan.p").value;
      } else {
        throw ValidationError("field 'plan' must be a string or an object");
      }
      if (rule == "direct") {
        config.plan.rule = PlanRule::direct;
      } else if (rule == "optimal") {
        config.plan.rule = PlanRule::optimal;
      } else if (rule == "weakened") {
        config.plan.rule = PlanRule::weakened;
        if (!plan.is_object()) throw ValidationError("plan 'weakened' needs a field 'p'");
      } else {
        throw ValidationError("field 'plan': unknown rule '" + rule + "'");
      }
    }
    if (j.contains("eta")) config.eta = readNumber(j, "eta", "eta").value;
    if (j.contains("max_level")) config.maxLevel = j.at("max_level").get<int>();
    if (j.contains("delta_grid")) config.deltaGrid = j.at("delta_grid").get<std::vector<double>>();
    if (j.contains("alpha_constant")) {
      config.alphaConstant = readNumber(j, "alpha_constant", "alpha_constant").value;
    }
    if (j.contains("seed")) config.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("margin")) config.margin = readNumber(j, "margin", "margin").value;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("experiment config: ") + e.what());
  }
  validate(config);
  return config;
}

json toJson(const RateReport& report) {
  json rows = json::array();
  for (const RateRow& row : report.rows) {
    rows.push_back({{"delta", row.delta},
                    {"alpha", row.alpha},
                    {"error_h_sigma", row.errorHSigma},
                    {"error_b_r", row.errorBR}});
  }
  return {{"sigma", report.sigma},
          {"plan", planToJson(report.plan)},
          {"slope", report.fit.slope},
          {"intercept", report.fit.intercept},
          {"r_squared", report.fit.rSquared},
          {"error_b_r_inversions", report.errorBRInversions},
          {"rows", rows}};
}

std::string rateReportCsv(const RateReport& report) {
  std::string out = "delta,alpha,error_h_sigma,error_b_r\n";
  for (const RateRow& row : report.rows) {
    out += formatDouble(row.delta) + ',' + formatDouble(row.alpha) + ',' +
           formatDouble(row.errorHSigma) + ',' + formatDouble(row.errorBR) + '\n';
  }
  return out;
}

json toJson(const SolveReport& report) {
  return {{"objective", report.objective},
          {"residual", report.residual},
          {"iterations", report.iterations},
          {"converged", report.converged}};
}

json parseJsonText(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(source + ": malformed JSON: " + e.what());
  }
}

std::string readTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ValidationError("cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json readJsonFile(const std::filesystem::path& path) {
  return parseJsonText(readTextFile(path), path.string());
}

void writeTextFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ValidationError("cannot write " + path.string());
  }
  out << text;
  if (!out) {
    throw ValidationError("failed writing " + path.string());
  }
}

}  // namespace besov
