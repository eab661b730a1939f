#pragma once

#include <cstddef>
#include <json.hpp>
#include <optional>
#include <string>

#include "cesaro/measure.hpp"
#include "cesaro/series.hpp"
#include "cesaro/spaces.hpp"

namespace cesaro {

using json = nlohmann::json;

enum class Theorem { T1_1, T1_2, T1_3, T1_4, T1_5, C3_3, C3_5, C3_6, C3_8, C3_9, C3_10, R3_4, R3_7 };
enum class Direction { necessity, sufficiency, both };
// automatic derives the expected verdict from the measure's exponent.
enum class Expectation { automatic, bounded, growing, none };

const char* to_string(Theorem t);
const char* to_string(Direction d);
const char* to_string(Expectation e);

struct SpaceParams {
  std::optional<double> p, q, lambda, lambda1, lambda2, alpha;
};

struct Tolerances {
  double exponent_margin = 0.1;  // "deliberately below" means s < required - margin
};

inline constexpr std::size_t kDefaultFamilyCap = std::size_t{1} << 17;
inline constexpr int kDefaultScenarioDepth = 20;

struct ScenarioConfig {
  std::string name;
  Theorem theorem = Theorem::T1_1;
  int part = 1;  // T1_2 only
  Direction direction = Direction::both;
  SpaceParams params;
  RadialMeasure measure = RadialMeasure::lebesgue();
  std::size_t truncation = kDefaultTruncation;  // sequence statistics run to n = truncation
  std::size_t max_truncation = kDefaultFamilyCap;  // cap for the a-family truncations
  int depth = kDefaultScenarioDepth;  // a_j = 1 - 2^(-j/2), j = 1..depth
  Tolerances tolerances;
  Expectation expect = Expectation::automatic;
};

// All parsers reject unknown fields with ConfigError.
RadialMeasure measure_from_json(const json& j);
json measure_to_json(const RadialMeasure& m);
TestFunctionKind function_from_json(const json& j);
json function_to_json(const TestFunctionKind& k);
SpaceSpec space_from_json(const json& j);
json space_to_json(const SpaceSpec& s);

// Parses and validates against the theorem's hypotheses.
ScenarioConfig scenario_from_json(const json& j);
json scenario_to_json(const ScenarioConfig& c);
void validate(const ScenarioConfig& c);

// Number or one of "inf", "-inf", "nan".
double number_from_json(const json& j, const std::string& what);
json number_to_json(double v);

json read_json_file(const std::string& path);

}  // namespace cesaro
