#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "cesaro/config.hpp"
#include "cesaro/operator.hpp"
#include "cesaro/report.hpp"

namespace cesaro {

// Carleson exponent s and log exponent beta a statement asks of the measure.
struct Requirement {
  double s = 0.0;
  double beta = 0.0;
};

enum class Standing { satisfies, below, gap };
const char* to_string(Standing s);

Requirement required_exponent(const ScenarioConfig& c);
// Compares the measure's nominal exponent with the requirement; below means
// s < required - margin, or equal s with at least one log power missing.
Standing standing(const RadialMeasure& m, Requirement req, double margin);

// f(a z): coefficients times a^k, envelope ratio times a.
PowerSeries dilate(const PowerSeries& f, double a);

// Operator instances shared between scenarios so moments are computed once per
// measure. Moments do not depend on which scenario grew the cache.
class OperatorPool {
 public:
  explicit OperatorPool(unsigned threads = 1) : threads_(threads) {}
  const OperatorInstance& get(const RadialMeasure& m);

 private:
  unsigned threads_;
  std::mutex mutex_;
  std::map<std::string, std::unique_ptr<OperatorInstance>> ops_;
};

// Errors inside a statistic are captured on its rows; only an invalid config
// throws.
ExperimentReport run_scenario(const ScenarioConfig& c, unsigned threads = 1, OperatorPool* pool = nullptr);

std::vector<ScenarioConfig> verify_suite();
std::vector<ExperimentReport> run_suite(const std::vector<ScenarioConfig>& configs, unsigned threads = 1);

}  // namespace cesaro
