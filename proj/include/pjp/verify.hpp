#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pjp/rational.hpp"

namespace pjp {

inline constexpr std::uint64_t kVerifySeed = 0x70a1b0c7d15ea5edULL;

// {1/2, 1, 2, 5/3} and two seeded random rationals in (0,3]
std::vector<Rational> default_kset(std::uint64_t seed = kVerifySeed);

struct VerifyOptions {
  std::vector<Rational> kset = default_kset();
  int box = 6;   // |fundamental coordinates| bound for label boxes
  int jobs = 1;  // worker threads; results are ordered by case index regardless
};

struct CaseResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CriterionReport {
  int id = 0;
  std::string title;
  std::vector<CaseResult> cases;
  double seconds = 0;

  bool pass() const;
  // first failing case details, or a short count
  std::string summary() const;
};

inline constexpr int kNumCriteria = 11;

std::string criterion_title(int id);

// "all", a named group (steinberg, epoly, jacobi, operators, vectorize, mvop)
// or a comma list of criterion numbers. Throws InvalidInput.
std::vector<int> suite_criteria(const std::string& suite);

CriterionReport run_criterion(int id, const VerifyOptions& opts);
std::vector<CriterionReport> run_suite(const std::vector<int>& ids, const VerifyOptions& opts);

// Runs tasks on up to `jobs` threads; result i belongs to task i.
std::vector<CaseResult> run_cases(const std::vector<std::function<CaseResult()>>& tasks, int jobs);

}  // namespace pjp
