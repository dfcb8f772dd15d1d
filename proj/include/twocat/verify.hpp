#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace twocat {

enum class CheckSource { closed_form, oracle, worked_example };

std::string to_string(CheckSource s);

struct Check {
  std::string id;
  std::vector<std::pair<std::string, std::string>> params;
  CheckSource source = CheckSource::oracle;
  bool pass = false;
  std::string value;           // what was computed
  std::string counterexample;  // set on failure
};

struct VerificationSuite {
  std::string name;
  int criterion = 0;
  std::string title;
  std::vector<Check> checks;
  double seconds = 0;

  std::size_t passed() const;
  bool ok() const { return !checks.empty() && passed() == checks.size(); }
};

struct SuiteOptions {
  std::optional<int> n;  // A_n suites: only this n instead of 1..n_max
  int n_max = 6;
  int principal_max = 5;
  int tree_max = 5;
  int kmax = 8;
  int corpus = 50;  // vectors per (k, d)
  int pairs = 20;
};

// Suite names in acceptance order; suite i + 1 covers criterion i + 1.
const std::vector<std::string>& suite_names();

// Throws std::invalid_argument for an unknown name.
VerificationSuite run_suite(const std::string& name, const SuiteOptions& opts = {});

std::vector<VerificationSuite> verify_all(const SuiteOptions& opts = {});

}  // namespace twocat
