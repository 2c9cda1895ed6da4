#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace fellrep {

// Outcome of one named check.  For aggregated checks (max over many pairs)
// residual/tolerance/witness describe the worst instance, so the invariant
// passed == (residual <= tolerance) holds verbatim.
struct CheckResult {
  std::string name;
  bool passed = true;
  double residual = 0.0;
  double tolerance = 0.0;
  std::string witness;  // always set when passed is false
};

struct Report {
  std::vector<CheckResult> checks;

  void add(CheckResult r) { checks.push_back(std::move(r)); }

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }

  int failed_count() const {
    int n = 0;
    for (const auto& c : checks)
      if (!c.passed) ++n;
    return n;
  }

  double max_residual() const {
    double r = 0.0;
    for (const auto& c : checks) r = std::max(r, c.residual);
    return r;
  }
};

// Accumulates many (residual, tolerance, witness) instances into one
// CheckResult, keeping the instance with the worst margin residual - tol.
class WorstCase {
public:
  explicit WorstCase(std::string name) : name_(std::move(name)) {}

  void observe(double residual, double tolerance, const std::string& witness) {
    any_ = true;
    if (residual > tolerance) all_passed_ = false;
    double margin = residual - tolerance;
    if (margin > worst_margin_) {
      worst_margin_ = margin;
      worst_residual_ = residual;
      worst_tolerance_ = tolerance;
      worst_witness_ = witness;
    }
  }

  bool any() const { return any_; }

  CheckResult result() const {
    CheckResult r;
    r.name = name_;
    r.passed = all_passed_;
    r.residual = any_ ? worst_residual_ : 0.0;
    r.tolerance = any_ ? worst_tolerance_ : 0.0;
    r.witness = worst_witness_;
    return r;
  }

private:
  std::string name_;
  bool any_ = false;
  bool all_passed_ = true;
  double worst_margin_ = -1e300;
  double worst_residual_ = 0.0;
  double worst_tolerance_ = 0.0;
  std::string worst_witness_;
};

}  // namespace fellrep
