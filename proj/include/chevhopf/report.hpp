#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace chevhopf {

struct AxiomResult {
  std::string name;
  bool passed = true;
  std::optional<std::vector<std::size_t>> witness;  // first failing basis indices
  std::string detail;
};

/// Ordered list of named checks. Failures are recorded, never thrown.
class AxiomReport {
 public:
  void add(std::string name, bool passed, std::optional<std::vector<std::size_t>> witness = std::nullopt,
           std::string detail = {}) {
    results_.push_back({std::move(name), passed, std::move(witness), std::move(detail)});
  }

  void append(const AxiomReport& other, const std::string& prefix = {}) {
    for (const auto& r : other.results_) results_.push_back({prefix + r.name, r.passed, r.witness, r.detail});
  }

  bool ok() const {
    for (const auto& r : results_)
      if (!r.passed) return false;
    return true;
  }

  const AxiomResult* find(const std::string& name) const {
    for (const auto& r : results_)
      if (r.name == name) return &r;
    return nullptr;
  }

  bool passed(const std::string& name) const {
    const auto* r = find(name);
    return r != nullptr && r->passed;
  }

  const std::vector<AxiomResult>& results() const noexcept { return results_; }

  std::string summary() const {
    std::ostringstream os;
    for (const auto& r : results_) {
      os << (r.passed ? "PASS " : "FAIL ") << r.name;
      if (r.witness) {
        os << " at (";
        for (std::size_t i = 0; i < r.witness->size(); ++i) os << (i ? "," : "") << (*r.witness)[i];
        os << ")";
      }
      if (!r.detail.empty()) os << " [" << r.detail << "]";
      os << "\n";
    }
    return os.str();
  }

 private:
  std::vector<AxiomResult> results_;
};

}  // namespace chevhopf
