#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hyperlab {

struct Violation {
  std::string axiom;
  /// Smallest violating tuple in lexicographic order of carrier indices.
  std::vector<std::uint32_t> witness;
  std::string detail;

  bool operator==(const Violation&) const = default;
};

/// Result of an exhaustive axiom check. Every axiom in `checked` is tested
/// over its whole domain; each failing axiom contributes one minimal witness
/// and a violation count, so reports are deterministic.
struct AxiomReport {
  std::vector<std::string> checked;
  std::vector<Violation> violations;
  std::map<std::string, std::uint64_t> violation_counts;
  /// Derived properties reported alongside the axioms (e.g. reproductivity).
  std::map<std::string, bool> properties;
  /// Search statistics such as configurations examined.
  std::map<std::string, std::uint64_t> counters;

  bool passed() const { return violations.empty(); }
  bool passed(const std::string& axiom) const { return !violation_counts.contains(axiom); }

  void record(std::string axiom, std::vector<std::uint32_t> witness, std::string detail, std::uint64_t count = 1) {
    if (count == 0) return;
    violation_counts[axiom] += count;
    violations.push_back({std::move(axiom), std::move(witness), std::move(detail)});
  }

  /// Appends another report's findings with every axiom name prefixed.
  void absorb(const AxiomReport& other, const std::string& prefix) {
    for (const auto& v : other.violations) violations.push_back({prefix + v.axiom, v.witness, v.detail});
    for (const auto& [axiom, count] : other.violation_counts) violation_counts[prefix + axiom] += count;
    for (const auto& c : other.checked) checked.push_back(prefix + c);
    for (const auto& [k, v] : other.properties) properties[prefix + k] = v;
  }
};

}  // namespace hyperlab
