#pragma once

#include "hyperlab/axiom_report.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <thread>
#include <vector>

namespace hyperlab::detail {

/// First witness and total count for one axiom within a scanned range.
struct Finding {
  std::vector<std::uint32_t> witness;
  std::string detail;
  std::uint64_t count = 0;
};

using Findings = std::map<std::string, Finding>;

template <class DetailFn>
void note(Findings& f, const std::string& axiom, std::vector<std::uint32_t> witness, DetailFn&& detail) {
  auto& entry = f[axiom];
  if (entry.count++ == 0) {
    entry.witness = std::move(witness);
    entry.detail = detail();
  }
}

/// Runs fn(begin, end, findings) over [0, n) split into contiguous chunks.
/// Chunks are merged in range order, so the surviving witness for each axiom
/// is the one a sequential scan would have found first.
template <class Fn>
Findings scan_ranges(std::size_t n, unsigned jobs, Fn&& fn) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  std::vector<Findings> parts(jobs);
  auto bounds = [&](unsigned k) { return n * k / jobs; };
  if (jobs == 1) {
    fn(std::size_t{0}, n, parts[0]);
  } else {
    std::vector<std::jthread> workers;
    for (unsigned k = 0; k < jobs; ++k)
      workers.emplace_back([&, k] { fn(bounds(k), bounds(k + 1), parts[k]); });
  }
  Findings merged;
  for (auto& part : parts)
    for (auto& [axiom, finding] : part) {
      auto& m = merged[axiom];
      if (m.count == 0) {
        m.witness = std::move(finding.witness);
        m.detail = std::move(finding.detail);
      }
      m.count += finding.count;
    }
  return merged;
}

inline void emit(AxiomReport& report, const Findings& findings, const std::vector<std::string>& order) {
  for (const auto& axiom : order) {
    report.checked.push_back(axiom);
    auto it = findings.find(axiom);
    if (it != findings.end() && it->second.count > 0)
      report.record(axiom, it->second.witness, it->second.detail, it->second.count);
  }
}

}  // namespace hyperlab::detail
