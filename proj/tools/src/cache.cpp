#include "hyperlab/cli/task.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <unistd.h>

namespace hyperlab::cli {

namespace {

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace

std::optional<ReportCache> ReportCache::from_environment() {
  const char* dir = std::getenv("HYPERLAB_CACHE");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return ReportCache(dir);
}

std::string ReportCache::key(const TaskSpec& task) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a(task.to_json().dump() + "\n" + std::string(tool_version()))));
  return buf;
}

std::filesystem::path ReportCache::path_for(const TaskSpec& task) const { return dir_ / (key(task) + ".json"); }

std::optional<json> ReportCache::load(const TaskSpec& task) const {
  std::ifstream in(path_for(task), std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  const auto report = json::parse(buf.str(), nullptr, false);
  if (report.is_discarded() || !report.is_object()) return std::nullopt;
  // The key is a hash, so check the echo as well as the version.
  if (report.value("schema_version", -1) != kSchemaVersion) return std::nullopt;
  if (!report.contains("tool") || report["tool"].value("version", "") != tool_version()) return std::nullopt;
  if (report.value("task", json()) != task.to_json()) return std::nullopt;
  if (!report.contains("status") || !report["status"].is_string()) return std::nullopt;
  try {
    if (report_status(report) == Status::error) return std::nullopt;
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (!report.contains("result") || !report.contains("witnesses") || report.contains("timings")) return std::nullopt;
  if (canonical_bytes(report) != buf.str()) return std::nullopt;
  return report;
}

bool ReportCache::store(const TaskSpec& task, const json& report, std::ostream& warn) const {
  if (report_status(report) == Status::error || report.contains("timings")) return false;
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  const auto target = path_for(task);
  auto tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << canonical_bytes(report);
    out.flush();
    if (!out) {
      warn << "warning: cannot write cache entry in " << dir_.string() << "; continuing without cache\n";
      std::filesystem::remove(tmp, ec);
      return false;
    }
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    warn << "warning: cannot install cache entry " << target.string() << ": " << ec.message() << "\n";
    std::filesystem::remove(tmp, ec);
    return false;
  }
  return true;
}

json run_cached(const TaskSpec& task, const RunOptions& options, const std::optional<ReportCache>& cache,
                std::ostream& warn, bool* hit) {
  if (hit) *hit = false;
  if (!cache || options.timings) return run_task(task, options);
  if (auto stored = cache->load(task)) {
    if (hit) *hit = true;
    return *stored;
  }
  auto report = run_task(task, options);
  cache->store(task, report, warn);
  return report;
}

}  // namespace hyperlab::cli
