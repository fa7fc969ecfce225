#pragma once

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hyperlab::cli {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;
std::string_view tool_version();

/// Malformed command line or spec file. Maps to exit code 2 with the
/// parameter schema printed alongside.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Status { pass, fail, inconclusive, error };

std::string_view to_string(Status s);
Status status_from_string(std::string_view s);
int exit_code(Status s);

/// A validated task. Parameters are stored normalized and typed (numbers,
/// integer arrays, rational strings), so equal tasks serialize identically.
struct TaskSpec {
  std::string command;
  json parameters = json::object();
  std::uint64_t seed = 0;

  json to_json() const;
};

/// Raw key/value input before validation.
struct RawTask {
  std::string command;
  std::map<std::string, std::string> parameters;
  std::optional<std::uint64_t> seed;
};

/// Parses `key=value` tokens. The first token without '=' is the command.
RawTask parse_arguments(const std::vector<std::string>& tokens);

/// Flat spec file: one or more `key=value` tokens per line, `#` comments,
/// and `space q=<q> n=<n> [modulus=<c0,c1,...>]` lines.
RawTask parse_spec_text(std::string_view text);
RawTask read_spec_file(const std::filesystem::path& path);

/// Later entries win.
RawTask merge(RawTask base, const RawTask& overrides);

/// Checks the command and its parameters against the schema.
TaskSpec validate(const RawTask& raw);

/// Parameter schema for every command.
json parameter_schema();

struct RunOptions {
  unsigned jobs = 1;
  bool timings = false;
};

/// Runs the task and returns the full report. Library errors become a
/// report with status "error"; usage problems throw UsageError.
json run_task(const TaskSpec& task, const RunOptions& options = {});

Status report_status(const json& report);

/// Compact canonical form (sorted keys, no whitespace) plus newline.
std::string canonical_bytes(const json& report);
/// Indented form with sorted keys plus newline.
std::string pretty_bytes(const json& report);

/// Content-addressed report cache. Failures to read or write are reported
/// through `warn` and never abort the run.
class ReportCache {
 public:
  explicit ReportCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  /// From $HYPERLAB_CACHE, or nothing when unset or empty.
  static std::optional<ReportCache> from_environment();

  /// FNV-1a of the canonical task serialization and the tool version.
  static std::string key(const TaskSpec& task);

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(const TaskSpec& task) const;

  /// A stored report whose task echo and version match; corrupted or stale
  /// entries yield nothing.
  std::optional<json> load(const TaskSpec& task) const;
  /// Writes to a temporary file and renames it into place. Error reports are
  /// never stored. Returns false (after warning) when the write fails.
  bool store(const TaskSpec& task, const json& report, std::ostream& warn) const;

 private:
  std::filesystem::path dir_;
};

/// Cached run: serves a verified hit, otherwise computes and stores.
/// Timed runs bypass the cache because timings are not reproducible.
json run_cached(const TaskSpec& task, const RunOptions& options, const std::optional<ReportCache>& cache,
                std::ostream& warn, bool* hit = nullptr);

}  // namespace hyperlab::cli
