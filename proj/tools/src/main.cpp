#include "hyperlab/cli/task.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <thread>

using namespace hyperlab::cli;

namespace {

int usage_failure(const std::string& message) {
  std::cerr << "usage error: " << message << "\n"
            << "parameter schema:\n"
            << parameter_schema().dump(2) << "\n";
  return exit_code(Status::error);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperlab: constructions and exhaustive checks for hyperfields and finite projective geometry"};
  app.set_version_flag("--version", std::string(tool_version()));

  std::vector<std::string> tokens;
  std::string spec_file;
  bool compact = false;
  bool timings = false;
  bool schema = false;
  unsigned jobs = 1;
  std::optional<std::uint64_t> seed;

  app.add_option("task", tokens, "command followed by key=value parameters");
  app.add_option("--spec", spec_file, "flat key=value spec file")->check(CLI::ExistingFile);
  app.add_flag("--json", compact, "compact single-line JSON");
  app.add_option("--jobs", jobs, "worker threads (0 = hardware concurrency)");
  app.add_option("--seed", seed, "seed for randomized cross-checks");
  app.add_flag("--timings", timings, "add wall-clock timings (disables the cache)");
  app.add_flag("--schema", schema, "print the parameter schema and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return usage_failure(e.what());
  }

  if (schema) {
    std::cout << parameter_schema().dump(2) << "\n";
    return 0;
  }

  TaskSpec task;
  try {
    RawTask raw;
    if (!spec_file.empty()) raw = read_spec_file(spec_file);
    raw = merge(std::move(raw), parse_arguments(tokens));
    if (seed) raw.seed = seed;
    task = validate(raw);
  } catch (const UsageError& e) {
    return usage_failure(e.what());
  }

  RunOptions options;
  options.jobs = jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : jobs;
  options.timings = timings;

  try {
    const auto report = run_cached(task, options, ReportCache::from_environment(), std::cerr);
    std::cout << (compact ? canonical_bytes(report) : pretty_bytes(report));
    return exit_code(report_status(report));
  } catch (const UsageError& e) {
    return usage_failure(e.what());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return exit_code(Status::error);
  }
}
