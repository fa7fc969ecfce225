#include "hyperlab/cli/task.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace hyperlab::cli;

namespace {

TaskSpec task_of(std::vector<std::string> tokens) { return validate(parse_arguments(tokens)); }

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("hyperlab-cli-test-" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("exit codes partition the statuses") {
  CHECK(exit_code(Status::pass) == 0);
  CHECK(exit_code(Status::fail) == 1);
  CHECK(exit_code(Status::error) == 2);
  CHECK(exit_code(Status::inconclusive) == 3);
  for (auto s : {Status::pass, Status::fail, Status::inconclusive, Status::error})
    CHECK(status_from_string(to_string(s)) == s);
}

TEST_CASE("parameters are validated and normalized") {
  const auto t = task_of({"check-axioms", "q=03", "n= 2"});
  CHECK(t.command == "check-axioms");
  CHECK(t.parameters == json{{"n", 2}, {"q", 3}});

  const auto k = task_of({"krasner", "p=5", "f=[-10/2, 0, 1]", "g=−30,0,1"});
  CHECK(k.parameters["f"] == json{"-5", "0", "1"});
  CHECK(k.parameters["g"] == json{"-30", "0", "1"});

  CHECK(task_of({"fraction-check", "q=3"}).parameters["cap"] == 2);
  CHECK(task_of({"kdim", "q=3", "n=1", "seed=9"}).seed == 9);

  CHECK_THROWS_AS(task_of({}), UsageError);
  CHECK_THROWS_AS(task_of({"nope"}), UsageError);
  CHECK_THROWS_AS(task_of({"check-axioms", "q=3"}), UsageError);
  CHECK_THROWS_AS(task_of({"check-axioms", "q=3", "n=0"}), UsageError);
  CHECK_THROWS_AS(task_of({"check-axioms", "q=-3", "n=1"}), UsageError);
  CHECK_THROWS_AS(task_of({"check-axioms", "q=3", "n=1", "extra=1"}), UsageError);
  CHECK_THROWS_AS(task_of({"check-axioms", "check-axioms", "q=3", "n=1"}), UsageError);
  CHECK_THROWS_AS(task_of({"factor-hyperfield", "q=9"}), UsageError);
  CHECK_THROWS_AS(task_of({"factor-hyperfield", "q=9", "order=2", "subfield=3"}), UsageError);
  CHECK_THROWS_AS(task_of({"krasner", "p=5", "f=[1,x]", "g=1"}), UsageError);
  CHECK_THROWS_AS(task_of({"krasner", "p=5", "f=[1,2", "g=1"}), UsageError);
}

TEST_CASE("spec files") {
  const auto raw = parse_spec_text("# comment\ncommand=desargues  # trailing\nspace q=4 n=2 modulus=1,1,1\nseed=5\n");
  const auto t = validate(raw);
  CHECK(t.command == "desargues");
  CHECK(t.seed == 5);
  CHECK(t.parameters == json{{"modulus", {1, 1, 1}}, {"n", 2}, {"q", 4}});
  const auto merged = validate(merge(raw, parse_arguments({"n=3"})));
  CHECK(merged.parameters["n"] == 3);
  CHECK_THROWS_AS(parse_spec_text("desargues\n"), UsageError);
  CHECK_THROWS_AS(read_spec_file("/nonexistent/spec"), UsageError);
}

TEST_CASE("schema lists every command") {
  const auto s = parameter_schema();
  for (const auto* c : {"factor-hyperfield", "check-axioms", "projective-hypergroup", "desargues", "collineations",
                        "incidence-group", "kdim", "krasner", "quad-extensions", "fraction-check"})
    CHECK(s["commands"].contains(c));
}

TEST_CASE("reports") {
  const auto pass = run_task(task_of({"check-axioms", "q=3", "n=1"}));
  CHECK(report_status(pass) == Status::pass);
  CHECK(pass["tool"]["version"] == std::string(tool_version()));
  CHECK(pass["task"] == task_of({"check-axioms", "q=3", "n=1"}).to_json());
  CHECK(canonical_bytes(pass) == canonical_bytes(run_task(task_of({"check-axioms", "q=3", "n=1"}))));
  CHECK(canonical_bytes(pass).find('\n') == canonical_bytes(pass).size() - 1);

  const auto err = run_task(task_of({"check-axioms", "q=2", "n=1"}));
  CHECK(report_status(err) == Status::error);
  CHECK(err["error"]["code"] == "excluded-field");

  const auto bad_mod = run_task(task_of({"check-axioms", "q=9", "n=1", "modulus=2,0,1"}));
  CHECK(report_status(bad_mod) == Status::error);
  CHECK(report_status(run_task(task_of({"check-axioms", "q=9", "n=1", "modulus=2,2,1"}))) == Status::pass);
  CHECK(report_status(run_task(task_of({"check-axioms", "q=9", "n=1", "modulus=1,1"}))) == Status::error);

  const auto timed = run_task(task_of({"quad-extensions", "p=3"}), {1, true});
  CHECK(timed.contains("timings"));
  CHECK(timed["result"]["count"] == 3);

  // Parallel scans merge in order, so the job count does not show up.
  const auto t = task_of({"desargues", "q=3", "n=2"});
  CHECK(canonical_bytes(run_task(t, {1, false})) == canonical_bytes(run_task(t, {3, false})));
}

TEST_CASE("cache keys and entries") {
  const auto a = task_of({"kdim", "q=3", "n=1"});
  const auto b = task_of({"kdim", "q=3", "n=1", "seed=1"});
  CHECK(ReportCache::key(a) == ReportCache::key(task_of({"kdim", "n=1", "q=3", "orders=20"})));
  CHECK(ReportCache::key(a) != ReportCache::key(b));
  CHECK(ReportCache::key(a).size() == 16);

  TempDir dir;
  const ReportCache cache(dir.path / "nested");
  std::ostringstream warn;
  bool hit = true;
  const auto first = run_cached(a, {}, cache, warn, &hit);
  CHECK_FALSE(hit);
  const auto second = run_cached(a, {}, cache, warn, &hit);
  CHECK(hit);
  CHECK(canonical_bytes(first) == canonical_bytes(second));
  CHECK(warn.str().empty());

  // A stale version or a different task under the same file is rejected.
  auto forged = first;
  forged["tool"]["version"] = "0.0.0";
  std::ofstream(cache.path_for(a), std::ios::trunc) << canonical_bytes(forged);
  CHECK_FALSE(cache.load(a).has_value());
  forged = first;
  forged["task"]["seed"] = 7;
  std::ofstream(cache.path_for(a), std::ios::trunc) << canonical_bytes(forged);
  CHECK_FALSE(cache.load(a).has_value());
  std::ofstream(cache.path_for(a), std::ios::trunc) << "garbage";
  CHECK_FALSE(cache.load(a).has_value());
  run_cached(a, {}, cache, warn, &hit);
  CHECK_FALSE(hit);
  CHECK(cache.load(a).has_value());

  const auto e = task_of({"check-axioms", "q=2", "n=1"});
  run_cached(e, {}, cache, warn, &hit);
  CHECK_FALSE(std::filesystem::exists(cache.path_for(e)));

  std::ofstream(dir.path / "file") << "x";
  const ReportCache broken(dir.path / "file");
  std::ostringstream w2;
  CHECK(report_status(run_cached(a, {}, broken, w2)) == Status::pass);
  CHECK(w2.str().find("warning") != std::string::npos);
}
