#include "hyperlab/cli/task.hpp"

#include "hyperlab/rational.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace hyperlab::cli {

namespace {

struct Param {
  std::string name;
  std::string type;  // uint, uint_list, rational_list
  bool required = false;
  std::optional<json> fallback;
  std::uint64_t min = 0;
  std::string help;
};

struct Command {
  Command(std::string n, std::string h, std::vector<Param> p, std::vector<std::string> ex = {}, bool one = false)
      : name(std::move(n)), help(std::move(h)), params(std::move(p)), exclusive(std::move(ex)), one_required(one) {}

  std::string name;
  std::string help;
  std::vector<Param> params;
  /// At most one of these may be given; with `one_required`, exactly one.
  std::vector<std::string> exclusive;
  bool one_required = false;
};

std::vector<Param> space_params() {
  return {
      {"q", "uint", true, std::nullopt, 2, "order of the coordinate field"},
      {"n", "uint", true, std::nullopt, 1, "projective dimension"},
      {"modulus", "uint_list", false, std::nullopt, 0,
       "defining polynomial of F_q over F_p, coefficients low to high (prime powers only)"},
  };
}

const std::vector<Command>& commands() {
  static const std::vector<Command> table = [] {
    std::vector<Command> c;
    c.push_back({"factor-hyperfield",
                 "build A_T for A = F_q and check the hyperfield axioms",
                 {{"q", "uint", true, std::nullopt, 2, "field order"},
                  {"generators", "uint_list", false, std::nullopt, 1, "field element indices generating T"},
                  {"order", "uint", false, std::nullopt, 1, "order of the cyclic subgroup T"},
                  {"subfield", "uint", false, std::nullopt, 2, "T = units of the subfield of this order"}},
                 {"generators", "order", "subfield"},
                 true});
    c.push_back({"check-axioms", "exhaustive canonical hypergroup and projective axioms on H(P^n_{F_q})",
                 space_params()});
    c.push_back({"projective-hypergroup", "isomorphism H(P^n_{F_q}) -> (F_{q^(n+1)})_{F_q^x}", space_params()});
    c.push_back({"desargues", "exhaustive Desargues configuration check", space_params()});
    c.push_back({"collineations", "count collineations and extract generators", space_params()});
    auto group = space_params();
    group.push_back({"group_modulus", "uint_list", false, std::nullopt, 0,
                     "irreducible polynomial of degree n+1 over F_q, element indices low to high"});
    c.push_back({"incidence-group", "cyclic incidence group from F_q[X]/(group_modulus)", group});
    auto kdim = space_params();
    kdim.push_back({"orders", "uint", false, json(20), 0, "shuffled greedy orders for the cross-check"});
    c.push_back({"kdim", "dimension of H(P^n_{F_q}) as a K-vector space", kdim});
    c.push_back({"krasner",
                 "Krasner certificate that Q_p[X]/(f) and Q_p[X]/(g) are isomorphic",
                 {{"p", "uint", true, std::nullopt, 2, "prime"},
                  {"f", "rational_list", true, std::nullopt, 0, "monic integral polynomial, low to high"},
                  {"g", "rational_list", true, std::nullopt, 0, "monic integral polynomial, low to high"}}});
    c.push_back({"quad-extensions",
                 "number of quadratic extensions of Q_p or F_q((t))",
                 {{"p", "uint", false, std::nullopt, 2, "Q_p"}, {"q", "uint", false, std::nullopt, 3, "F_q((t))"}},
                 {"p", "q"},
                 true});
    c.push_back({"fraction-check",
                 "bounded Fr(F_q[X] mod F_q^x) against F_q(X) mod F_q^x",
                 {{"q", "uint", true, std::nullopt, 2, "field order"},
                  {"cap", "uint", false, json(2), 1, "degree cap for numerators and denominators"}}});
    return c;
  }();
  return table;
}

const Command& find_command(const std::string& name) {
  for (const auto& c : commands())
    if (c.name == name) return c;
  throw UsageError("unknown command '" + name + "'");
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

/// Accepts the Unicode minus sign that shows up in copied formulas.
std::string ascii_minus(std::string s) {
  const std::string minus = "\xE2\x88\x92";
  for (auto pos = s.find(minus); pos != std::string::npos; pos = s.find(minus, pos)) s.replace(pos, minus.size(), "-");
  return s;
}

std::uint64_t parse_uint(const std::string& key, const std::string& text) {
  std::uint64_t v = 0;
  const auto t = trim(text);
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size())
    throw UsageError("parameter '" + key + "' expects a non-negative integer, got '" + text + "'");
  return v;
}

std::vector<std::string> split_list(const std::string& key, const std::string& text) {
  auto t = trim(text);
  if (!t.empty() && t.front() == '[') {
    if (t.back() != ']') throw UsageError("parameter '" + key + "' has an unterminated list");
    t = t.substr(1, t.size() - 2);
  }
  std::vector<std::string> out;
  if (trim(t).empty()) return out;
  std::stringstream in(t);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(trim(item));
  return out;
}

json normalize(const Param& p, const std::string& text) {
  if (p.type == "uint") {
    const auto v = parse_uint(p.name, text);
    if (v < p.min) throw UsageError("parameter '" + p.name + "' must be at least " + std::to_string(p.min));
    return v;
  }
  const auto items = split_list(p.name, ascii_minus(text));
  if (items.empty()) throw UsageError("parameter '" + p.name + "' must not be empty");
  json out = json::array();
  for (const auto& item : items) {
    if (p.type == "uint_list") {
      const auto v = parse_uint(p.name, item);
      if (v < p.min) throw UsageError("entries of '" + p.name + "' must be at least " + std::to_string(p.min));
      out.push_back(v);
    } else {
      try {
        out.push_back(format_rational(parse_rational(item)));
      } catch (const std::exception&) {
        throw UsageError("parameter '" + p.name + "' expects rationals, got '" + item + "'");
      }
    }
  }
  return out;
}

void apply_token(RawTask& raw, const std::string& token, bool allow_command) {
  const auto eq = token.find('=');
  if (eq == std::string::npos) {
    if (!allow_command || !raw.command.empty()) throw UsageError("unexpected argument '" + token + "'");
    raw.command = token;
    return;
  }
  const auto key = trim(std::string_view(token).substr(0, eq));
  const auto value = trim(std::string_view(token).substr(eq + 1));
  if (key.empty()) throw UsageError("empty key in '" + token + "'");
  if (key == "command") {
    raw.command = value;
  } else if (key == "seed") {
    raw.seed = parse_uint("seed", value);
  } else {
    raw.parameters[key] = value;
  }
}

}  // namespace

std::string_view tool_version() { return HYPERLAB_VERSION; }

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::inconclusive: return "inconclusive";
    case Status::error: return "error";
  }
  return "error";
}

Status status_from_string(std::string_view s) {
  for (auto st : {Status::pass, Status::fail, Status::inconclusive, Status::error})
    if (to_string(st) == s) return st;
  throw std::invalid_argument("unknown status '" + std::string(s) + "'");
}

int exit_code(Status s) {
  switch (s) {
    case Status::pass: return 0;
    case Status::fail: return 1;
    case Status::error: return 2;
    case Status::inconclusive: return 3;
  }
  return 2;
}

json TaskSpec::to_json() const { return {{"command", command}, {"parameters", parameters}, {"seed", seed}}; }

RawTask parse_arguments(const std::vector<std::string>& tokens) {
  RawTask raw;
  for (const auto& t : tokens) apply_token(raw, t, true);
  return raw;
}

RawTask parse_spec_text(std::string_view text) {
  RawTask raw;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string word;
    bool first = true;
    while (words >> word) {
      // "space" only introduces the q/n/modulus keys that follow it.
      if (first && word == "space") {
        first = false;
        continue;
      }
      first = false;
      apply_token(raw, word, false);
    }
  }
  return raw;
}

RawTask read_spec_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read spec file '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_spec_text(buf.str());
}

RawTask merge(RawTask base, const RawTask& overrides) {
  if (!overrides.command.empty()) base.command = overrides.command;
  if (overrides.seed) base.seed = overrides.seed;
  for (const auto& [k, v] : overrides.parameters) base.parameters[k] = v;
  return base;
}

TaskSpec validate(const RawTask& raw) {
  if (raw.command.empty()) throw UsageError("no command given");
  const auto& cmd = find_command(raw.command);
  TaskSpec task;
  task.command = cmd.name;
  task.seed = raw.seed.value_or(0);
  for (const auto& [key, value] : raw.parameters)
    if (std::none_of(cmd.params.begin(), cmd.params.end(), [&](const Param& p) { return p.name == key; }))
      throw UsageError("command '" + cmd.name + "' has no parameter '" + key + "'");
  for (const auto& p : cmd.params) {
    if (const auto it = raw.parameters.find(p.name); it != raw.parameters.end()) {
      task.parameters[p.name] = normalize(p, it->second);
    } else if (p.required) {
      throw UsageError("command '" + cmd.name + "' requires parameter '" + p.name + "'");
    } else if (p.fallback) {
      task.parameters[p.name] = *p.fallback;
    }
  }
  if (!cmd.exclusive.empty()) {
    const auto given = std::count_if(cmd.exclusive.begin(), cmd.exclusive.end(),
                                     [&](const std::string& k) { return task.parameters.contains(k); });
    std::string names;
    for (const auto& k : cmd.exclusive) names += (names.empty() ? "" : ", ") + k;
    if (given > 1 || (cmd.one_required && given == 0))
      throw UsageError("command '" + cmd.name + "' takes exactly one of: " + names);
  }
  return task;
}

json parameter_schema() {
  json out = json::object();
  for (const auto& c : commands()) {
    json params = json::object();
    for (const auto& p : c.params) {
      json entry = {{"type", p.type}, {"required", p.required}, {"help", p.help}};
      if (p.fallback) entry["default"] = *p.fallback;
      if (p.min > 0) entry["min"] = p.min;
      params[p.name] = entry;
    }
    json entry = {{"help", c.help}, {"parameters", params}};
    if (!c.exclusive.empty()) entry[c.one_required ? "exactly_one_of" : "at_most_one_of"] = c.exclusive;
    out[c.name] = entry;
  }
  return {{"commands", out},
          {"flags", {"--spec <file>", "--json", "--jobs <n>", "--seed <u64>", "--timings", "--schema"}},
          {"schema_version", kSchemaVersion}};
}

std::string canonical_bytes(const json& report) { return report.dump() + "\n"; }
std::string pretty_bytes(const json& report) { return report.dump(2) + "\n"; }

}  // namespace hyperlab::cli
