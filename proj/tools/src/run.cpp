#include "hyperlab/cli/task.hpp"

#include "hyperlab/collineations.hpp"
#include "hyperlab/error.hpp"
#include "hyperlab/factor_hyperfield.hpp"
#include "hyperlab/fraction_hyperfield.hpp"
#include "hyperlab/hypergroup_checks.hpp"
#include "hyperlab/incidence_group.hpp"
#include "hyperlab/isomorphism.hpp"
#include "hyperlab/krasner.hpp"
#include "hyperlab/kvector_space.hpp"
#include "hyperlab/projective_checks.hpp"
#include "hyperlab/projective_space.hpp"

#include <algorithm>
#include <chrono>

namespace hyperlab::cli {

namespace {

struct Outcome {
  Status status = Status::pass;
  json result = json::object();
  json witnesses = json::array();
};

std::uint32_t as_u32(const json& v, const char* what) {
  const auto x = v.get<std::uint64_t>();
  if (x > 0xffffffffu) throw Error(ErrorCode::too_large, std::string(what) + " does not fit in 32 bits");
  return static_cast<std::uint32_t>(x);
}

std::uint32_t smallest_prime_factor(std::uint32_t q) {
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= q; ++d)
    if (q % d == 0) return d;
  return q;
}

GaloisField field_of(const json& params) {
  const auto q = as_u32(params.at("q"), "q");
  if (!params.contains("modulus")) return GaloisField::of_order(q);
  std::vector<std::uint32_t> mod;
  for (const auto& c : params.at("modulus")) mod.push_back(as_u32(c, "modulus coefficient"));
  const auto f = GaloisField::from_modulus(smallest_prime_factor(q), mod);
  if (f.order() != q)
    throw Error(ErrorCode::degree_mismatch,
                "modulus defines a field of order " + std::to_string(f.order()) + ", not " + std::to_string(q));
  return f;
}

ProjectiveSpace space_of(const json& params) {
  return ProjectiveSpace(field_of(params), static_cast<unsigned>(params.at("n").get<std::uint64_t>()));
}

json axiom_witnesses(const AxiomReport& r) {
  json out = json::array();
  for (const auto& v : r.violations) out.push_back({{"axiom", v.axiom}, {"witness", v.witness}, {"detail", v.detail}});
  return out;
}

json axiom_summary(const AxiomReport& r) {
  return {{"checked", r.checked},
          {"violation_counts", r.violation_counts},
          {"properties", r.properties},
          {"counters", r.counters},
          {"passed", r.passed()}};
}

Outcome from_axioms(const AxiomReport& r) {
  Outcome o;
  o.status = r.passed() ? Status::pass : Status::fail;
  o.result = axiom_summary(r);
  o.witnesses = axiom_witnesses(r);
  return o;
}

json space_summary(const ProjectiveSpace& s) {
  return {{"descriptor", s.descriptor()}, {"points", s.point_count()}, {"lines", s.line_count()}};
}

Outcome run_factor_hyperfield(const TaskSpec& t, const RunOptions& opt) {
  const auto& p = t.parameters;
  const auto field = GaloisField::of_order(as_u32(p.at("q"), "q"));
  std::optional<Subgroup> sub;
  if (p.contains("generators")) {
    std::vector<Elem> gens;
    for (const auto& g : p.at("generators")) gens.push_back(as_u32(g, "generator"));
    sub = Subgroup::generated_by(field, gens);
  } else if (p.contains("order")) {
    sub = Subgroup::of_order(field, p.at("order").get<std::uint64_t>());
  } else {
    sub = Subgroup::subfield_units(field, as_u32(p.at("subfield"), "subfield"));
  }
  const auto fh = build_factor_hyperfield(field, *sub);
  const auto report = check_hyperring(fh.table, true, opt.jobs);
  const auto verdict = subfield_criterion(field, *sub);
  auto o = from_axioms(report);
  o.result["carrier"] = fh.table.size();
  o.result["subgroup"] = sub->elements();
  o.result["representatives"] = fh.representatives;
  o.result["subfield_criterion"] = {{"sum_criterion", verdict.sum_criterion},
                                    {"additively_closed", verdict.additively_closed}};
  o.result["table"] = fh.table.serialize();
  if (!verdict.agree()) {
    o.status = Status::fail;
    o.witnesses.push_back({{"axiom", "subfield criterion"}, {"witness", json::array()}, {"detail", "disagreement"}});
  }
  return o;
}

Outcome run_check_axioms(const TaskSpec& t, const RunOptions& opt) {
  const auto space = space_of(t.parameters);
  auto report = check_canonical_hypergroup(incidence_hypergroup(space), opt.jobs);
  report.absorb(check_projective_axioms(space), "projective:");
  auto o = from_axioms(report);
  o.result["space"] = space_summary(space);
  return o;
}

Outcome run_projective_hypergroup(const TaskSpec& t, const RunOptions&) {
  const auto space = space_of(t.parameters);
  const auto h = incidence_hypergroup(space);
  const std::uint64_t q = space.field().order();
  std::uint64_t big = 1;
  for (unsigned i = 0; i <= space.dimension(); ++i) {
    big *= q;
    if (big > (1u << 20)) throw Error(ErrorCode::too_large, "F_{q^(n+1)} is too large to tabulate");
  }
  const auto ext = GaloisField::of_order(static_cast<std::uint32_t>(big));
  const auto factor = build_factor_hyperfield(ext, Subgroup::subfield_units(ext, space.field().order()));
  const auto target = factor.table.additive();
  Outcome o;
  o.result["space"] = space_summary(space);
  o.result["hypergroup_size"] = h.size();
  o.result["factor_size"] = target.size();
  const auto iso = find_isomorphism(h, target);
  o.result["isomorphic"] = iso.has_value();
  if (iso) {
    o.result["verified"] = is_isomorphism(h, target, *iso);
    o.witnesses.push_back({{"kind", "isomorphism"}, {"map", *iso}});
    o.status = o.result["verified"].get<bool>() ? Status::pass : Status::fail;
  } else {
    o.status = Status::fail;
  }
  return o;
}

Outcome run_desargues(const TaskSpec& t, const RunOptions& opt) {
  const auto space = space_of(t.parameters);
  auto o = from_axioms(check_desargues(space, opt.jobs));
  o.result["space"] = space_summary(space);
  return o;
}

Outcome run_collineations(const TaskSpec& t, const RunOptions&) {
  const auto space = space_of(t.parameters);
  const auto r = enumerate_collineations(space);
  Outcome o;
  o.result["space"] = space_summary(space);
  o.result["count"] = r.count;
  o.result["single_line"] = r.single_line;
  o.result["generator_count"] = r.generators.size();
  if (r.expected) o.result["expected"] = *r.expected;
  for (const auto& g : r.generators) o.witnesses.push_back({{"kind", "generator"}, {"images", g}});
  o.status = (!r.expected || *r.expected == r.count) ? Status::pass : Status::fail;
  return o;
}

Outcome run_incidence_group(const TaskSpec& t, const RunOptions&) {
  const auto& p = t.parameters;
  const auto space = space_of(p);
  FieldPoly modulus = [&] {
    if (!p.contains("group_modulus")) return find_irreducible(space.field(), space.dimension() + 1);
    std::vector<Elem> c;
    for (const auto& x : p.at("group_modulus")) c.push_back(as_u32(x, "group_modulus coefficient"));
    return FieldPoly(space.field(), std::move(c));
  }();
  const auto group = build_incidence_group(space, modulus);
  auto o = from_axioms(verify_incidence_group(group));
  o.result["space"] = space_summary(space);
  o.result["group_modulus"] = modulus.coeffs();
  o.result["order"] = group.size();
  o.result["identity"] = group.identity();
  return o;
}

Outcome run_kdim(const TaskSpec& t, const RunOptions&) {
  const auto space = space_of(t.parameters);
  const KVectorSpace v(incidence_hypergroup(space));
  const auto d = dimension(v, t.seed, static_cast<unsigned>(t.parameters.at("orders").get<std::uint64_t>()));
  Outcome o;
  o.result["space"] = space_summary(space);
  o.result["dimension"] = d.dimension;
  o.result["expected"] = space.dimension() + 1;
  o.result["shuffled_orders"] = d.shuffled_orders;
  o.witnesses.push_back({{"kind", "basis"}, {"elements", d.basis}});
  o.status = d.dimension == space.dimension() + 1 ? Status::pass : Status::fail;
  return o;
}

Poly<Rationals> rational_poly(const json& coeffs) {
  std::vector<Rational> c;
  for (const auto& x : coeffs) c.push_back(parse_rational(x.get<std::string>()));
  return Poly<Rationals>(Rationals{}, std::move(c));
}

Outcome run_krasner(const TaskSpec& t, const RunOptions&) {
  const auto& p = t.parameters;
  const auto spec = LocalFieldSpec::padic(as_u32(p.at("p"), "p"));
  const auto r = krasner_separates(rational_poly(p.at("f")), rational_poly(p.at("g")), spec);
  Outcome o;
  o.result["field"] = spec.name();
  o.result["verdict"] = std::string(to_string(r.verdict));
  o.result["resultant_valuation"] = r.resultant_valuation.to_string();
  o.result["conjugate_valuation"] = r.conjugate_valuation.to_string();
  o.result["radius_valuation"] = r.radius_valuation.to_string();
  o.result["threshold"] = r.threshold.to_string();
  o.status = r.verdict == KrasnerVerdict::certified_isomorphic ? Status::pass : Status::inconclusive;
  return o;
}

Outcome run_quad_extensions(const TaskSpec& t, const RunOptions&) {
  const auto& p = t.parameters;
  const auto spec = p.contains("p") ? LocalFieldSpec::padic(as_u32(p.at("p"), "p"))
                                    : LocalFieldSpec::laurent(GaloisField::of_order(as_u32(p.at("q"), "q")));
  Outcome o;
  o.result["field"] = spec.name();
  o.result["count"] = count_quadratic_extensions(spec);
  return o;
}

Outcome run_fraction_check(const TaskSpec& t, const RunOptions& opt) {
  const auto& p = t.parameters;
  const PolynomialCosetRing ring(GaloisField::of_order(as_u32(p.at("q"), "q")));
  const auto fr = build_fraction_hyperfield(ring, static_cast<unsigned>(p.at("cap").get<std::uint64_t>()));
  const auto c = compare_with_rational_route(fr, opt.jobs);
  Outcome o;
  o.result["elements"] = fr.size();
  o.result["pairs"] = c.pairs;
  o.result["escaped_pairs"] = c.escaped_pairs;
  o.result["triples"] = c.triples;
  o.result["mismatches"] = c.mismatches;
  o.result["escaped_triples"] = c.escaped_triples;
  o.result["escaped_mismatches"] = c.escaped_mismatches;
  for (const auto& w : c.mismatch_witnesses) {
    json names = json::array();
    for (auto i : w) names.push_back(fr.element(i).to_string());
    o.witnesses.push_back({{"kind", "mismatch"}, {"triple", w}, {"fractions", names}});
  }
  o.status = c.mismatches == 0 ? Status::pass : Status::fail;
  return o;
}

Outcome dispatch(const TaskSpec& t, const RunOptions& opt) {
  const auto& c = t.command;
  if (c == "factor-hyperfield") return run_factor_hyperfield(t, opt);
  if (c == "check-axioms") return run_check_axioms(t, opt);
  if (c == "projective-hypergroup") return run_projective_hypergroup(t, opt);
  if (c == "desargues") return run_desargues(t, opt);
  if (c == "collineations") return run_collineations(t, opt);
  if (c == "incidence-group") return run_incidence_group(t, opt);
  if (c == "kdim") return run_kdim(t, opt);
  if (c == "krasner") return run_krasner(t, opt);
  if (c == "quad-extensions") return run_quad_extensions(t, opt);
  if (c == "fraction-check") return run_fraction_check(t, opt);
  throw UsageError("unknown command '" + c + "'");
}

}  // namespace

json run_task(const TaskSpec& task, const RunOptions& options) {
  json report = {{"schema_version", kSchemaVersion},
                 {"tool", {{"name", "hyperlab"}, {"version", std::string(tool_version())}}},
                 {"task", task.to_json()}};
  const auto start = std::chrono::steady_clock::now();
  try {
    auto o = dispatch(task, options);
    std::sort(o.witnesses.begin(), o.witnesses.end(),
              [](const json& a, const json& b) { return a.dump() < b.dump(); });
    report["status"] = std::string(to_string(o.status));
    report["result"] = std::move(o.result);
    report["witnesses"] = std::move(o.witnesses);
  } catch (const Error& e) {
    report["status"] = std::string(to_string(Status::error));
    report["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
    report["witnesses"] = json::array();
  }
  if (options.timings) {
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report["timings"] = {{"total_ms", ms}};
  }
  return report;
}

Status report_status(const json& report) { return status_from_string(report.at("status").get<std::string>()); }

}  // namespace hyperlab::cli
