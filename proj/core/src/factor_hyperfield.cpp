#include "hyperlab/factor_hyperfield.hpp"

#include "hyperlab/error.hpp"

#include <algorithm>
#include <numeric>

namespace hyperlab {

namespace {

std::vector<Elem> closure(const GaloisField& field, std::span<const Elem> generators) {
  std::vector<bool> in(field.order(), false);
  std::vector<Elem> members{field.one()}, frontier{field.one()};
  in[field.one()] = true;
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (Elem x : frontier)
      for (Elem g : generators) {
        Elem y = field.mul(x, g);
        if (!in[y]) {
          in[y] = true;
          members.push_back(y);
          next.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

Subgroup Subgroup::generated_by(const GaloisField& field, std::span<const Elem> generators) {
  for (Elem g : generators) {
    if (g >= field.order()) throw Error(ErrorCode::invalid_argument, "generator outside the field");
    if (g == 0) throw Error(ErrorCode::not_a_subgroup, "zero is not a unit");
  }
  return Subgroup(field, closure(field, generators));
}

Subgroup Subgroup::from_elements(const GaloisField& field, std::vector<Elem> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (Elem g : elements)
    if (g >= field.order()) throw Error(ErrorCode::invalid_argument, "element outside the field");
  if (elements.empty() || elements.front() == 0 || !std::binary_search(elements.begin(), elements.end(), field.one()))
    throw Error(ErrorCode::not_a_subgroup, "subgroup must contain 1 and no zero");
  for (Elem a : elements)
    for (Elem b : elements)
      if (!std::binary_search(elements.begin(), elements.end(), field.mul(a, b)))
        throw Error(ErrorCode::not_a_subgroup,
                    "not closed: " + field.format(a) + " * " + field.format(b) + " = " + field.format(field.mul(a, b)));
  return Subgroup(field, std::move(elements));
}

Subgroup Subgroup::of_order(const GaloisField& field, std::uint64_t order) {
  const std::uint64_t units = field.order() - 1;
  if (order == 0 || units % order != 0)
    throw Error(ErrorCode::invalid_argument, "subgroup order must divide " + std::to_string(units));
  const Elem g = field.pow(field.primitive_element(), units / order);
  return generated_by(field, std::span<const Elem>(&g, 1));
}

Subgroup Subgroup::subfield_units(const GaloisField& field, std::uint32_t sub_order) {
  std::uint32_t k = 0;
  for (std::uint64_t q = 1; q < sub_order; q *= field.characteristic()) ++k;
  std::uint64_t check = 1;
  for (std::uint32_t i = 0; i < k; ++i) check *= field.characteristic();
  if (k == 0 || check != sub_order || field.absolute_degree() % k != 0)
    throw Error(ErrorCode::invalid_argument, "no subfield of order " + std::to_string(sub_order));
  std::vector<Elem> elems;
  for (Elem x = 1; x < field.order(); ++x)
    if (field.pow(x, sub_order) == x) elems.push_back(x);
  return from_elements(field, std::move(elems));
}

std::vector<Subgroup> Subgroup::all(const GaloisField& field) {
  std::vector<Subgroup> out;
  const std::uint64_t units = field.order() - 1;
  for (std::uint64_t d = 1; d <= units; ++d)
    if (units % d == 0) out.push_back(of_order(field, d));
  return out;
}

bool Subgroup::contains(Elem x) const { return std::binary_search(elements_.begin(), elements_.end(), x); }

FactorHyperfield build_factor_hyperfield(const GaloisField& field, const Subgroup& subgroup) {
  if (!(subgroup.field() == field)) throw Error(ErrorCode::incompatible_field, "subgroup lives in another field");
  const auto& T = subgroup.elements();
  const std::uint32_t q = field.order();

  std::vector<std::vector<Elem>> keys(q);
  for (Elem x = 0; x < q; ++x) keys[x] = field.coeffs(x);

  std::vector<Elem> rep_of(q, 0);
  std::vector<Elem> reps;
  std::vector<bool> done(q, false);
  for (Elem x = 1; x < q; ++x) {
    if (done[x]) continue;
    Elem best = x;
    for (Elem t : T)
      if (keys[field.mul(x, t)] < keys[best]) best = field.mul(x, t);
    for (Elem t : T) {
      done[field.mul(x, t)] = true;
      rep_of[field.mul(x, t)] = best;
    }
    reps.push_back(best);
  }
  std::sort(reps.begin(), reps.end(), [&](Elem a, Elem b) { return keys[a] < keys[b]; });
  reps.insert(reps.begin(), 0);

  std::vector<Index> index_of_rep(q, 0);
  for (Index i = 0; i < reps.size(); ++i) index_of_rep[reps[i]] = i;
  std::vector<Index> class_of(q, 0);
  for (Elem x = 1; x < q; ++x) class_of[x] = index_of_rep[rep_of[x]];

  const std::size_t n = reps.size();
  std::vector<IndexSet> sums(n * n);
  std::vector<Index> mul(n * n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      auto& s = sums[i * n + j];
      for (Elem u : T) s.push_back(class_of[field.add(reps[i], field.mul(reps[j], u))]);
      mul[i * n + j] = class_of[field.mul(reps[i], reps[j])];
    }
  std::vector<std::string> labels;
  for (Elem r : reps) labels.push_back(field.format(r));

  MultiOpTable table(0, std::move(sums), std::move(mul), class_of[field.one()]);
  return {field, subgroup, table.with_labels(std::move(labels)), std::move(reps), std::move(class_of)};
}

SubfieldVerdict subfield_criterion(const GaloisField& field, const Subgroup& subgroup) {
  const auto factor = build_factor_hyperfield(field, subgroup);
  const Index one = *factor.table.one();
  SubfieldVerdict verdict;
  verdict.sum_criterion = factor.table.sum(one, one) == IndexSet{0, one};
  verdict.additively_closed = true;
  for (Elem a : subgroup.elements())
    for (Elem b : subgroup.elements()) {
      Elem c = field.add(a, b);
      if (c != 0 && !subgroup.contains(c)) verdict.additively_closed = false;
    }
  return verdict;
}

MultiOpTable krasner_hyperfield() {
  return MultiOpTable(0, {{0}, {1}, {1}, {0, 1}}, {0, 0, 0, 1}, 1).with_labels({"0", "1"});
}

}  // namespace hyperlab
