#include "hyperlab/fraction_hyperfield.hpp"

#include "hyperlab/error.hpp"

#include <algorithm>
#include <thread>

namespace hyperlab {

namespace {

FieldPoly one_poly(const GaloisField& f) { return FieldPoly::constant(f, f.one()); }

void sort_unique(std::vector<FieldPoly>& v) {
  std::sort(v.begin(), v.end(), poly_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

/// The polynomials x t y' + y s x' over all nonzero t, s, together with the
/// common denominator x'y', for testing z = x t + y s by cross-multiplying.
class RationalSum {
 public:
  RationalSum(const GaloisField& field, const BoundedFraction& x, const BoundedFraction& y)
      : den_(x.denominator * y.denominator) {
    const auto a = x.numerator * y.denominator;
    const auto b = y.numerator * x.denominator;
    for (Elem t = 1; t < field.order(); ++t)
      for (Elem s = 1; s < field.order(); ++s) numerators_.push_back(a.scaled(t) + b.scaled(s));
  }

  bool contains(const BoundedFraction& z) const {
    if (z.numerator.is_zero())
      return std::any_of(numerators_.begin(), numerators_.end(), [](const FieldPoly& p) { return p.is_zero(); });
    const auto lhs = z.numerator * den_;
    for (const auto& p : numerators_) {
      if (p.is_zero() || p.degree() + z.denominator.degree() != lhs.degree()) continue;
      if (z.denominator * p == lhs) return true;
    }
    return false;
  }

 private:
  FieldPoly den_;
  std::vector<FieldPoly> numerators_;
};

}  // namespace

bool poly_less(const FieldPoly& a, const FieldPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.coeffs() < b.coeffs();
}

PolynomialCosetRing::PolynomialCosetRing(GaloisField field) : field_(std::move(field)) {}

FieldPoly PolynomialCosetRing::canonical(const FieldPoly& f) const {
  if (!(f.ring() == field_)) throw Error(ErrorCode::incompatible_field, "polynomial over another field");
  return make_monic(f);
}

std::vector<FieldPoly> PolynomialCosetRing::sum(const FieldPoly& x, const FieldPoly& y) const {
  std::vector<FieldPoly> out;
  for (Elem t = 1; t < field_.order(); ++t)
    for (Elem s = 1; s < field_.order(); ++s) out.push_back(canonical(x.scaled(t) + y.scaled(s)));
  sort_unique(out);
  return out;
}

std::vector<FieldPoly> PolynomialCosetRing::elements(unsigned max_degree) const {
  const std::uint32_t q = field_.order();
  std::vector<FieldPoly> out{FieldPoly(field_)};
  for (unsigned d = 0; d <= max_degree; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= q;
    if (count > (1u << 20)) throw Error(ErrorCode::too_large, "too many polynomials of degree " + std::to_string(d));
    for (std::uint64_t m = 0; m < count; ++m) {
      std::vector<Elem> c(d + 1, field_.one());
      std::uint64_t rest = m;
      for (unsigned i = 0; i < d; ++i) {
        c[i] = static_cast<Elem>(rest % q);
        rest /= q;
      }
      out.emplace_back(field_, std::move(c));
    }
  }
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

MultiOpTable PolynomialCosetRing::table(unsigned max_degree) const {
  const auto elems = elements(max_degree);
  const std::size_t n = elems.size();
  auto index = [&](const FieldPoly& f) {
    return static_cast<Index>(std::lower_bound(elems.begin(), elems.end(), f, poly_less) - elems.begin());
  };
  std::vector<IndexSet> sums(n * n);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(elems[i].to_string());
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& z : sum(elems[i], elems[j])) sums[i * n + j].push_back(index(z));
  }
  return MultiOpTable(0, std::move(sums)).with_labels(std::move(labels));
}

int BoundedFraction::height() const {
  return std::max({0, numerator.degree(), denominator.degree()});
}

std::string BoundedFraction::to_string() const { return numerator.to_string() + "/" + denominator.to_string(); }

bool operator<(const BoundedFraction& a, const BoundedFraction& b) {
  if (!(a.numerator == b.numerator)) return poly_less(a.numerator, b.numerator);
  return poly_less(a.denominator, b.denominator);
}

BoundedFraction make_fraction(const FieldPoly& numerator, const FieldPoly& denominator) {
  numerator.require_same(denominator);
  if (denominator.is_zero()) throw Error(ErrorCode::invalid_argument, "zero denominator");
  const auto& field = numerator.ring();
  if (numerator.is_zero()) return {numerator, one_poly(field)};
  const auto g = poly_gcd(numerator, denominator);
  return {make_monic(exact_quotient(numerator, g)), make_monic(exact_quotient(denominator, g))};
}

BoundedFractionField::BoundedFractionField(PolynomialCosetRing ring, unsigned cap) : ring_(std::move(ring)), cap_(cap) {
  if (cap_ < 1) throw Error(ErrorCode::invalid_argument, "degree cap must be at least 1");
  const auto& field = ring_.field();
  const auto polys = ring_.elements(cap_);
  elements_.push_back({FieldPoly(field), one_poly(field)});
  for (const auto& num : polys) {
    if (num.is_zero()) continue;
    for (const auto& den : polys)
      if (!den.is_zero() && poly_gcd(num, den).degree() == 0) elements_.push_back({num, den});
  }
  std::sort(elements_.begin(), elements_.end());

  const std::size_t n = elements_.size();
  sums_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& x = elements_[i];
      const auto& y = elements_[j];
      const auto den = x.denominator * y.denominator;
      auto& out = sums_[i * n + j];
      for (const auto& z : ring_.sum(x.numerator * y.denominator, y.numerator * x.denominator)) {
        const auto f = make_fraction(z, den);
        if (f.height() > static_cast<int>(cap_)) {
          out.escaped = true;
          continue;
        }
        out.members.push_back(*index_of(f));
      }
      std::sort(out.members.begin(), out.members.end());
      out.members.erase(std::unique(out.members.begin(), out.members.end()), out.members.end());
    }
}

std::optional<Index> BoundedFractionField::index_of(const BoundedFraction& f) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), f);
  if (it == elements_.end() || !(*it == f)) return std::nullopt;
  return static_cast<Index>(it - elements_.begin());
}

std::optional<Index> BoundedFractionField::mul(Index i, Index j) const {
  const auto& x = elements_.at(i);
  const auto& y = elements_.at(j);
  return index_of(make_fraction(x.numerator * y.numerator, x.denominator * y.denominator));
}

std::size_t BoundedFractionField::escaped_sums() const {
  return static_cast<std::size_t>(std::count_if(sums_.begin(), sums_.end(), [](const FractionSum& s) { return s.escaped; }));
}

BoundedFractionField build_fraction_hyperfield(const PolynomialCosetRing& ring, unsigned cap) {
  return BoundedFractionField(ring, cap);
}

bool rational_factor_membership(const GaloisField& field, const BoundedFraction& x, const BoundedFraction& y,
                                const BoundedFraction& z) {
  return RationalSum(field, x, y).contains(z);
}

FractionComparison compare_with_rational_route(const BoundedFractionField& fr, unsigned jobs) {
  const std::size_t n = fr.size();
  const auto& field = fr.ring().field();
  jobs = std::clamp<unsigned>(jobs, 1, static_cast<unsigned>(n));
  std::vector<FractionComparison> parts(jobs);
  auto work = [&](unsigned k) {
    auto& part = parts[k];
    for (std::size_t i = n * k / jobs; i < n * (k + 1) / jobs; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        ++part.pairs;
        const auto& s = fr.sum(static_cast<Index>(i), static_cast<Index>(j));
        if (s.escaped) ++part.escaped_pairs;
        const RationalSum direct(field, fr.element(static_cast<Index>(i)), fr.element(static_cast<Index>(j)));
        for (Index z = 0; z < n; ++z) {
          ++(s.escaped ? part.escaped_triples : part.triples);
          const bool a = std::binary_search(s.members.begin(), s.members.end(), z);
          if (a != direct.contains(fr.element(z))) {
            if (s.escaped) {
              ++part.escaped_mismatches;
              continue;
            }
            ++part.mismatches;
            if (part.mismatch_witnesses.size() < 10)
              part.mismatch_witnesses.push_back({static_cast<Index>(i), static_cast<Index>(j), z});
          }
        }
      }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> workers;
    for (unsigned k = 0; k < jobs; ++k) workers.emplace_back(work, k);
  }
  FractionComparison total;
  for (const auto& part : parts) {
    total.pairs += part.pairs;
    total.escaped_pairs += part.escaped_pairs;
    total.triples += part.triples;
    total.escaped_triples += part.escaped_triples;
    total.escaped_mismatches += part.escaped_mismatches;
    total.mismatches += part.mismatches;
    for (const auto& w : part.mismatch_witnesses)
      if (total.mismatch_witnesses.size() < 10) total.mismatch_witnesses.push_back(w);
  }
  return total;
}

}  // namespace hyperlab
