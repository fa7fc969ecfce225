#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace oracle {

Rational cofactor_determinant(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Rational det = 0;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col] == 0) continue;
    std::vector<std::vector<Rational>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rational> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    const Rational term = m[0][col] * cofactor_determinant(minor);
    det += col % 2 == 0 ? term : Rational(-term);
  }
  return det;
}

Rational resultant_by_cofactors(const std::vector<Rational>& f, const std::vector<Rational>& g) {
  const std::size_t m = f.size() - 1, n = g.size() - 1, size = m + n;
  std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size, 0));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i <= m; ++i) s[r][r + i] = f[m - i];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t i = 0; i <= n; ++i) s[n + r][r + i] = g[n - i];
  return cofactor_determinant(s);
}

std::vector<std::uint64_t> square_roots_mod(std::int64_t a, std::uint64_t m) {
  const auto target = static_cast<std::uint64_t>(((a % static_cast<std::int64_t>(m)) + static_cast<std::int64_t>(m)) % static_cast<std::int64_t>(m));
  std::vector<std::uint64_t> roots;
  for (std::uint64_t x = 0; x < m; ++x)
    if (x * x % m == target) roots.push_back(x);
  return roots;
}

std::uint64_t unit_square_index_mod(std::uint64_t p, unsigned k) {
  std::uint64_t m = 1;
  for (unsigned i = 0; i < k; ++i) m *= p;
  std::set<std::uint64_t> squares;
  std::uint64_t units = 0;
  for (std::uint64_t x = 1; x < m; ++x)
    if (x % p != 0) {
      ++units;
      squares.insert(x * x % m);
    }
  return units / squares.size();
}

std::uint64_t unit_square_index_series(const GaloisField& f, unsigned k) {
  const std::uint64_t q = f.order();
  std::uint64_t count = 1;
  for (unsigned i = 0; i < k; ++i) count *= q;
  auto digits = [&](std::uint64_t code) {
    std::vector<Elem> d(k);
    for (auto& x : d) {
      x = static_cast<Elem>(code % q);
      code /= q;
    }
    return d;
  };
  std::set<std::vector<Elem>> squares;
  std::uint64_t units = 0;
  for (std::uint64_t code = 0; code < count; ++code) {
    const auto a = digits(code);
    if (a[0] == 0) continue;
    ++units;
    std::vector<Elem> sq(k, 0);
    for (unsigned i = 0; i < k; ++i)
      for (unsigned j = 0; i + j < k; ++j) sq[i + j] = f.add(sq[i + j], f.mul(a[i], a[j]));
    squares.insert(sq);
  }
  return units / squares.size();
}

std::pair<int, std::uint64_t> integer_square_class(std::int64_t d, std::uint64_t p, unsigned k) {
  int v = 0;
  while (d % static_cast<std::int64_t>(p) == 0) {
    d /= static_cast<std::int64_t>(p);
    ++v;
  }
  std::uint64_t m = 1;
  for (unsigned i = 0; i < k; ++i) m *= p;
  const auto u = static_cast<std::uint64_t>(((d % static_cast<std::int64_t>(m)) + static_cast<std::int64_t>(m)) % static_cast<std::int64_t>(m));
  std::uint64_t least = m;
  for (std::uint64_t s = 1; s < m; ++s)
    if (s % p != 0) least = std::min(least, u * (s * s % m) % m);
  return {v % 2, least};
}

bool irreducible_by_trial_division(std::uint32_t p, const std::vector<std::uint32_t>& f) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<std::uint32_t> g(d + 1, 1);
      std::uint64_t rest = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      std::vector<std::uint64_t> r(f.begin(), f.end());
      for (std::size_t top = deg; top >= d; --top) {
        const std::uint64_t c = r[top] % p;
        for (std::size_t i = 0; i <= d; ++i) r[top - d + i] = (r[top - d + i] + (p - c) * g[i]) % p;
        if (top == d) break;
      }
      if (std::all_of(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(d), [&](std::uint64_t x) { return x % p == 0; }))
        return false;
    }
  }
  return true;
}

std::set<Elem> literal_sum(const GaloisField& f, const std::vector<Elem>& T, Elem x, Elem y) {
  std::set<Elem> out;
  for (Elem t : T)
    for (Elem s : T) out.insert(f.add(f.mul(x, t), f.mul(y, s)));
  return out;
}

std::uint64_t pgammal_by_counting(std::uint64_t q, unsigned n) {
  std::uint64_t p = 2;
  while (q % p) ++p;
  std::uint64_t e = 0;
  for (std::uint64_t r = q; r > 1; r /= p) ++e;
  std::uint64_t qd = 1;
  for (unsigned i = 0; i <= n; ++i) qd *= q;
  std::uint64_t gl = 1, qi = 1;
  for (unsigned i = 0; i <= n; ++i, qi *= q) gl *= qd - qi;
  return gl / (q - 1) * e;
}

std::set<std::vector<PointId>> semilinear_permutations(const ProjectiveSpace& space) {
  const auto& f = space.field();
  const std::size_t d = space.dimension() + 1;
  const std::uint64_t q = f.order();
  std::map<std::vector<Elem>, PointId> lookup;
  for (PointId i = 0; i < space.point_count(); ++i) lookup[space.point(i).coords] = i;

  std::uint64_t matrices = 1;
  for (std::size_t i = 0; i < d * d; ++i) matrices *= q;
  std::set<std::vector<PointId>> out;
  std::vector<Elem> m(d * d), v(d);
  for (unsigned k = 0; k < f.absolute_degree(); ++k) {
    std::uint64_t power = 1;
    for (unsigned i = 0; i < k; ++i) power *= f.characteristic();
    for (std::uint64_t code = 0; code < matrices; ++code) {
      std::uint64_t rest = code;
      for (auto& x : m) {
        x = static_cast<Elem>(rest % q);
        rest /= q;
      }
      std::vector<PointId> perm;
      bool singular = false;
      for (PointId i = 0; i < space.point_count() && !singular; ++i) {
        const auto& c = space.point(i).coords;
        for (std::size_t r = 0; r < d; ++r) {
          v[r] = 0;
          for (std::size_t s = 0; s < d; ++s) v[r] = f.add(v[r], f.mul(m[r * d + s], f.pow(c[s], power)));
        }
        auto lead = std::find_if(v.begin(), v.end(), [](Elem x) { return x != 0; });
        if (lead == v.end()) {
          singular = true;
          break;
        }
        const Elem inv = f.inv(*lead);
        std::vector<Elem> w(d);
        for (std::size_t r = 0; r < d; ++r) w[r] = f.mul(v[r], inv);
        perm.push_back(lookup.at(w));
      }
      if (!singular) out.insert(perm);
    }
  }
  return out;
}

std::uint64_t collineations_by_permutations(const ProjectiveSpace& space) {
  const std::size_t n = space.point_count();
  std::set<std::vector<PointId>> lines;
  for (const auto& l : space.lines()) lines.insert(l.points);
  std::vector<PointId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (const auto& l : lines) {
      std::vector<PointId> image;
      for (PointId p : l) image.push_back(perm[p]);
      std::sort(image.begin(), image.end());
      if (!lines.contains(image)) {
        ok = false;
        break;
      }
    }
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

bool zero_in_sum(const MultiOpTable& h, const std::vector<Index>& elems) {
  std::set<Index> acc{elems.front()};
  for (std::size_t i = 1; i < elems.size(); ++i) {
    std::set<Index> next;
    for (Index a : acc)
      for (Index z : h.sum(a, elems[i])) next.insert(z);
    acc = std::move(next);
  }
  return acc.contains(h.zero());
}

std::size_t max_independent_size(const MultiOpTable& h) {
  std::vector<Index> nonzero;
  for (Index x = 0; x < h.size(); ++x)
    if (x != h.zero()) nonzero.push_back(x);
  const std::size_t m = nonzero.size();
  std::size_t best = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (size <= best) continue;
    bool independent = true;
    for (std::uint64_t sub = mask; sub && independent; sub = (sub - 1) & mask) {
      if (__builtin_popcountll(sub) < 2) continue;
      std::vector<Index> elems;
      for (std::size_t i = 0; i < m; ++i)
        if (sub >> i & 1) elems.push_back(nonzero[i]);
      independent = !zero_in_sum(h, elems);
    }
    if (independent) best = size;
  }
  return best;
}

}  // namespace oracle
