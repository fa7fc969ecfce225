#include "hyperlab/projective_space.hpp"

#include "hyperlab/error.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace hyperlab {

namespace {

constexpr std::uint64_t kMaxVectors = 1u << 22;
constexpr std::size_t kMaxPoints = 4096;
constexpr LineId kNoLine = ~LineId{0};

std::uint32_t parse_uint(std::string_view text, const std::string& what) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw Error(ErrorCode::usage, "bad " + what + " '" + std::string(text) + "'");
  return v;
}

}  // namespace

ProjPoint ProjPoint::canonical(const GaloisField& field, std::vector<Elem> coords) {
  auto lead = std::find_if(coords.begin(), coords.end(), [](Elem c) { return c != 0; });
  if (lead == coords.end()) throw Error(ErrorCode::invalid_argument, "zero vector is not a point");
  const Elem scale = field.inv(*lead);
  for (auto& c : coords) c = field.mul(c, scale);
  return {std::move(coords)};
}

bool Line::contains(PointId p) const { return std::binary_search(points.begin(), points.end(), p); }

ProjectiveSpace::ProjectiveSpace(GaloisField field, unsigned n) {
  if (n < 1) throw Error(ErrorCode::dimension, "projective dimension must be at least 1");
  auto impl = std::make_shared<Impl>(field, n);
  const std::uint64_t q = field.order();
  std::uint64_t vectors = 1;
  for (unsigned i = 0; i <= n; ++i) {
    vectors *= q;
    if (vectors > kMaxVectors) throw Error(ErrorCode::too_large, "coordinate space too large");
  }

  for (std::uint64_t m = 0; m < vectors; ++m) {
    std::vector<Elem> c(n + 1);
    std::uint64_t rest = m;
    for (auto& x : c) {
      x = static_cast<Elem>(rest % q);
      rest /= q;
    }
    auto lead = std::find_if(c.begin(), c.end(), [](Elem e) { return e != 0; });
    if (lead != c.end() && *lead == field.one()) impl->points.push_back({std::move(c)});
  }
  std::sort(impl->points.begin(), impl->points.end());
  const std::size_t count = impl->points.size();
  if (count > kMaxPoints) throw Error(ErrorCode::too_large, std::to_string(count) + " points");

  impl_ = impl;
  impl->by_code.assign(vectors, 0);
  for (PointId id = 0; id < count; ++id) impl->by_code[code(impl->points[id].coords)] = id;

  impl->line_table.assign(count * count, kNoLine);
  impl->pencils.resize(count);
  for (PointId x = 0; x < count; ++x)
    for (PointId y = x + 1; y < count; ++y) {
      if (impl->line_table[x * count + y] != kNoLine) continue;
      Line l = line_of(x, y);
      const auto id = static_cast<LineId>(impl->lines.size());
      for (PointId a : l.points) {
        impl->pencils[a].push_back(id);
        for (PointId b : l.points)
          if (a != b) impl->line_table[a * count + b] = id;
      }
      impl->lines.push_back(std::move(l));
    }
}

std::uint64_t ProjectiveSpace::code(std::span<const Elem> coords) const {
  std::uint64_t m = 0;
  for (std::size_t i = coords.size(); i-- > 0;) m = m * field().order() + coords[i];
  return m;
}

PointId ProjectiveSpace::index_of(std::span<const Elem> coords) const {
  if (coords.size() != dimension() + 1) throw Error(ErrorCode::invalid_argument, "coordinate vector has wrong length");
  for (Elem c : coords)
    if (c >= field().order()) throw Error(ErrorCode::invalid_argument, "coordinate outside the field");
  const auto p = ProjPoint::canonical(field(), {coords.begin(), coords.end()});
  return impl_->by_code[code(p.coords)];
}

Line ProjectiveSpace::line_of(PointId x, PointId y) const {
  if (x == y) throw Error(ErrorCode::degenerate_line, "a line needs two distinct points");
  const auto& F = field();
  const auto& vx = point(x).coords;
  const auto& vy = point(y).coords;
  Line l{{x, y}, x, y};
  std::vector<Elem> z(vx.size());
  for (Elem a = 1; a < F.order(); ++a)
    for (Elem b = 1; b < F.order(); ++b) {
      for (std::size_t i = 0; i < z.size(); ++i) z[i] = F.add(F.mul(a, vx[i]), F.mul(b, vy[i]));
      l.points.push_back(index_of(z));
    }
  std::sort(l.points.begin(), l.points.end());
  l.points.erase(std::unique(l.points.begin(), l.points.end()), l.points.end());
  return l;
}

LineId ProjectiveSpace::line_id(PointId x, PointId y) const {
  if (x == y) throw Error(ErrorCode::degenerate_line, "a line needs two distinct points");
  return impl_->line_table.at(x * point_count() + y);
}

bool ProjectiveSpace::collinear(PointId a, PointId b, PointId c) const {
  if (a == b || a == c || b == c) return true;
  return line(line_id(a, b)).contains(c);
}

std::string ProjectiveSpace::descriptor() const {
  std::ostringstream out;
  out << "space q=" << field().order() << " n=" << dimension();
  if (!field().is_prime_field()) {
    if (!field().base().is_prime_field())
      throw Error(ErrorCode::invalid_argument, "descriptors cover simple extensions of prime fields only");
    out << " modulus=";
    const auto modulus = field().modulus();
    const auto& m = modulus.coeffs();
    for (std::size_t i = 0; i < m.size(); ++i) out << (i ? "," : "") << m[i];
  }
  return out.str();
}

ProjectiveSpace ProjectiveSpace::parse_descriptor(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string word;
  if (!(in >> word) || word != "space") throw Error(ErrorCode::usage, "descriptor must start with 'space'");
  std::map<std::string, std::string> kv;
  while (in >> word) {
    auto eq = word.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::usage, "expected key=value, got '" + word + "'");
    kv[word.substr(0, eq)] = word.substr(eq + 1);
  }
  for (const auto& [k, v] : kv)
    if (k != "q" && k != "n" && k != "modulus") throw Error(ErrorCode::usage, "unknown descriptor key '" + k + "'");
  if (!kv.contains("q") || !kv.contains("n")) throw Error(ErrorCode::usage, "descriptor needs q and n");
  const auto q = parse_uint(kv["q"], "q");
  const auto n = parse_uint(kv["n"], "n");
  if (!kv.contains("modulus")) return ProjectiveSpace(GaloisField::of_order(q), n);

  const auto base = GaloisField::of_order(q);
  std::vector<std::uint32_t> coeffs;
  std::istringstream list(kv["modulus"]);
  for (std::string c; std::getline(list, c, ',');) coeffs.push_back(parse_uint(c, "modulus coefficient"));
  auto field = GaloisField::from_modulus(base.characteristic(), coeffs);
  if (field.order() != q) throw Error(ErrorCode::degree_mismatch, "modulus does not define a field of order " + std::to_string(q));
  return ProjectiveSpace(field, n);
}

void require_not_f2(const ProjectiveSpace& space, std::string_view what) {
  if (space.field().order() == 2)
    throw Error(ErrorCode::excluded_field, std::string(what) + " is not defined over F_2 (lines have three points)");
}

}  // namespace hyperlab
