#include "hyperlab/local_number.hpp"

#include <algorithm>

namespace hyperlab {

namespace {

BigInt power(std::uint32_t p, unsigned k) {
  BigInt out = 1;
  for (unsigned i = 0; i < k; ++i) out *= p;
  return out;
}

BigInt digits_to_int(const std::vector<Elem>& digits, std::uint32_t p, std::size_t count) {
  BigInt out = 0;
  for (std::size_t i = std::min(count, digits.size()); i-- > 0;) out = out * p + digits[i];
  return out;
}

std::vector<Elem> int_to_digits(BigInt n, std::uint32_t p, std::size_t count) {
  std::vector<Elem> out(count, 0);
  for (auto& d : out) {
    d = static_cast<Elem>(static_cast<std::uint32_t>(n % p));
    n /= p;
  }
  return out;
}

BigInt mod_positive(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
  BigInt old_r = mod_positive(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    const BigInt quot = old_r / r;
    BigInt tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw Error(ErrorCode::invalid_argument, "value is not a unit");
  return mod_positive(old_s, m);
}

void require_same_spec(const LocalNumber& a, const LocalNumber& b) {
  if (!(a.spec() == b.spec())) throw Error(ErrorCode::incompatible_field, a.spec().name() + " vs " + b.spec().name());
}

}  // namespace

LocalFieldSpec LocalFieldSpec::padic(std::uint32_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::invalid_prime, std::to_string(p) + " is not prime");
  return LocalFieldSpec(Kind::padic, GaloisField::prime(p));
}

LocalFieldSpec LocalFieldSpec::laurent(GaloisField residue) { return LocalFieldSpec(Kind::laurent, std::move(residue)); }

std::string LocalFieldSpec::name() const {
  if (kind_ == Kind::padic) return "Q_" + std::to_string(prime());
  return "F_" + std::to_string(residue_.order()) + "((t))";
}

LocalNumber LocalNumber::zero(const LocalFieldSpec& spec) { return LocalNumber(spec, true, 0, {}); }

LocalNumber LocalNumber::from_digits(const LocalFieldSpec& spec, int valuation, std::vector<Elem> digits) {
  if (digits.empty()) throw Error(ErrorCode::insufficient_precision, "a local number needs at least one digit");
  if (digits.size() > kMaxPrecision) throw Error(ErrorCode::too_large, "precision exceeds the supported maximum");
  if (digits.front() == 0) throw Error(ErrorCode::invalid_argument, "leading digit must be nonzero");
  const auto bound = spec.is_padic() ? spec.prime() : spec.residue_field().order();
  for (auto d : digits)
    if (d >= bound) throw Error(ErrorCode::invalid_argument, "digit out of range");
  return LocalNumber(spec, false, valuation, std::move(digits));
}

LocalNumber LocalNumber::from_rational(const LocalFieldSpec& spec, const Rational& value, unsigned precision) {
  if (!spec.is_padic()) throw Error(ErrorCode::invalid_argument, "from_rational needs a p-adic field");
  if (value == 0) return zero(spec);
  if (precision == 0) throw Error(ErrorCode::insufficient_precision, "precision must be at least one digit");
  const auto p = spec.prime();
  BigInt num = boost::multiprecision::numerator(value);
  BigInt den = boost::multiprecision::denominator(value);
  const int vn = static_cast<int>(multiplicity(num, p));
  const int vd = static_cast<int>(multiplicity(den, p));
  num /= power(p, static_cast<unsigned>(vn));
  den /= power(p, static_cast<unsigned>(vd));
  const BigInt mod = power(p, precision);
  const BigInt unit = mod_positive(num * mod_inverse(den, mod), mod);
  return from_digits(spec, vn - vd, int_to_digits(unit, p, precision));
}

LocalNumber LocalNumber::from_series(const LocalFieldSpec& spec, const FieldPoly& f, int shift, unsigned precision) {
  if (spec.is_padic()) throw Error(ErrorCode::invalid_argument, "from_series needs a Laurent series field");
  if (!(f.ring() == spec.residue_field())) throw Error(ErrorCode::incompatible_field, "series over a different residue field");
  if (f.is_zero()) return zero(spec);
  if (precision == 0) throw Error(ErrorCode::insufficient_precision, "precision must be at least one digit");
  std::size_t k = 0;
  while (f.coeffs()[k] == 0) ++k;
  std::vector<Elem> digits(precision, 0);
  for (std::size_t i = 0; i < precision && k + i < f.coeffs().size(); ++i) digits[i] = f.coeffs()[k + i];
  return from_digits(spec, shift + static_cast<int>(k), std::move(digits));
}

int LocalNumber::order() const {
  if (zero_) throw Error(ErrorCode::invalid_argument, "zero has infinite valuation");
  return valuation_;
}

LocalNumber LocalNumber::unit_part() const {
  if (zero_) throw Error(ErrorCode::invalid_argument, "zero has no unit part");
  return LocalNumber(spec_, false, 0, digits_);
}

BigInt LocalNumber::unit_integer() const {
  if (!spec_.is_padic()) throw Error(ErrorCode::invalid_argument, "unit_integer needs a p-adic number");
  return digits_to_int(digits_, spec_.prime(), digits_.size());
}

Rational LocalNumber::to_rational() const {
  if (zero_) return 0;
  const auto unit = unit_integer();
  if (valuation_ >= 0) return Rational(unit * power(spec_.prime(), static_cast<unsigned>(valuation_)));
  return Rational(unit, power(spec_.prime(), static_cast<unsigned>(-valuation_)));
}

FieldPoly LocalNumber::unit_series() const {
  if (spec_.is_padic()) throw Error(ErrorCode::invalid_argument, "unit_series needs a Laurent series");
  return FieldPoly(spec_.residue_field(), digits_);
}

LocalNumber LocalNumber::operator-() const {
  if (zero_) return *this;
  if (spec_.is_padic()) {
    const auto p = spec_.prime();
    const BigInt mod = power(p, precision());
    return LocalNumber(spec_, false, valuation_, int_to_digits(mod - unit_integer(), p, precision()));
  }
  auto d = digits_;
  for (auto& x : d) x = spec_.residue_field().neg(x);
  return LocalNumber(spec_, false, valuation_, std::move(d));
}

LocalNumber operator+(const LocalNumber& a, const LocalNumber& b) {
  require_same_spec(a, b);
  if (a.zero_) return b;
  if (b.zero_) return a;
  const int v = std::min(a.valuation_, b.valuation_);
  const int cap = std::min(a.absolute_precision(), b.absolute_precision());
  const auto len = static_cast<std::size_t>(cap - v);
  if (a.spec_.is_padic()) {
    const auto p = a.spec_.prime();
    const BigInt mod = power(p, static_cast<unsigned>(len));
    const BigInt x = digits_to_int(a.digits_, p, static_cast<std::size_t>(cap - a.valuation_)) *
                     power(p, static_cast<unsigned>(a.valuation_ - v));
    const BigInt y = digits_to_int(b.digits_, p, static_cast<std::size_t>(cap - b.valuation_)) *
                     power(p, static_cast<unsigned>(b.valuation_ - v));
    BigInt sum = (x + y) % mod;
    if (sum == 0)
      throw Error(ErrorCode::insufficient_precision, "sum cancels every known digit below p^" + std::to_string(cap));
    const unsigned k = multiplicity(sum, p);
    sum /= power(p, k);
    return LocalNumber(a.spec_, false, v + static_cast<int>(k), int_to_digits(sum, p, len - k));
  }
  const auto& field = a.spec_.residue_field();
  std::vector<Elem> sum(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    const int pos = v + static_cast<int>(i);
    const auto at = [pos](const LocalNumber& n) -> Elem {
      const int j = pos - n.valuation_;
      return j >= 0 && j < static_cast<int>(n.digits_.size()) ? n.digits_[static_cast<std::size_t>(j)] : 0;
    };
    sum[i] = field.add(at(a), at(b));
  }
  const auto first = std::find_if(sum.begin(), sum.end(), [](Elem d) { return d != 0; });
  if (first == sum.end())
    throw Error(ErrorCode::insufficient_precision, "sum cancels every known digit below t^" + std::to_string(cap));
  const auto k = static_cast<int>(first - sum.begin());
  return LocalNumber(a.spec_, false, v + k, std::vector<Elem>(first, sum.end()));
}

LocalNumber operator-(const LocalNumber& a, const LocalNumber& b) { return a + (-b); }

LocalNumber operator*(const LocalNumber& a, const LocalNumber& b) {
  require_same_spec(a, b);
  if (a.zero_ || b.zero_) return LocalNumber::zero(a.spec_);
  const std::size_t prec = std::min(a.precision(), b.precision());
  const int v = a.valuation_ + b.valuation_;
  if (a.spec_.is_padic()) {
    const auto p = a.spec_.prime();
    const BigInt mod = power(p, static_cast<unsigned>(prec));
    const BigInt prod = (digits_to_int(a.digits_, p, prec) * digits_to_int(b.digits_, p, prec)) % mod;
    return LocalNumber(a.spec_, false, v, int_to_digits(prod, p, prec));
  }
  const auto& field = a.spec_.residue_field();
  std::vector<Elem> prod(prec, 0);
  for (std::size_t i = 0; i < prec; ++i)
    for (std::size_t j = 0; i + j < prec; ++j) prod[i + j] = field.add(prod[i + j], field.mul(a.digits_[i], b.digits_[j]));
  return LocalNumber(a.spec_, false, v, std::move(prod));
}

LocalNumber LocalNumber::inverse() const {
  if (zero_) throw Error(ErrorCode::invalid_argument, "inverse of zero");
  if (spec_.is_padic()) {
    const auto p = spec_.prime();
    const BigInt mod = power(p, precision());
    return LocalNumber(spec_, false, -valuation_, int_to_digits(mod_inverse(unit_integer(), mod), p, precision()));
  }
  const auto& field = spec_.residue_field();
  const Elem lead_inv = field.inv(digits_[0]);
  std::vector<Elem> out(precision(), 0);
  out[0] = lead_inv;
  for (std::size_t n = 1; n < out.size(); ++n) {
    Elem acc = 0;
    for (std::size_t i = 1; i <= n; ++i) acc = field.add(acc, field.mul(digits_[i], out[n - i]));
    out[n] = field.neg(field.mul(lead_inv, acc));
  }
  return LocalNumber(spec_, false, -valuation_, std::move(out));
}

LocalNumber operator/(const LocalNumber& a, const LocalNumber& b) { return a * b.inverse(); }

bool operator==(const LocalNumber& a, const LocalNumber& b) {
  return a.spec_ == b.spec_ && a.zero_ == b.zero_ && a.valuation_ == b.valuation_ && a.digits_ == b.digits_;
}

std::string LocalNumber::to_string() const {
  if (zero_) return "0";
  std::string out = spec_.is_padic() ? std::to_string(spec_.prime()) : std::string("t");
  out += "^" + std::to_string(valuation_) + " * [";
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(digits_[i]);
  }
  return out + "]";
}

}  // namespace hyperlab
