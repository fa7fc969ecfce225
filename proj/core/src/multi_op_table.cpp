#include "hyperlab/multi_op_table.hpp"

#include "hyperlab/error.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace hyperlab {

namespace {

void normalize(IndexSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

std::size_t carrier_from_sums(std::size_t cells) {
  std::size_t n = 0;
  while (n * n < cells) ++n;
  if (n * n != cells) throw Error(ErrorCode::invalid_argument, "sum table is not square");
  return n;
}

}  // namespace

MultiOpTable::MultiOpTable(Index zero, std::vector<IndexSet> sums)
    : size_(carrier_from_sums(sums.size())), zero_(zero), sums_(std::move(sums)) {
  for (auto& s : sums_) normalize(s);
  validate();
}

MultiOpTable::MultiOpTable(Index zero, std::vector<IndexSet> sums, std::vector<Index> mul, Index one)
    : size_(carrier_from_sums(sums.size())), zero_(zero), sums_(std::move(sums)), mul_(std::move(mul)), one_(one) {
  for (auto& s : sums_) normalize(s);
  if (mul_.size() != sums_.size()) throw Error(ErrorCode::invalid_argument, "multiplication table has wrong size");
  validate();
}

void MultiOpTable::validate() const {
  if (size_ == 0) throw Error(ErrorCode::invalid_argument, "empty carrier");
  if (zero_ >= size_) throw Error(ErrorCode::invalid_argument, "zero index out of range");
  if (one_ && *one_ >= size_) throw Error(ErrorCode::invalid_argument, "one index out of range");
  for (const auto& s : sums_)
    for (Index k : s)
      if (k >= size_) throw Error(ErrorCode::invalid_argument, "sum member out of range");
  for (Index k : mul_)
    if (k >= size_) throw Error(ErrorCode::invalid_argument, "product out of range");
}

bool MultiOpTable::contains(Index x, Index y, Index z) const {
  if (x >= size_ || y >= size_ || z >= size_) throw Error(ErrorCode::invalid_argument, "index out of range");
  const auto& s = sum(x, y);
  return std::binary_search(s.begin(), s.end(), z);
}

Index MultiOpTable::mul(Index x, Index y) const {
  if (mul_.empty()) throw Error(ErrorCode::missing_multiplication, "table has no multiplication");
  return mul_[x * size_ + y];
}

IndexSet MultiOpTable::sum_sets(const IndexSet& a, const IndexSet& b) const {
  std::vector<bool> hit(size_, false);
  for (Index x : a)
    for (Index y : b)
      for (Index z : sum(x, y)) hit[z] = true;
  IndexSet out;
  for (Index z = 0; z < size_; ++z)
    if (hit[z]) out.push_back(z);
  return out;
}

MultiOpTable MultiOpTable::additive() const {
  MultiOpTable copy(zero_, sums_);
  copy.labels_ = labels_;
  return copy;
}

MultiOpTable MultiOpTable::with_labels(std::vector<std::string> labels) const {
  if (labels.size() != size_) throw Error(ErrorCode::invalid_argument, "one label per carrier element required");
  MultiOpTable copy = *this;
  copy.labels_ = std::move(labels);
  return copy;
}

std::string MultiOpTable::serialize() const {
  std::ostringstream out;
  out << "carrier " << size_ << "\n";
  out << "zero " << zero_ << "\n";
  if (one_) out << "one " << *one_ << "\n";
  for (Index i = 0; i < size_; ++i)
    for (Index j = 0; j < size_; ++j) {
      out << "sum " << i << ' ' << j << " :";
      for (Index k : sum(i, j)) out << ' ' << k;
      out << "\n";
    }
  if (has_mul())
    for (Index i = 0; i < size_; ++i)
      for (Index j = 0; j < size_; ++j) out << "mul " << i << ' ' << j << " : " << mul_[i * size_ + j] << "\n";
  return out.str();
}

namespace {

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

Index parse_index(const std::string& word, std::size_t line_no) {
  Index value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size())
    throw Error(ErrorCode::usage, "line " + std::to_string(line_no) + ": expected an index, got '" + word + "'");
  return value;
}

}  // namespace

MultiOpTable MultiOpTable::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::optional<std::size_t> n;
  std::optional<Index> zero, one;
  std::vector<IndexSet> sums;
  std::vector<bool> seen_sum;
  std::vector<Index> mul;
  std::vector<bool> seen_mul;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) { throw Error(ErrorCode::usage, "line " + std::to_string(line_no) + ": " + what); };

  for (std::string line; std::getline(in, line);) {
    ++line_no;
    auto words = split_words(line);
    if (words.empty() || words[0].starts_with('#')) continue;
    const auto& key = words[0];
    if (key == "carrier") {
      if (words.size() != 2 || n) fail("malformed carrier line");
      n = parse_index(words[1], line_no);
      if (*n == 0 || *n > 1u << 14) fail("carrier size out of range");
      sums.assign(*n * *n, {});
      seen_sum.assign(*n * *n, false);
    } else if (key == "zero" || key == "one") {
      if (words.size() != 2) fail("malformed " + key + " line");
      (key == "zero" ? zero : one) = parse_index(words[1], line_no);
    } else if (key == "sum" || key == "mul") {
      if (!n) fail("carrier line must come first");
      if (words.size() < 4 || words[3] != ":") fail("malformed " + key + " line");
      Index i = parse_index(words[1], line_no), j = parse_index(words[2], line_no);
      if (i >= *n || j >= *n) fail("index out of range");
      std::size_t cell = i * *n + j;
      if (key == "sum") {
        if (seen_sum[cell]) fail("duplicate sum entry");
        seen_sum[cell] = true;
        for (std::size_t w = 4; w < words.size(); ++w) sums[cell].push_back(parse_index(words[w], line_no));
      } else {
        if (mul.empty()) {
          mul.assign(*n * *n, 0);
          seen_mul.assign(*n * *n, false);
        }
        if (words.size() != 5 || seen_mul[cell]) fail("malformed or duplicate mul entry");
        seen_mul[cell] = true;
        mul[cell] = parse_index(words[4], line_no);
      }
    } else {
      fail("unknown directive '" + key + "'");
    }
  }
  if (!n || !zero) throw Error(ErrorCode::usage, "table needs carrier and zero lines");
  if (std::find(seen_sum.begin(), seen_sum.end(), false) != seen_sum.end())
    throw Error(ErrorCode::usage, "sum table is not total");
  if (mul.empty()) {
    if (one) throw Error(ErrorCode::usage, "one given without multiplication");
    return MultiOpTable(*zero, std::move(sums));
  }
  if (std::find(seen_mul.begin(), seen_mul.end(), false) != seen_mul.end())
    throw Error(ErrorCode::usage, "multiplication table is not total");
  if (!one) throw Error(ErrorCode::usage, "multiplication given without one");
  return MultiOpTable(*zero, std::move(sums), std::move(mul), *one);
}

}  // namespace hyperlab
