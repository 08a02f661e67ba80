// intset.hpp
//
// Sorted sets of distinct positive 64-bit integers, plus the (k,l)
// parameter pair that drives every sum-free predicate in this library.
//
// Text formats accepted by parse_set():
//   "1,2,4"        comma-separated values
//   "1..5"         inclusive range sugar (expands to 1,2,3,4,5)
//   "1..4,9,11"    mixed
//   one value (or range) per line, for file input
// Duplicates are rejected with an error naming the offending value.

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace klfree {

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// (k,l) with k > l >= 1.  k is capped at 64: beyond that every fold
// blows the word-size overflow guard anyway.
struct KLParams {
  int k = 2;
  int l = 1;

  KLParams() = default;
  KLParams(int k_, int l_) : k(k_), l(l_) {
    if (l < 1 || k <= l) throw std::invalid_argument("KLParams: need k > l >= 1");
    if (k > 64) throw std::invalid_argument("KLParams: k capped at 64");
  }

  friend bool operator==(const KLParams&, const KLParams&) = default;
};

// Strictly increasing sequence of positive 64-bit integers.
class IntSet {
 public:
  IntSet() = default;

  // Takes any list of values; sorts and validates (positive, distinct).
  static IntSet of(std::vector<std::int64_t> values) {
    std::sort(values.begin(), values.end());
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (values[i] <= 0)
        throw std::invalid_argument("IntSet: elements must be positive, got " +
                                    std::to_string(values[i]));
      if (i > 0 && values[i] == values[i - 1])
        throw std::invalid_argument("IntSet: duplicate element " +
                                    std::to_string(values[i]));
    }
    IntSet s;
    s.elems_ = std::move(values);
    return s;
  }

  static IntSet range(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("IntSet::range: lo > hi");
    std::vector<std::int64_t> v;
    v.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t x = lo; x <= hi; ++x) v.push_back(x);
    return of(std::move(v));
  }

  const std::vector<std::int64_t>& elems() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  std::int64_t min() const { return elems_.front(); }
  std::int64_t max() const { return elems_.back(); }
  std::int64_t operator[](std::size_t i) const { return elems_[i]; }

  bool contains(std::int64_t x) const {
    return std::binary_search(elems_.begin(), elems_.end(), x);
  }

  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  friend bool operator==(const IntSet&, const IntSet&) = default;

  // Ascending-sequence lexicographic order; the tie-break order used by
  // every solver in this library.
  static bool lex_less(const IntSet& a, const IntSet& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }

  std::string str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(elems_[i]);
    }
    out += "}";
    return out;
  }

 private:
  std::vector<std::int64_t> elems_;
};

namespace detail {

inline std::int64_t parse_int_token(std::string_view tok, std::size_t index) {
  if (tok.empty()) throw ParseError("empty token at position " + std::to_string(index));
  std::int64_t value = 0;
  for (char c : tok) {
    if (c < '0' || c > '9')
      throw ParseError("invalid character '" + std::string(1, c) + "' in token " +
                       std::to_string(index) + " (\"" + std::string(tok) + "\")");
    if (value > (std::numeric_limits<std::int64_t>::max() - (c - '0')) / 10)
      throw ParseError("value out of range in token " + std::to_string(index));
    value = value * 10 + (c - '0');
  }
  return value;
}

}  // namespace detail

// Parses the documented set formats.  Token indices are 1-based in errors.
inline IntSet parse_set(std::string_view text) {
  std::vector<std::int64_t> values;
  std::set<std::int64_t> seen;
  std::size_t index = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find_first_of(",\n", pos);
    if (next == std::string_view::npos) next = text.size();
    std::string_view tok = text.substr(pos, next - pos);
    // trim
    while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t' || tok.front() == '\r'))
      tok.remove_prefix(1);
    while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t' || tok.back() == '\r'))
      tok.remove_suffix(1);
    if (!tok.empty()) {
      ++index;
      std::int64_t lo, hi;
      if (auto dots = tok.find(".."); dots != std::string_view::npos) {
        lo = detail::parse_int_token(tok.substr(0, dots), index);
        hi = detail::parse_int_token(tok.substr(dots + 2), index);
        if (lo > hi)
          throw ParseError("malformed range \"" + std::string(tok) + "\" at token " +
                           std::to_string(index));
      } else {
        lo = hi = detail::parse_int_token(tok, index);
      }
      for (std::int64_t x = lo; x <= hi; ++x) {
        if (x <= 0)
          throw ParseError("non-positive value " + std::to_string(x) + " at token " +
                           std::to_string(index));
        if (!seen.insert(x).second)
          throw ParseError("duplicate value " + std::to_string(x) + " at token " +
                           std::to_string(index));
        values.push_back(x);
      }
    }
    if (next == text.size()) break;
    pos = next + 1;
  }
  return IntSet::of(std::move(values));
}

inline KLParams parse_kl(std::string_view text) {
  auto comma = text.find(',');
  if (comma == std::string_view::npos)
    throw ParseError("expected \"k,l\", got \"" + std::string(text) + "\"");
  std::int64_t k = detail::parse_int_token(text.substr(0, comma), 1);
  std::int64_t l = detail::parse_int_token(text.substr(comma + 1), 2);
  return KLParams(static_cast<int>(k), static_cast<int>(l));
}

}  // namespace klfree
