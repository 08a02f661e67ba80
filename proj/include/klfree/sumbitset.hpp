// sumbitset.hpp
//
// Bit-indexed membership table for sumsets over a bounded integer range.
// Bit i set <=> the integer (offset + i) is a member.  Layout is
// deterministic: the owning operation fixes offset and length up front.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "klfree/intset.hpp"

namespace klfree {

class SumBitset {
 public:
  SumBitset() = default;

  SumBitset(std::int64_t offset, std::int64_t length)
      : offset_(offset), len_(length) {
    if (length < 0) throw std::invalid_argument("SumBitset: negative length");
    words_.assign(static_cast<std::size_t>((length + 63) / 64), 0);
  }

  std::int64_t offset() const { return offset_; }
  std::int64_t length() const { return len_; }
  bool empty_range() const { return len_ == 0; }

  void set(std::int64_t value) {
    std::int64_t i = value - offset_;
    words_[static_cast<std::size_t>(i >> 6)] |= (std::uint64_t{1} << (i & 63));
  }

  bool test(std::int64_t value) const {
    std::int64_t i = value - offset_;
    if (i < 0 || i >= len_) return false;
    return (words_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1;
  }

  // this |= (other shifted so that each member m of other contributes m+delta).
  // Caller guarantees the shifted range fits.
  void or_shifted(const SumBitset& other, std::int64_t delta) {
    const std::int64_t base = other.offset_ + delta - offset_;  // bit index of other's bit 0
    const std::int64_t word_shift = base >> 6;
    const int bit_shift = static_cast<int>(base & 63);
    for (std::size_t w = 0; w < other.words_.size(); ++w) {
      std::uint64_t v = other.words_[w];
      if (!v) continue;
      std::size_t dst = static_cast<std::size_t>(static_cast<std::int64_t>(w) + word_shift);
      if (bit_shift == 0) {
        words_[dst] |= v;
      } else {
        words_[dst] |= v << bit_shift;
        if (dst + 1 < words_.size()) words_[dst + 1] |= v >> (64 - bit_shift);
      }
    }
  }

  bool intersects(const SumBitset& other) const {
    const SumBitset* a = this;
    const SumBitset* b = &other;
    if (a->len_ == 0 || b->len_ == 0) return false;
    std::int64_t lo = std::max(a->offset_, b->offset_);
    std::int64_t hi = std::min(a->offset_ + a->len_, b->offset_ + b->len_);
    for (std::int64_t v = lo; v < hi; ++v) {
      // word-at-a-time over the overlap window
      std::int64_t ia = v - a->offset_, ib = v - b->offset_;
      if ((ia & 63) == 0 && (ib & 63) == 0 && v + 64 <= hi) {
        if (a->words_[static_cast<std::size_t>(ia >> 6)] &
            b->words_[static_cast<std::size_t>(ib >> 6)])
          return true;
        v += 63;
        continue;
      }
      if (a->test(v) && b->test(v)) return true;
    }
    return false;
  }

  std::int64_t count() const {
    std::int64_t c = 0;
    for (std::uint64_t w : words_) c += __builtin_popcountll(w);
    return c;
  }

  std::vector<std::int64_t> members() const {
    std::vector<std::int64_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t v = words_[w];
      while (v) {
        int b = __builtin_ctzll(v);
        out.push_back(offset_ + static_cast<std::int64_t>(w) * 64 + b);
        v &= v - 1;
      }
    }
    return out;
  }

  IntSet to_intset() const { return IntSet::of(members()); }

  // Shrinks [offset, offset+len) to the tight window containing all set bits.
  void trim() {
    auto m = members();
    if (m.empty()) {
      offset_ = 0;
      len_ = 0;
      words_.clear();
      return;
    }
    SumBitset tight(m.front(), m.back() - m.front() + 1);
    for (auto v : m) tight.set(v);
    *this = std::move(tight);
  }

  friend bool operator==(const SumBitset&, const SumBitset&) = default;

 private:
  std::int64_t offset_ = 0;
  std::int64_t len_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace klfree
