#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qstar {

using Digit = std::uint8_t;  // 0, 1 or 2

/// Finite word over {0,1,2}; addresses the cylinder of all points whose
/// expansion starts with it. May be empty (the whole interval).
class DigitWord {
 public:
  DigitWord() = default;
  explicit DigitWord(std::vector<Digit> digits);

  /// Parses "021"; the empty string is the empty word.
  static DigitWord parse(std::string_view text);

  std::string str() const;

  std::size_t size() const noexcept { return digits_.size(); }
  bool empty() const noexcept { return digits_.empty(); }
  Digit operator[](std::size_t i) const { return digits_[i]; }
  const std::vector<Digit>& digits() const noexcept { return digits_; }

  void push_back(Digit d);
  void pop_back() { digits_.pop_back(); }
  Digit back() const { return digits_.back(); }

  friend bool operator==(const DigitWord&, const DigitWord&) = default;
  friend std::strong_ordering operator<=>(const DigitWord& a, const DigitWord& b) {
    return a.digits_ <=> b.digits_;
  }

 private:
  std::vector<Digit> digits_;
};

/// Appends a digit; convenience for building child cylinder addresses.
DigitWord operator+(DigitWord w, Digit d);

/// Eventually periodic digit sequence: prefix followed by tail repeated
/// forever. Two sequences with the same digit stream compare equal even if
/// split differently.
class DigitSeq {
 public:
  DigitSeq(DigitWord prefix, DigitWord tail);

  const DigitWord& prefix() const noexcept { return prefix_; }
  const DigitWord& tail() const noexcept { return tail_; }

  /// 1-indexed digit α_k.
  Digit at(std::size_t k) const;

  /// Unique normal form: minimal tail period, prefix as short as possible.
  DigitSeq normalized() const;

  /// "01(2)" — prefix then the repeating block in parentheses.
  std::string str() const;

  friend bool operator==(const DigitSeq& a, const DigitSeq& b);

 private:
  DigitWord prefix_;
  DigitWord tail_;
};

/// Value-preserving rewrite to the canonical form: no sequence ends in
/// all 2s except the point 1 itself.
DigitSeq canonicalize(const DigitSeq& x);

/// The other representation of a point with two of them: trailing (0) with a
/// nonzero last prefix digit <-> trailing (2) with last digit below 2.
/// Nothing for sequences of any other shape (and for the endpoints 0, 1).
std::optional<DigitSeq> dual_representation(const DigitSeq& x);

/// Lexicographic comparison of the digit streams: -1, 0 or +1.
int compare_lex(const DigitSeq& a, const DigitSeq& b);

}  // namespace qstar
