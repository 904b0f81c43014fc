#include "qstar/digits.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qstar {

namespace {

void check_digit(Digit d) {
  if (d > 2) throw std::invalid_argument("digit out of {0,1,2}");
}

}  // namespace

DigitWord::DigitWord(std::vector<Digit> digits) : digits_(std::move(digits)) {
  for (Digit d : digits_) check_digit(d);
}

DigitWord DigitWord::parse(std::string_view text) {
  std::vector<Digit> ds;
  ds.reserve(text.size());
  for (char c : text) {
    if (c < '0' || c > '2') throw std::invalid_argument("digit word may only contain 0, 1, 2");
    ds.push_back(static_cast<Digit>(c - '0'));
  }
  return DigitWord(std::move(ds));
}

std::string DigitWord::str() const {
  std::string s;
  s.reserve(digits_.size());
  for (Digit d : digits_) s += static_cast<char>('0' + d);
  return s;
}

void DigitWord::push_back(Digit d) {
  check_digit(d);
  digits_.push_back(d);
}

DigitWord operator+(DigitWord w, Digit d) {
  w.push_back(d);
  return w;
}

DigitSeq::DigitSeq(DigitWord prefix, DigitWord tail)
    : prefix_(std::move(prefix)), tail_(std::move(tail)) {
  if (tail_.empty()) throw std::invalid_argument("tail must be nonempty");
}

Digit DigitSeq::at(std::size_t k) const {
  if (k == 0) throw std::invalid_argument("digit positions are 1-indexed");
  if (k <= prefix_.size()) return prefix_[k - 1];
  return tail_[(k - prefix_.size() - 1) % tail_.size()];
}

DigitSeq DigitSeq::normalized() const {
  // minimal repeating block of the tail
  DigitWord tail = tail_;
  const std::size_t n = tail.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool repeats = true;
    for (std::size_t i = p; i < n && repeats; ++i) repeats = tail[i] == tail[i % p];
    if (repeats) {
      std::vector<Digit> block(tail.digits().begin(), tail.digits().begin() + p);
      tail = DigitWord(std::move(block));
      break;
    }
  }
  // absorb prefix digits that merely repeat the cycle
  DigitWord prefix = prefix_;
  while (!prefix.empty() && prefix.back() == tail.back()) {
    std::vector<Digit> rot(tail.digits());
    std::rotate(rot.rbegin(), rot.rbegin() + 1, rot.rend());
    tail = DigitWord(std::move(rot));
    prefix.pop_back();
  }
  return DigitSeq(std::move(prefix), std::move(tail));
}

std::string DigitSeq::str() const {
  return prefix_.str() + "(" + tail_.str() + ")";
}

bool operator==(const DigitSeq& a, const DigitSeq& b) {
  const DigitSeq na = a.normalized(), nb = b.normalized();
  return na.prefix() == nb.prefix() && na.tail() == nb.tail();
}

DigitSeq canonicalize(const DigitSeq& x) {
  DigitSeq n = x.normalized();
  if (n.tail().size() == 1 && n.tail()[0] == 2 && !n.prefix().empty()) {
    // w·a·(2) = w·(a+1)·(0); normalization guarantees a < 2
    DigitWord prefix = n.prefix();
    const Digit a = prefix.back();
    prefix.pop_back();
    prefix.push_back(static_cast<Digit>(a + 1));
    return DigitSeq(std::move(prefix), DigitWord::parse("0")).normalized();
  }
  return n;
}

std::optional<DigitSeq> dual_representation(const DigitSeq& x) {
  const DigitSeq n = x.normalized();
  if (n.tail().size() != 1) return std::nullopt;
  const Digit t = n.tail()[0];
  if ((t != 0 && t != 2) || n.prefix().empty()) return std::nullopt;
  DigitWord prefix = n.prefix();
  const Digit a = prefix.back();  // a != t after normalization
  prefix.pop_back();
  if (t == 0) {
    if (a == 0) return std::nullopt;  // cannot happen for normalized input
    prefix.push_back(static_cast<Digit>(a - 1));
    return DigitSeq(std::move(prefix), DigitWord::parse("2"));
  }
  prefix.push_back(static_cast<Digit>(a + 1));
  return DigitSeq(std::move(prefix), DigitWord::parse("0"));
}

int compare_lex(const DigitSeq& a, const DigitSeq& b) {
  const std::size_t bound = std::max(a.prefix().size(), b.prefix().size()) +
                            std::lcm(a.tail().size(), b.tail().size());
  for (std::size_t k = 1; k <= bound; ++k) {
    const Digit da = a.at(k), db = b.at(k);
    if (da != db) return da < db ? -1 : 1;
  }
  return 0;
}

}  // namespace qstar
