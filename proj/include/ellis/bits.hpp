#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ellis {

/// Subset of {0, ..., n-1} as a packed bit vector.
///
/// Group and semigroup elements are dense integer indices throughout this
/// library, so subsets of a carrier are values of this type. The width is
/// fixed at construction and all binary operations require equal widths.
class Bits {
 public:
  Bits() = default;

  explicit Bits(std::size_t n, bool all = false)
      : n_(n), w_((n + 63) / 64, all ? ~std::uint64_t{0} : 0) {
    trim();
  }

  static Bits singleton(std::size_t n, std::size_t i) {
    Bits b(n);
    b.set(i);
    return b;
  }

  /// Parses a 0/1 string; character k gives membership of element k.
  static Bits from_string(const std::string& s) {
    Bits b(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1') {
        b.set(i);
      } else if (s[i] != '0') {
        throw std::invalid_argument("bitstring may contain only 0 and 1");
      }
    }
    return b;
  }

  std::size_t size() const { return n_; }

  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

  void set(std::size_t i, bool v = true) {
    if (v) {
      w_[i >> 6] |= std::uint64_t{1} << (i & 63);
    } else {
      w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += std::size_t(std::popcount(w));
    return c;
  }

  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }

  bool none() const { return !any(); }

  /// Least member, or -1 when empty.
  int first() const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k]) return int(k * 64 + std::size_t(std::countr_zero(w_[k])));
    return -1;
  }

  /// Least member strictly greater than `after`, or -1.
  int next(int after) const {
    std::size_t i = std::size_t(after) + 1;
    if (i >= n_) return -1;
    std::size_t k = i >> 6;
    std::uint64_t w = w_[k] & (~std::uint64_t{0} << (i & 63));
    while (true) {
      if (w) return int(k * 64 + std::size_t(std::countr_zero(w)));
      if (++k == w_.size()) return -1;
      w = w_[k];
    }
  }

  Bits& operator&=(const Bits& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  Bits& operator|=(const Bits& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }
  Bits& operator^=(const Bits& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    return *this;
  }

  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  friend Bits operator^(Bits a, const Bits& b) { return a ^= b; }

  Bits complement() const {
    Bits r(n_);
    for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = ~w_[k];
    r.trim();
    return r;
  }

  bool subset_of(const Bits& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }

  bool intersects(const Bits& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }

  bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Bits& o) const { return !(*this == o); }

  bool operator<(const Bits& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return w_ < o.w_;
  }

  std::vector<int> elements() const {
    std::vector<int> v;
    v.reserve(count());
    for (int i = first(); i >= 0; i = next(i)) v.push_back(i);
    return v;
  }

  std::string to_string() const {
    std::string s(n_, '0');
    for (int i = first(); i >= 0; i = next(i)) s[std::size_t(i)] = '1';
    return s;
  }

  std::string to_set_string() const {
    std::string s = "{";
    bool sep = false;
    for (int i = first(); i >= 0; i = next(i)) {
      if (sep) s += ",";
      s += std::to_string(i);
      sep = true;
    }
    return s + "}";
  }

  std::uint64_t hash() const {
    std::uint64_t h = 1469598103934665603ull ^ n_;
    for (auto w : w_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return h;
  }

  template <class F>
  void for_each(F f) const {
    for (int i = first(); i >= 0; i = next(i)) f(i);
  }

 private:
  void trim() {
    if (!w_.empty() && (n_ & 63)) w_.back() &= (~std::uint64_t{0}) >> (64 - (n_ & 63));
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace ellis
