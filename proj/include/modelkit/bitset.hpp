#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace modelkit {

/* Fixed-width dynamic bitset. All binary operations require equal widths. */
class Bits {
 public:
  Bits() = default;
  explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}

  static Bits ones(int n) {
    Bits b(n);
    for (auto& w : b.w_) w = ~0ull;
    b.trim();
    return b;
  }

  int size() const { return n_; }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { w_[i >> 6] |= 1ull << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(1ull << (i & 63)); }

  int count() const {
    int c = 0;
    for (auto w : w_) c += __builtin_popcountll(w);
    return c;
  }
  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  Bits& operator&=(const Bits& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bits& operator|=(const Bits& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }

  Bits complement() const {
    Bits r(n_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
    r.trim();
    return r;
  }

  bool subset_of(const Bits& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Bits& o) const { return !(*this == o); }
  /* total order (value of the bit pattern read as an integer) */
  bool operator<(const Bits& o) const {
    for (size_t i = w_.size(); i-- > 0;)
      if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
    return false;
  }

  /* index of the first set bit at or after `from`, or -1 */
  int next(int from) const {
    for (int i = from; i < n_;) {
      uint64_t w = w_[i >> 6] >> (i & 63);
      if (w) return i + __builtin_ctzll(w);
      i = (i & ~63) + 64;
    }
    return -1;
  }

  std::string to_string() const {
    std::string s(n_, '0');
    for (int i = 0; i < n_; ++i)
      if (test(i)) s[i] = '1';
    return s;
  }

  /* index of the lowest bit where a and b differ, or -1 when equal */
  friend int first_diff(const Bits& a, const Bits& b) {
    for (size_t i = 0; i < a.w_.size(); ++i)
      if (uint64_t x = a.w_[i] ^ b.w_[i])
        return static_cast<int>(i * 64 + __builtin_ctzll(x));
    return -1;
  }

 private:
  void trim() {
    if (n_ & 63) w_.back() &= (1ull << (n_ & 63)) - 1;
  }
  int n_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace modelkit
