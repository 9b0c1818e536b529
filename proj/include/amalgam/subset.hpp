#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace amalgam {

using Elem = std::uint32_t;

/// Membership set over the element indices [0, universe) of one ring.
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::size_t universe) : n_(universe), words_((universe + 63) / 64, 0) {}

  static Subset full(std::size_t universe) {
    Subset s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<Elem>(i));
    return s;
  }

  static Subset of(std::size_t universe, const std::vector<Elem>& members) {
    Subset s(universe);
    for (Elem e : members) s.insert(e);
    return s;
  }

  std::size_t universe() const { return n_; }

  bool contains(Elem e) const { return (words_[e >> 6] >> (e & 63)) & 1U; }
  void insert(Elem e) { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  void erase(Elem e) { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool subset_of(const Subset& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }
  bool intersects(const Subset& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  Subset operator&(const Subset& o) const {
    Subset r(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
    return r;
  }
  Subset operator|(const Subset& o) const {
    Subset r(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | o.words_[i];
    return r;
  }
  Subset complement() const {
    Subset r(n_);
    for (std::size_t i = 0; i < n_; ++i)
      if (!contains(static_cast<Elem>(i))) r.insert(static_cast<Elem>(i));
    return r;
  }

  std::optional<Elem> first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<Elem>(i * 64 + std::countr_zero(words_[i]));
    return std::nullopt;
  }

  std::vector<Elem> elements() const {
    std::vector<Elem> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      auto w = words_[i];
      while (w) {
        out.push_back(static_cast<Elem>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      auto w = words_[i];
      while (w) {
        f(static_cast<Elem>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ULL ^ n_;
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

  /// Canonical order: by cardinality, then by the sorted member lists.
  friend bool canonical_less(const Subset& a, const Subset& b) {
    auto ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      auto diff = a.words_[i] ^ b.words_[i];
      if (diff) {
        auto low = diff & (~diff + 1);
        return (a.words_[i] & low) != 0;
      }
    }
    return false;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct SubsetHash {
  std::size_t operator()(const Subset& s) const { return s.hash(); }
};

}  // namespace amalgam
