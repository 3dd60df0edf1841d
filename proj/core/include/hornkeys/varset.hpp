#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <vector>

namespace hornkeys {

using Var = std::size_t;

/// A subset of the universe {0, ..., n-1}, stored as a packed bitset.
///
/// Sets over different universe sizes never compare equal. Ordering is the
/// canonical one used for every printed family: lexicographic on the sorted
/// element sequence (so {0,1} < {0,1,2} < {0,2} < {1}).
class VarSet {
public:
  static constexpr Var npos = static_cast<Var>(-1);

  VarSet() = default;
  explicit VarSet(std::size_t universe)
      : n_(universe), words_((universe + 63) / 64, 0) {}
  VarSet(std::size_t universe, std::initializer_list<Var> elems) : VarSet(universe) {
    for (Var v : elems) insert(v);
  }

  static VarSet full(std::size_t universe) {
    VarSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  /// Low `universe` bits of `mask`; universe must be <= 64.
  static VarSet from_mask(std::size_t universe, std::uint64_t mask) {
    VarSet s(universe);
    if (!s.words_.empty()) s.words_[0] = mask;
    s.trim();
    return s;
  }

  template <class Range>
  static VarSet from_range(std::size_t universe, const Range& elems) {
    VarSet s(universe);
    for (auto v : elems) s.insert(static_cast<Var>(v));
    return s;
  }

  std::size_t universe() const noexcept { return n_; }

  bool contains(Var v) const noexcept {
    return v < n_ && ((words_[v >> 6] >> (v & 63)) & 1U);
  }
  void insert(Var v) noexcept { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(Var v) noexcept { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  std::size_t size() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const noexcept {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool is_subset_of(const VarSet& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool intersects(const VarSet& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  VarSet& operator|=(const VarSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VarSet& operator&=(const VarSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VarSet& operator-=(const VarSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VarSet operator|(VarSet a, const VarSet& b) { return a |= b; }
  friend VarSet operator&(VarSet a, const VarSet& b) { return a &= b; }
  friend VarSet operator-(VarSet a, const VarSet& b) { return a -= b; }

  VarSet complement() const {
    VarSet c(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) c.words_[i] = ~words_[i];
    c.trim();
    return c;
  }

  /// Smallest element >= from, or npos.
  Var next(Var from) const noexcept {
    if (from >= n_) return npos;
    std::size_t wi = from >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w) return (wi << 6) + static_cast<Var>(std::countr_zero(w));
      if (++wi == words_.size()) return npos;
      w = words_[wi];
    }
  }
  Var first() const noexcept { return next(0); }

  std::vector<Var> elements() const {
    std::vector<Var> out;
    out.reserve(size());
    for (Var v = first(); v != npos; v = next(v + 1)) out.push_back(v);
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (Var v = first(); v != npos; v = next(v + 1)) f(v);
  }

  std::uint64_t low_word() const noexcept { return words_.empty() ? 0 : words_[0]; }

  friend bool operator==(const VarSet& a, const VarSet& b) noexcept {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

  /// Lexicographic order on sorted element lists; universe size breaks ties
  /// only between otherwise-equal sets.
  friend std::strong_ordering operator<=>(const VarSet& a, const VarSet& b) noexcept {
    const std::size_t nw = std::min(a.words_.size(), b.words_.size());
    for (std::size_t i = 0; i < nw; ++i) {
      const std::uint64_t d = a.words_[i] ^ b.words_[i];
      if (!d) continue;
      const Var p = (i << 6) + static_cast<Var>(std::countr_zero(d));
      // The first element where the sequences diverge is p; whoever lacks it
      // either continues with something larger (and is greater) or ends (and
      // is a prefix, hence smaller).
      const bool a_has = a.contains(p);
      const VarSet& lacking = a_has ? b : a;
      const bool lacking_continues = lacking.next(p + 1) != npos;
      const bool a_less = a_has ? lacking_continues : !lacking_continues;
      return a_less ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    const auto tail_nonempty = [](const VarSet& s, std::size_t from) {
      for (std::size_t i = from; i < s.words_.size(); ++i)
        if (s.words_[i]) return true;
      return false;
    };
    const bool at = tail_nonempty(a, nw), bt = tail_nonempty(b, nw);
    if (at != bt) return at ? std::strong_ordering::greater : std::strong_ordering::less;
    return a.n_ <=> b.n_;
  }

  std::size_t hash() const noexcept {
    std::size_t h = n_ * 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

private:
  void trim() noexcept {
    if (n_ & 63) words_.back() &= (std::uint64_t{1} << (n_ & 63)) - 1;
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Family of subsets; kept as a plain vector, sorted canonically where it matters.
using SetFamily = std::vector<VarSet>;

inline std::ostream& operator<<(std::ostream& os, const VarSet& s) {
  os << '{';
  bool first = true;
  s.for_each([&](Var v) {
    if (!first) os << ',';
    os << v;
    first = false;
  });
  return os << '}';
}

}  // namespace hornkeys

template <>
struct std::hash<hornkeys::VarSet> {
  std::size_t operator()(const hornkeys::VarSet& s) const noexcept { return s.hash(); }
};
