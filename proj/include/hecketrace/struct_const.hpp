#pragma once

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hecketrace/hecke.hpp"

namespace hecketrace {

inline constexpr std::size_t kDefaultStructConstEntries = 20'000'000;

/// Memoised structure constants c_{y,z}^{z'} defined by T~_y T~_z = sum_{z'} c_{y,z}^{z'} T~_{z'}.
/// Recursion on y = s y' (s the smallest left descent):
///   c_{y,z}^{z'} = c_{y',z}^{sz'} + (v - v^{-1}) [sz' < z'] c_{y',z}^{z'},  c_{1,z}^{z'} = [z = z'].
/// Inserts are idempotent, so concurrent callers always observe the same values.
/// The cache never evicts; exceeding the entry limit throws BudgetExceeded.
class StructConstCache {
 public:
  explicit StructConstCache(const CartanDatum& datum, std::size_t max_entries = kDefaultStructConstEntries)
      : datum_(&datum), max_entries_(max_entries) {}

  const CartanDatum& datum() const { return *datum_; }

  LaurentPoly get(ElementId y, ElementId z, ElementId zp) {
    if (y == datum_->identity()) return z == zp ? LaurentPoly(1) : LaurentPoly{};
    const Key key = pack(y, z, zp);
    {
      std::lock_guard<std::mutex> lock(mutex_);
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    const int s = datum_->first_left_descent(y);
    const ElementId yp = datum_->left_mul(s, y);
    const ElementId szp = datum_->left_mul(s, zp);
    LaurentPoly value = get(yp, z, szp);
    if (datum_->length(szp) < datum_->length(zp)) value += get(yp, z, zp).times_delta();
    std::lock_guard<std::mutex> lock(mutex_);
    if (memo_.size() >= max_entries_)
      throw BudgetExceeded("budget exceeded: structure-constant cache holds " + std::to_string(memo_.size()) +
                           " entries");
    memo_.emplace(key, value);
    return value;
  }

  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return memo_.size();
  }

 private:
  using Key = std::uint64_t;
  Key pack(ElementId y, ElementId z, ElementId zp) const {
    const auto n = static_cast<Key>(datum_->order());
    return (static_cast<Key>(y) * n + z) * n + zp;
  }

  const CartanDatum* datum_;
  std::size_t max_entries_;
  mutable std::mutex mutex_;
  std::unordered_map<Key, LaurentPoly> memo_;
};

inline LaurentPoly struct_const(const WeylElement& y, const WeylElement& z, const WeylElement& zp) {
  require_same_datum(y, z);
  require_same_datum(y, zp);
  StructConstCache cache(y.datum());
  return cache.get(y.id(), z.id(), zp.id());
}

/// Sparse vector over W in the T~ basis with a dense scratch area for applying generators.
/// Applying T~_s on the left is one step of the structure-constant recursion for all z' at once.
class TildeWorkspace {
 public:
  using Sparse = std::vector<std::pair<ElementId, LaurentPoly>>;

  explicit TildeWorkspace(const CartanDatum& datum)
      : datum_(&datum), slots_(datum.order()), live_(datum.order(), 0) {}

  /// T~_s * x, returned sorted by element id.
  Sparse left_generator(int s, const Sparse& x) {
    const CartanDatum& d = *datum_;
    for (const auto& [w, c] : x) {
      const ElementId sw = d.left_mul(s, w);
      touch(sw) += c;
      if (d.length(sw) < d.length(w)) touch(w) += c.times_delta();
    }
    return harvest();
  }

  /// T~_y * T~_z, applying the letters of the reduced word of y right to left.
  Sparse product(ElementId y, ElementId z) {
    Sparse x{{z, LaurentPoly(1)}};
    const Word& word = datum_->reduced_word(y);
    for (auto it = word.rbegin(); it != word.rend(); ++it) x = left_generator(*it, x);
    return x;
  }

 private:
  LaurentPoly& touch(ElementId w) {
    if (live_[w] == 0) {
      live_[w] = 1;
      touched_.push_back(w);
    }
    return slots_[w];
  }

  Sparse harvest() {
    std::sort(touched_.begin(), touched_.end());
    Sparse out;
    out.reserve(touched_.size());
    for (ElementId w : touched_) {
      if (!slots_[w].is_zero()) out.emplace_back(w, std::move(slots_[w]));
      slots_[w] = LaurentPoly{};
      live_[w] = 0;
    }
    touched_.clear();
    return out;
  }

  const CartanDatum* datum_;
  std::vector<LaurentPoly> slots_;
  std::vector<char> live_;
  std::vector<ElementId> touched_;
};

/// Coefficient of T~_{target} in a sorted sparse vector.
inline LaurentPoly sparse_coeff(const TildeWorkspace::Sparse& x, ElementId target) {
  auto it = std::lower_bound(x.begin(), x.end(), target,
                             [](const auto& entry, ElementId t) { return entry.first < t; });
  return (it != x.end() && it->first == target) ? it->second : LaurentPoly{};
}

}  // namespace hecketrace
