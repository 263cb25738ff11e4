#pragma once

/**
 * @file simplex.hpp
 * @brief Multi-indices (faces of the standard simplex) and monotone maps.
 *
 * A MultiIndex is a nonempty strictly increasing subset of [0..n], stored as
 * a bitmask. Simplices of Δ^n are enumerated canonically: by level k, then
 * lexicographically; every basis built on top of them uses this order.
 */

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace dgres {

inline constexpr int kMaxSimplexDim = 12;

class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::uint32_t mask) : mask_(mask) {}
  /// Throws NotMonotone unless the entries are strictly increasing and within [0, kMaxSimplexDim].
  static MultiIndex from_entries(const std::vector<int>& entries);

  std::uint32_t mask() const noexcept { return mask_; }
  int level() const noexcept { return std::popcount(mask_) - 1; }
  int size() const noexcept { return std::popcount(mask_); }
  std::vector<int> entries() const;
  int first() const noexcept { return std::countr_zero(mask_); }
  int last() const noexcept { return 31 - std::countl_zero(mask_); }
  int at(int j) const;
  bool contains(int v) const noexcept { return (mask_ >> v) & 1U; }

  /// Drops the j-th entry.
  MultiIndex remove(int j) const;
  /// Entries 0..j.
  MultiIndex front(int j) const;
  /// Entries j..k.
  MultiIndex back(int j) const;
  MultiIndex with(int v) const { return MultiIndex(mask_ | (1U << v)); }
  /// Position that v takes when inserted (v must not be present).
  int insertion_position(int v) const noexcept { return std::popcount(mask_ & ((1U << v) - 1U)); }

  std::string to_string() const;

  friend bool operator==(MultiIndex a, MultiIndex b) = default;

 private:
  std::uint32_t mask_ = 0;
};

/// Canonical enumeration of the faces of Δ^n with a reverse lookup.
class SimplexIndex {
 public:
  static const SimplexIndex& of(int n);

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return list_.size(); }
  const std::vector<MultiIndex>& simplices() const noexcept { return list_; }
  const MultiIndex& at(std::size_t i) const { return list_.at(i); }
  std::size_t position(MultiIndex I) const { return pos_.at(I.mask()); }

 private:
  explicit SimplexIndex(int n);
  int n_ = 0;
  std::vector<MultiIndex> list_;
  std::vector<std::size_t> pos_;
};

/// Monotone map [m] -> [n], given by its values.
class MonotoneMap {
 public:
  /// Throws NotMonotone when values decrease or leave [0..n].
  static MonotoneMap make(int n, std::vector<int> values);
  static MonotoneMap identity(int n);
  /// δ_i : [n-1] -> [n], skipping i.
  static MonotoneMap face(int n, int i);
  /// σ_i : [n+1] -> [n], hitting i twice.
  static MonotoneMap degeneracy(int n, int i);

  int source_dim() const noexcept { return static_cast<int>(values_.size()) - 1; }
  int target_dim() const noexcept { return n_; }
  int operator()(int j) const { return values_.at(j); }
  const std::vector<int>& values() const noexcept { return values_; }

  /// (f ∘ g)(j) = f(g(j)).
  friend MonotoneMap operator*(const MonotoneMap& f, const MonotoneMap& g);
  friend bool operator==(const MonotoneMap&, const MonotoneMap&) = default;

 private:
  int n_ = 0;
  std::vector<int> values_;
};

}  // namespace dgres
