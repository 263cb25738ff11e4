#include "dgres/simplex.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <mutex>

#include "dgres/error.hpp"

namespace dgres {

MultiIndex MultiIndex::from_entries(const std::vector<int>& entries) {
  if (entries.empty()) fail(ErrorKind::NotMonotone, "empty multi-index");
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    int v = entries[i];
    if (v < 0 || v > kMaxSimplexDim) fail(ErrorKind::NotMonotone, "multi-index entry " + std::to_string(v) + " out of range");
    if (i > 0 && entries[i - 1] >= v) fail(ErrorKind::NotMonotone, "multi-index is not strictly increasing");
    mask |= 1U << v;
  }
  return MultiIndex(mask);
}

std::vector<int> MultiIndex::entries() const {
  std::vector<int> out;
  for (std::uint32_t m = mask_; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

int MultiIndex::at(int j) const {
  std::uint32_t m = mask_;
  for (int i = 0; i < j; ++i) m &= m - 1;
  if (!m) fail(ErrorKind::ShapeError, "multi-index position out of range");
  return std::countr_zero(m);
}

MultiIndex MultiIndex::remove(int j) const { return MultiIndex(mask_ & ~(1U << at(j))); }

MultiIndex MultiIndex::front(int j) const {
  int v = at(j);
  std::uint32_t keep = (v >= 31) ? ~0U : ((1U << (v + 1)) - 1U);
  return MultiIndex(mask_ & keep);
}

MultiIndex MultiIndex::back(int j) const {
  int v = at(j);
  return MultiIndex(mask_ & ~((1U << v) - 1U));
}

std::string MultiIndex::to_string() const {
  std::string s = "(";
  bool first = true;
  for (int v : entries()) {
    if (!first) s += ",";
    first = false;
    s += std::to_string(v);
  }
  return s + ")";
}

SimplexIndex::SimplexIndex(int n) : n_(n) {
  const std::uint32_t full = (1U << (n + 1)) - 1U;
  std::vector<std::uint32_t> masks;
  for (std::uint32_t m = 1; m <= full; ++m) masks.push_back(m);
  std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    int la = std::popcount(a), lb = std::popcount(b);
    if (la != lb) return la < lb;
    return MultiIndex(a).entries() < MultiIndex(b).entries();
  });
  pos_.assign(full + 1, static_cast<std::size_t>(-1));
  for (auto m : masks) {
    pos_[m] = list_.size();
    list_.emplace_back(m);
  }
}

const SimplexIndex& SimplexIndex::of(int n) {
  if (n < 0 || n > kMaxSimplexDim) fail(ErrorKind::ShapeError, "simplex dimension " + std::to_string(n) + " unsupported");
  static std::array<std::unique_ptr<SimplexIndex>, kMaxSimplexDim + 1> cache;
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  if (!cache[n]) cache[n].reset(new SimplexIndex(n));
  return *cache[n];
}

MonotoneMap MonotoneMap::make(int n, std::vector<int> values) {
  if (values.empty()) fail(ErrorKind::NotMonotone, "monotone map needs a nonempty source");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0 || values[i] > n) fail(ErrorKind::NotMonotone, "value " + std::to_string(values[i]) + " outside [0," + std::to_string(n) + "]");
    if (i > 0 && values[i] < values[i - 1]) fail(ErrorKind::NotMonotone, "map is not monotone");
  }
  MonotoneMap f;
  f.n_ = n;
  f.values_ = std::move(values);
  return f;
}

MonotoneMap MonotoneMap::identity(int n) {
  std::vector<int> v(n + 1);
  for (int i = 0; i <= n; ++i) v[i] = i;
  return make(n, v);
}

MonotoneMap MonotoneMap::face(int n, int i) {
  if (i < 0 || i > n || n < 1) fail(ErrorKind::NotMonotone, "face index out of range");
  std::vector<int> v;
  for (int j = 0; j <= n; ++j) {
    if (j != i) v.push_back(j);
  }
  return make(n, v);
}

MonotoneMap MonotoneMap::degeneracy(int n, int i) {
  if (i < 0 || i > n) fail(ErrorKind::NotMonotone, "degeneracy index out of range");
  std::vector<int> v;
  for (int j = 0; j <= n + 1; ++j) v.push_back(j <= i ? j : j - 1);
  return make(n, v);
}

MonotoneMap operator*(const MonotoneMap& f, const MonotoneMap& g) {
  if (g.target_dim() != f.source_dim()) fail(ErrorKind::NotMonotone, "monotone maps are not composable");
  std::vector<int> v;
  for (int j : g.values_) v.push_back(f(j));
  return MonotoneMap::make(f.n_, v);
}

}  // namespace dgres
