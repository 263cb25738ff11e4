#include "dgres/sset.hpp"

#include "dgres/error.hpp"
#include "dgres/simplex.hpp"

namespace dgres {

FiniteSSet FiniteSSet::make(std::vector<std::size_t> counts, std::vector<std::vector<std::vector<std::size_t>>> faces) {
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
  faces.resize(counts.size());
  if (!faces.empty()) faces[0].clear();
  for (std::size_t k = 1; k < counts.size(); ++k) {
    if (faces[k].size() != counts[k]) {
      fail(ErrorKind::SemisimplicialIdentityViolation, "dimension " + std::to_string(k) + " needs a face list for every cell");
    }
    for (std::size_t c = 0; c < counts[k]; ++c) {
      if (faces[k][c].size() != k + 1) {
        fail(ErrorKind::SemisimplicialIdentityViolation,
             "cell " + std::to_string(c) + " of dimension " + std::to_string(k) + " needs " + std::to_string(k + 1) + " faces");
      }
      for (auto f : faces[k][c]) {
        if (f >= counts[k - 1]) fail(ErrorKind::SemisimplicialIdentityViolation, "face index out of range");
      }
    }
  }
  for (std::size_t k = 2; k < counts.size(); ++k) {
    for (std::size_t c = 0; c < counts[k]; ++c) {
      for (std::size_t j = 1; j <= k; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
          std::size_t lhs = faces[k - 1][faces[k][c][j]][i];
          std::size_t rhs = faces[k - 1][faces[k][c][i]][j - 1];
          if (lhs != rhs) {
            fail(ErrorKind::SemisimplicialIdentityViolation, "cell " + std::to_string(c) + " of dimension " + std::to_string(k) +
                                                                 ": d" + std::to_string(i) + " d" + std::to_string(j) +
                                                                 " != d" + std::to_string(j - 1) + " d" + std::to_string(i));
          }
        }
      }
    }
  }
  FiniteSSet s;
  s.counts_ = std::move(counts);
  s.faces_ = std::move(faces);
  s.offsets_.assign(1, 0);
  for (auto c : s.counts_) s.offsets_.push_back(s.offsets_.back() + c);
  return s;
}

std::size_t FiniteSSet::front(int k, std::size_t c, int j) const {
  for (int l = k; l > j; --l) c = face(l, c, l);
  return c;
}

std::size_t FiniteSSet::back(int k, std::size_t c, int j) const {
  for (int l = 0; l < j; ++l) c = face(k - l, c, 0);
  return c;
}

CellRef FiniteSSet::cell_at(std::size_t pos) const {
  for (int k = 0; k <= dim(); ++k) {
    if (pos < offsets_[k + 1]) return {k, pos - offsets_[k]};
  }
  fail(ErrorKind::ShapeError, "cell position out of range");
}

namespace {

FiniteSSet simplex_like(int n, bool with_top) {
  const SimplexIndex& idx = SimplexIndex::of(n);
  std::vector<std::size_t> counts(n + 1, 0);
  std::vector<std::size_t> local(idx.size());
  for (std::size_t p = 0; p < idx.size(); ++p) local[p] = counts[idx.at(p).level()]++;
  std::vector<std::vector<std::vector<std::size_t>>> faces(n + 1);
  for (std::size_t p = 0; p < idx.size(); ++p) {
    MultiIndex I = idx.at(p);
    const int k = I.level();
    if (k == 0) continue;
    std::vector<std::size_t> f;
    for (int i = 0; i <= k; ++i) f.push_back(local[idx.position(I.remove(i))]);
    faces[k].push_back(std::move(f));
  }
  if (!with_top && n >= 0) {
    counts[n] = 0;
    faces[n].clear();
  }
  return FiniteSSet::make(std::move(counts), std::move(faces));
}

}  // namespace

FiniteSSet standard_simplex(int n) { return simplex_like(n, true); }

FiniteSSet boundary_simplex(int n) {
  if (n < 1) fail(ErrorKind::ShapeError, "boundary of Δ^0 is empty");
  return simplex_like(n, false);
}

FiniteSSet circle() { return FiniteSSet::make({1, 1}, {{}, {{0, 0}}}); }

FiniteSSet discrete(std::size_t points) { return FiniteSSet::make({points}, {{}}); }

SSetInclusion SSetInclusion::make(FiniteSSet sub, FiniteSSet ambient, std::vector<std::vector<std::size_t>> cells) {
  cells.resize(sub.counts().size());
  for (int k = 0; k <= sub.dim(); ++k) {
    if (cells[k].size() != sub.count(k)) fail(ErrorKind::NotASubcomplex, "cell map misses cells of dimension " + std::to_string(k));
    std::vector<bool> hit(ambient.count(k), false);
    for (std::size_t c = 0; c < sub.count(k); ++c) {
      std::size_t img = cells[k][c];
      if (img >= ambient.count(k)) fail(ErrorKind::NotASubcomplex, "cell image out of range in dimension " + std::to_string(k));
      if (hit[img]) fail(ErrorKind::NotASubcomplex, "cell map is not injective in dimension " + std::to_string(k));
      hit[img] = true;
      if (k == 0) continue;
      for (int i = 0; i <= k; ++i) {
        if (cells[k - 1][sub.face(k, c, i)] != ambient.face(k, img, i)) {
          fail(ErrorKind::NotASubcomplex, "cell map does not commute with face " + std::to_string(i) + " in dimension " + std::to_string(k));
        }
      }
    }
  }
  return SSetInclusion{std::move(sub), std::move(ambient), std::move(cells)};
}

SSetInclusion SSetInclusion::compose(const SSetInclusion& outer, const SSetInclusion& inner) {
  if (!(inner.ambient == outer.sub)) fail(ErrorKind::NotASubcomplex, "inclusions are not composable");
  std::vector<std::vector<std::size_t>> cells(inner.cells.size());
  for (std::size_t k = 0; k < inner.cells.size(); ++k) {
    for (auto c : inner.cells[k]) cells[k].push_back(outer.cells[k][c]);
  }
  return make(inner.sub, outer.ambient, std::move(cells));
}

SSetInclusion boundary_inclusion(int n) {
  FiniteSSet b = boundary_simplex(n);
  std::vector<std::vector<std::size_t>> cells(n);
  for (int k = 0; k < n; ++k) {
    for (std::size_t c = 0; c < b.count(k); ++c) cells[k].push_back(c);
  }
  return SSetInclusion::make(std::move(b), standard_simplex(n), std::move(cells));
}

SSetInclusion face_inclusion(int n, const std::vector<int>& vertices) {
  MultiIndex top = MultiIndex::from_entries(vertices);
  if (top.last() > n) fail(ErrorKind::NotASubcomplex, "face vertex outside Δ^" + std::to_string(n));
  const int m = top.level();
  const SimplexIndex& big = SimplexIndex::of(n);
  const SimplexIndex& small = SimplexIndex::of(m);
  std::vector<std::size_t> level_start(n + 2, 0);
  for (const auto& I : big.simplices()) ++level_start[I.level() + 1];
  for (int k = 1; k <= n + 1; ++k) level_start[k] += level_start[k - 1];
  std::vector<std::vector<std::size_t>> cells(m + 1);
  for (const auto& J : small.simplices()) {
    std::uint32_t mask = 0;
    for (int v : J.entries()) mask |= 1U << vertices[v];
    MultiIndex I(mask);
    cells[J.level()].push_back(big.position(I) - level_start[I.level()]);
  }
  return SSetInclusion::make(standard_simplex(m), standard_simplex(n), std::move(cells));
}

SSetInclusion vertex_inclusion(int n, int v) { return face_inclusion(n, {v}); }

}  // namespace dgres
