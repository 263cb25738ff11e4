#pragma once

/**
 * @file sset.hpp
 * @brief Finite semisimplicial sets: nondegenerate cells and face maps.
 *
 * Cells of dimension k are numbered 0..count(k)-1; face(k, c, i) is the
 * (k-1)-cell ∂_i c. The canonical cell order is by dimension, then number.
 */

#include <cstddef>
#include <string>
#include <vector>

namespace dgres {

struct CellRef {
  int dim;
  std::size_t index;
  friend bool operator==(const CellRef&, const CellRef&) = default;
};

class FiniteSSet {
 public:
  FiniteSSet() = default;
  /// faces[k][c] lists ∂_0 c, ..., ∂_k c for each k-cell (k >= 1); faces[0] is ignored.
  /// Throws SemisimplicialIdentityViolation unless ∂_i ∂_j = ∂_{j-1} ∂_i for i < j.
  static FiniteSSet make(std::vector<std::size_t> counts, std::vector<std::vector<std::vector<std::size_t>>> faces);

  /// Largest dimension with cells (-1 when empty).
  int dim() const noexcept { return static_cast<int>(counts_.size()) - 1; }
  std::size_t count(int k) const noexcept { return k >= 0 && k <= dim() ? counts_[k] : 0; }
  const std::vector<std::size_t>& counts() const noexcept { return counts_; }
  std::size_t face(int k, std::size_t c, int i) const { return faces_.at(k).at(c).at(i); }
  const std::vector<std::vector<std::vector<std::size_t>>>& faces() const noexcept { return faces_; }

  /// Front j-face: ∂_{j+1} ... ∂_k c (iterated last faces).
  std::size_t front(int k, std::size_t c, int j) const;
  /// Back (k-j)-face: ∂_0^j c.
  std::size_t back(int k, std::size_t c, int j) const;
  std::size_t first_vertex(int k, std::size_t c) const { return front(k, c, 0); }
  std::size_t last_vertex(int k, std::size_t c) const { return back(k, c, k); }

  std::size_t total_cells() const noexcept { return offsets_.empty() ? 0 : offsets_.back(); }
  /// Position in the canonical order.
  std::size_t position(int k, std::size_t c) const { return offsets_.at(k) + c; }
  CellRef cell_at(std::size_t pos) const;

  friend bool operator==(const FiniteSSet& a, const FiniteSSet& b) { return a.counts_ == b.counts_ && a.faces_ == b.faces_; }

 private:
  std::vector<std::size_t> counts_;
  std::vector<std::vector<std::vector<std::size_t>>> faces_;
  std::vector<std::size_t> offsets_;  // offsets_[k] = cells of dim < k; size dim + 2
};

/// Δ^n: k-cells are the (k+1)-subsets of [0..n] in lexicographic order.
FiniteSSet standard_simplex(int n);
/// ∂Δ^n: Δ^n without its top cell.
FiniteSSet boundary_simplex(int n);
/// One vertex and one edge with both faces at the vertex.
FiniteSSet circle();
/// `points` vertices and nothing else.
FiniteSSet discrete(std::size_t points);

/// Cell map of a sub-semisimplicial set L ⊆ K.
struct SSetInclusion {
  FiniteSSet sub;
  FiniteSSet ambient;
  std::vector<std::vector<std::size_t>> cells;  // cells[k][c] = image of the k-cell c

  /// Throws NotASubcomplex unless the map is injective and commutes with faces.
  static SSetInclusion make(FiniteSSet sub, FiniteSSet ambient, std::vector<std::vector<std::size_t>> cells);
  /// Composite L ⊆ K ⊆ M of `inner` : L ⊆ K and `outer` : K ⊆ M.
  static SSetInclusion compose(const SSetInclusion& outer, const SSetInclusion& inner);
};

/// ∂Δ^n ⊆ Δ^n.
SSetInclusion boundary_inclusion(int n);
/// Δ^0 ⊆ Δ^n at vertex v.
SSetInclusion vertex_inclusion(int n, int v);
/// Δ^m ⊆ Δ^n as the face spanned by the given increasing vertices.
SSetInclusion face_inclusion(int n, const std::vector<int>& vertices);

}  // namespace dgres
