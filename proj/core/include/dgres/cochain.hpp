#pragma once

/**
 * @file cochain.hpp
 * @brief Bigraded simplicial cochains with values in a dg-category.
 *
 * A cochain of total degree t on Δ^n assigns to each face I = (i_0 < ... < i_k)
 * an element of Hom(E_{i_0}, F_{i_k}) in internal degree t + k. Sign exponents
 * use the cohomological degree |α| = -t.
 *
 *   δα(I)      = d α(I) + (-1)^{|α|} Σ_{j=1}^{k-1} (-1)^j α(I \ i_j)
 *   (φ∘η)(I)   = Σ_{j=0}^{k} (-1)^{|φ| j} φ(i_j..i_k) ∘ η(i_0..i_j)
 */

#include <vector>

#include "dgres/dgcat.hpp"
#include "dgres/simplex.hpp"

namespace dgres {

class SimplicialCochain {
 public:
  SimplicialCochain() = default;
  static SimplicialCochain zero(DgCategoryPtr cat, int n, int t, std::vector<std::size_t> source,
                                std::vector<std::size_t> target);

  const DgCategoryPtr& category() const noexcept { return cat_; }
  const DgCategory& cat() const noexcept { return *cat_; }
  int n() const noexcept { return n_; }
  int total_degree() const noexcept { return t_; }
  int sign_degree() const noexcept { return -t_; }
  const std::vector<std::size_t>& source() const noexcept { return source_; }
  const std::vector<std::size_t>& target() const noexcept { return target_; }

  /// Hom complex that the component on I lives in.
  const ChainComplex& hom_at(MultiIndex I) const { return cat_->hom(source_.at(I.first()), target_.at(I.last())); }
  int internal_degree(MultiIndex I) const { return t_ + I.level(); }

  const Vector& operator[](MultiIndex I) const { return components_[index().position(I)]; }
  /// Throws WrongDegree unless v is homogeneous of degree t + k.
  void set(MultiIndex I, Vector v);
  /// Unchecked access by canonical position.
  const Vector& component(std::size_t pos) const { return components_.at(pos); }
  Vector& mutable_component(std::size_t pos) { return components_.at(pos); }

  bool is_zero() const noexcept;
  /// True when every component of level >= 1 vanishes.
  bool is_vertex_only() const noexcept;
  const SimplexIndex& index() const { return SimplexIndex::of(n_); }

  SimplicialCochain& operator+=(const SimplicialCochain& o);
  SimplicialCochain& operator-=(const SimplicialCochain& o);
  SimplicialCochain operator-() const;
  friend SimplicialCochain operator+(SimplicialCochain a, const SimplicialCochain& b) { return a += b; }
  friend SimplicialCochain operator-(SimplicialCochain a, const SimplicialCochain& b) { return a -= b; }
  friend SimplicialCochain operator*(const Scalar& s, const SimplicialCochain& a);
  friend bool operator==(const SimplicialCochain& a, const SimplicialCochain& b);

 private:
  void check_compatible(const SimplicialCochain& o) const;

  DgCategoryPtr cat_;
  int n_ = 0;
  int t_ = 0;
  std::vector<std::size_t> source_;
  std::vector<std::size_t> target_;
  std::vector<Vector> components_;  // canonical simplex order
};

/// Internal differential applied componentwise.
SimplicialCochain d_part(const SimplicialCochain& a);
/// Signed interior-face sum.
SimplicialCochain Delta_part(const SimplicialCochain& a);
/// δ = d + Δ.
SimplicialCochain simplicial_delta(const SimplicialCochain& a);
/// Throws ObjectMismatch unless eta's targets are phi's sources.
SimplicialCochain simplicial_compose(const SimplicialCochain& phi, const SimplicialCochain& eta);

/// a(i) = id_{E_i}, higher components 0.
SimplicialCochain identity_cochain(DgCategoryPtr cat, int n, const std::vector<std::size_t>& objects);

/// Pullback along f : [m] -> [n]. Repeated images give 0, except that when
/// `unit_on_degenerate_edges` is set a degenerate edge (k = 1) gives the unit.
SimplicialCochain pullback_cochain(const MonotoneMap& f, const SimplicialCochain& a, bool unit_on_degenerate_edges);

}  // namespace dgres
