#pragma once

/**
 * @file local_system.hpp
 * @brief The cotensor 𝒞^K: ∞-local systems over a finite semisimplicial set.
 *
 * Cochains on K follow the same bigrading and sign rules as cochains on Δ^n,
 * with index deletion replaced by face maps. The j-th splitting of a k-cell
 * pairs its back face ∂_0^j σ with its front face ∂_{j+1}..∂_k σ:
 *
 *   (φ∘η)(σ) = Σ_j (-1)^{|φ| j} φ(∂_0^j σ) ∘ η(∂_{j+1}..∂_k σ)
 *
 * η(σ) maps the object at the first vertex of σ to the one at its last vertex.
 */

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "dgres/mc.hpp"
#include "dgres/sset.hpp"

namespace dgres {

using SSetPtr = std::shared_ptr<const FiniteSSet>;

class SSetCochain {
 public:
  SSetCochain() = default;
  /// Objects are given per vertex (0-cell).
  static SSetCochain zero(DgCategoryPtr cat, SSetPtr k, int t, std::vector<std::size_t> source,
                          std::vector<std::size_t> target);

  const DgCategoryPtr& category() const noexcept { return cat_; }
  const DgCategory& cat() const noexcept { return *cat_; }
  const SSetPtr& sset() const noexcept { return k_; }
  int total_degree() const noexcept { return t_; }
  int sign_degree() const noexcept { return -t_; }
  const std::vector<std::size_t>& source() const noexcept { return source_; }
  const std::vector<std::size_t>& target() const noexcept { return target_; }

  const ChainComplex& hom_at(int k, std::size_t c) const;
  const Vector& operator()(int k, std::size_t c) const { return components_.at(k_->position(k, c)); }
  /// Throws WrongDegree unless v is homogeneous of degree t + k.
  void set(int k, std::size_t c, Vector v);
  const Vector& component(std::size_t pos) const { return components_.at(pos); }
  Vector& mutable_component(std::size_t pos) { return components_.at(pos); }

  bool is_zero() const noexcept;

  SSetCochain& operator+=(const SSetCochain& o);
  SSetCochain& operator-=(const SSetCochain& o);
  friend SSetCochain operator+(SSetCochain a, const SSetCochain& b) { return a += b; }
  friend SSetCochain operator-(SSetCochain a, const SSetCochain& b) { return a -= b; }
  friend bool operator==(const SSetCochain& a, const SSetCochain& b);

 private:
  void check_compatible(const SSetCochain& o) const;

  DgCategoryPtr cat_;
  SSetPtr k_;
  int t_ = 0;
  std::vector<std::size_t> source_, target_;
  std::vector<Vector> components_;  // canonical cell order
};

SSetCochain ls_delta(const SSetCochain& a);
/// Throws ObjectMismatch unless eta's targets are phi's sources.
SSetCochain ls_compose(const SSetCochain& phi, const SSetCochain& eta);
SSetCochain ls_twisted_differential(const SSetCochain& a, const SSetCochain& eta, const SSetCochain& phi);

class LocalSystem {
 public:
  LocalSystem() = default;
  /// Checks shapes only: total degree -1, zero on vertices, objects match.
  static LocalSystem make(DgCategoryPtr cat, SSetPtr k, std::vector<std::size_t> objects, SSetCochain eta);
  static LocalSystem zero(DgCategoryPtr cat, SSetPtr k, std::vector<std::size_t> objects);

  const DgCategoryPtr& category() const noexcept { return eta_.category(); }
  const DgCategory& cat() const noexcept { return eta_.cat(); }
  const SSetPtr& sset() const noexcept { return eta_.sset(); }
  const std::vector<std::size_t>& objects() const noexcept { return eta_.source(); }
  const SSetCochain& eta() const noexcept { return eta_; }

  friend bool operator==(const LocalSystem& a, const LocalSystem& b) { return a.eta_ == b.eta_; }

 private:
  SSetCochain eta_;
};

SSetCochain ls_residual(const LocalSystem& x);

struct LSValidation {
  bool residual_zero = false;
  std::optional<CellRef> first_bad;
  struct Edge {
    std::size_t cell;
    InvertibilityResult invertibility;
  };
  std::vector<Edge> edges;  // every 1-cell, filled only when the residual vanishes
  bool valid = false;
};

LSValidation ls_validate(const LocalSystem& x);
bool ls_is_valid(const LocalSystem& x);

struct LSBasisElement {
  int degree;
  CellRef cell;
  std::size_t internal;
};

struct LSHomComplex {
  ChainComplex complex;
  std::vector<LSBasisElement> basis;
  DgCategoryPtr cat;
  SSetPtr sset;
  std::vector<std::size_t> source, target;
  std::map<int, std::vector<std::size_t>> cell_offsets;

  Vector flatten(const SSetCochain& a) const;
  SSetCochain unflatten(const Vector& total, int t) const;
};

/// Default window [min support - dim K - 1, max support + dim K + 1]; WindowTooSmall as for hom_complex_mc.
LSHomComplex ls_hom_complex(const LocalSystem& src, const LocalSystem& tgt,
                            std::optional<std::pair<int, int>> window = std::nullopt);

/// Restriction along L ⊆ K (the sset of x must equal the inclusion's ambient set).
LocalSystem restrict(const LocalSystem& x, const SSetInclusion& inclusion);
SSetCochain restrict(const SSetCochain& a, const SSetInclusion& inclusion);
/// Restriction on hom complexes, as a chain map between the two default-window complexes
/// (or the given window for both).
ChainMap restriction_map(const LocalSystem& src, const LocalSystem& tgt, const SSetInclusion& inclusion,
                         std::optional<std::pair<int, int>> window = std::nullopt);

/// 𝒞_n ≅ 𝒞^{Δ^n}.
LocalSystem to_local_system(const MCObject& x);
SSetCochain to_sset_cochain(const SimplicialCochain& a);
/// Inverse of to_local_system; the sset must be a standard simplex.
MCObject to_mc_object(const LocalSystem& x);

}  // namespace dgres
