#pragma once

/**
 * @file mc.hpp
 * @brief Maurer–Cartan objects over Δ^n, their hom complexes, simplicial
 * functoriality, the inclusion ι, the Koszul model and strictification.
 *
 * An MC object (E, η) has vertex objects E_0..E_n and an MC element η of
 * total degree -1 with η(i) = 0, satisfying δη + η∘η = 0. Morphisms are
 * cochains a with differential
 *
 *     d_{η,φ}(a) = δa + a∘η - (-1)^{|a|} φ∘a.
 */

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dgres/cochain.hpp"
#include "dgres/conventions.hpp"

namespace dgres {

class MCObject {
 public:
  MCObject() = default;
  /// Checks shapes only (total degree -1, η(i) = 0, objects match); see mc_validate.
  static MCObject make(DgCategoryPtr cat, std::vector<std::size_t> objects, SimplicialCochain eta);
  /// Object with η = 0 on every face.
  static MCObject zero(DgCategoryPtr cat, std::vector<std::size_t> objects);

  const DgCategoryPtr& category() const noexcept { return eta_.category(); }
  const DgCategory& cat() const noexcept { return eta_.cat(); }
  int n() const noexcept { return eta_.n(); }
  const std::vector<std::size_t>& objects() const noexcept { return eta_.source(); }
  std::size_t object(int i) const { return eta_.source().at(i); }
  const SimplicialCochain& eta() const noexcept { return eta_; }
  const Vector& operator[](MultiIndex I) const { return eta_[I]; }

  friend bool operator==(const MCObject& a, const MCObject& b) { return a.eta_ == b.eta_; }

 private:
  SimplicialCochain eta_;
};

/// δη + η∘η. Throws ShapeError unless η has total degree -1 and equal source and target objects.
SimplicialCochain mc_residual(const SimplicialCochain& eta);
inline SimplicialCochain mc_residual(const MCObject& x) { return mc_residual(x.eta()); }

struct MCValidation {
  bool residual_zero = false;
  std::optional<MultiIndex> first_bad;  // first face (canonical order) with nonzero residual
  struct Edge {
    int i;
    InvertibilityResult invertibility;
  };
  std::vector<Edge> edges;  // one per η(i, i+1), filled only when the residual vanishes
  bool valid = false;
};

MCValidation mc_validate(const MCObject& x);
bool mc_is_valid(const MCObject& x);

/// d_{η,φ}(a) for a from (E, η) to (F, φ).
SimplicialCochain twisted_differential(const SimplicialCochain& a, const SimplicialCochain& eta,
                                       const SimplicialCochain& phi);

struct MCMorphism {
  MCObject source;
  MCObject target;
  SimplicialCochain a;

  int total_degree() const noexcept { return a.total_degree(); }
};

/// Checks objects and the simplicial level; the bigrading is enforced by the cochain.
MCMorphism make_morphism(const MCObject& source, const MCObject& target, SimplicialCochain a);
SimplicialCochain mc_differential(const MCMorphism& f);
bool is_closed(const MCMorphism& f);
MCMorphism mc_identity(const MCObject& x);
/// b∘a; throws ObjectMismatch unless a.target == b.source.
MCMorphism mc_compose(const MCMorphism& b, const MCMorphism& a);

// ---- hom complexes ----

struct MCBasisElement {
  int degree;            // total degree t
  MultiIndex face;       // k-simplex
  std::size_t internal;  // basis index of the hom complex, in internal degree t + k
};

struct MCHomComplex {
  ChainComplex complex;
  std::vector<MCBasisElement> basis;  // total basis order of `complex`
  DgCategoryPtr cat;
  int n = 0;
  std::vector<std::size_t> source, target;
  /// face_offsets.at(t)[p]: offset of face p (canonical position) inside the degree-t block.
  std::map<int, std::vector<std::size_t>> face_offsets;

  /// Cochain of total degree t as a total vector of `complex`.
  Vector flatten(const SimplicialCochain& a) const;
  /// Degree-t part of a total vector as a cochain.
  SimplicialCochain unflatten(const Vector& total, int t) const;
};

/// Smallest window with no truncation: [min support - n, max support] over the relevant homs.
std::optional<std::pair<int, int>> required_window(const DgCategory& cat, int n, const std::vector<std::size_t>& source,
                                                   const std::vector<std::size_t>& target);

/// Default window [min support - n - 1, max support + n + 1]. Throws WindowTooSmall when the
/// given window misses part of the required one.
MCHomComplex hom_complex_mc(const MCObject& src, const MCObject& tgt,
                            std::optional<std::pair<int, int>> window = std::nullopt);

// ---- simplicial structure ----

/// Pullback along f : [m] -> [n]; degenerate edges carry identities. The MC equation is
/// re-verified (InternalInvariant on failure).
MCObject pullback(const MonotoneMap& f, const MCObject& x);
/// Repeated images give 0.
MCMorphism pullback(const MonotoneMap& f, const MCMorphism& a);

/// (σ_0)^n applied to the object at level 0: η(i,j) = id, higher components 0.
MCObject iota(DgCategoryPtr cat, std::size_t object, int n);
/// f ↦ (f, ..., f) on vertices, 0 elsewhere, as a chain map Hom(x,y) -> hom_complex_mc(ιx, ιy).
ChainMap iota_hom_map(const DgCategoryPtr& cat, std::size_t x, std::size_t y, int n,
                      std::optional<std::pair<int, int>> window = std::nullopt);

// ---- Koszul model ----

/// H ⊗ ⋀^{≥1}⟨e_0..e_n⟩ in the basis order of hom_complex_mc, h·e_I sitting at the
/// position of a(I). D = d_H + (-1)^t Σ_i e_i ∧ (-).
ChainComplex koszul_model(const ChainComplex& h, int n, std::optional<std::pair<int, int>> window = std::nullopt);
/// ⋀^{≥1}⟨e_0..e_n⟩ graded by word length, with contraction by Σ e_i.
ChainComplex exterior_contraction_complex(const Field& field, int n);

// ---- strictification ----

/// Same objects, φ(i,j) = η(j-1,j)∘...∘η(i,i+1), higher components 0.
MCObject strict_from_chain(const MCObject& x);

struct StrictifyStep {
  MCMorphism h;      // x -> target, closed of degree 0
  MCMorphism h_inv;  // target -> x
  MCObject target;
};

/// Requires η(I) = 0 whenever k >= 2 and i_k < n (InductiveHypothesisViolated).
StrictifyStep strictify_step(const MCObject& x);
/// Same construction under arbitrary sign choices; nothing is verified.
StrictifyStep strictify_candidate(const MCObject& x, const StrictificationSigns& signs);

struct StepCheck {
  bool h_closed = false;
  bool h_inv_closed = false;
  bool left_inverse = false;   // h_inv∘h = id
  bool right_inverse = false;  // h∘h_inv = id
  bool ok() const noexcept { return h_closed && h_inv_closed && left_inverse && right_inverse; }
};
StepCheck check_step(const StrictifyStep& step);

/// All sign choices whose candidate passes check_step on every sample.
std::vector<StrictificationSigns> consistent_strictification_signs(const std::vector<MCObject>& samples);

/// Strict two-sided inverse of a closed degree-0 morphism in Hom(x,y), if one exists.
std::optional<Vector> strict_inverse(const DgCategory& cat, std::size_t x, std::size_t y, const Vector& f);

/// η̃ = (g∘η + δg)∘g⁻¹ for a degree-0 cochain g with closed, strictly invertible vertex
/// components (NotClosed / NotStrictlyInvertible). Returns (E', η̃) and g as a closed morphism.
std::pair<MCObject, MCMorphism> gauge_transport(const MCObject& x, const SimplicialCochain& g);
/// Inverse of a degree-0 cochain with strictly invertible vertex components.
SimplicialCochain cochain_inverse(const SimplicialCochain& g);

struct Strictification {
  std::vector<StrictifyStep> steps;
  MCObject result;          // η = 0 on all faces of level >= 2
  MCMorphism composite;     // x -> result
  MCMorphism composite_inv; // result -> x
};

/// Kills the higher components level by level (last vertex 2, 3, ..., n).
Strictification strictify(const MCObject& x);

}  // namespace dgres
