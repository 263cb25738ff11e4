#pragma once

/**
 * @file complex.hpp
 * @brief Bounded chain complexes over a Field, chain maps and homology.
 *
 * Differentials lower degree by one: d_n : C_n -> C_{n-1}. A complex carries
 * an explicit window [lo, hi]; dims vanish outside it. Elements are "total"
 * vectors laid out degree by degree in ascending order, so a single Vector
 * can hold an inhomogeneous element.
 */

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dgres/matrix.hpp"

namespace dgres {

class ChainComplex {
 public:
  ChainComplex() : field_(Field::rationals()) {}

  /// Validates shapes and d∘d = 0. Missing differentials are zero.
  /// The window is the key range of `dims`.
  static ChainComplex make(const Field& field, const std::map<int, std::size_t>& dims,
                           const std::map<int, Matrix>& differentials = {});
  static ChainComplex zero(const Field& field);
  /// k^dim placed in a single degree.
  static ChainComplex concentrated(const Field& field, int degree, std::size_t dim = 1);

  const Field& field() const noexcept { return field_; }
  int lo() const noexcept { return lo_; }
  int hi() const noexcept { return hi_; }
  bool empty_window() const noexcept { return hi_ < lo_; }

  std::size_t dim(int n) const noexcept;
  /// d_n as a dim(n-1) x dim(n) matrix (empty shapes outside the window).
  Matrix differential(int n) const;
  std::size_t total_dim() const noexcept { return total_; }
  /// Position of the first degree-n basis vector inside a total vector.
  std::size_t offset(int n) const noexcept;
  int degree_of(std::size_t index) const;

  /// Block matrix of all d_n on total vectors (dense; meant for small complexes).
  Matrix total_differential() const;
  Vector apply_differential(const Vector& total) const;

  /// Degree-n slice of a total vector and the reverse embedding.
  Vector slice(const Vector& total, int n) const;
  Vector embed(const Vector& homogeneous, int n) const;

  /// Smallest/largest degree with nonzero dim (nullopt if the complex is zero).
  std::optional<int> min_support() const noexcept;
  std::optional<int> max_support() const noexcept;

  std::map<int, std::size_t> dims() const;

  friend bool operator==(const ChainComplex& a, const ChainComplex& b);

 private:
  void rebuild_offsets();

  Field field_;
  int lo_ = 0;
  int hi_ = -1;
  std::vector<std::size_t> dims_;   // index n - lo_
  std::vector<Matrix> d_;           // d_[n - lo_] = d_n
  std::vector<std::size_t> offsets_;
  std::size_t total_ = 0;
};

class ChainMap {
 public:
  /// components[n] : source_n -> target_{n+shift}; missing components are zero.
  static ChainMap make(const ChainComplex& source, const ChainComplex& target,
                       const std::map<int, Matrix>& components, int shift = 0);
  static ChainMap identity(const ChainComplex& c);
  static ChainMap zero(const ChainComplex& source, const ChainComplex& target, int shift = 0);

  const ChainComplex& source() const noexcept { return source_; }
  const ChainComplex& target() const noexcept { return target_; }
  int shift() const noexcept { return shift_; }
  Matrix component(int n) const;

 private:
  ChainComplex source_;
  ChainComplex target_;
  std::map<int, Matrix> components_;
  int shift_ = 0;
};

struct HomologyReport {
  std::map<int, std::size_t> ranks;                    // every degree of the window
  std::map<int, std::vector<Vector>> representatives;  // homogeneous cycles

  std::size_t rank(int n) const;
  bool acyclic() const;
  /// Ranks with zero entries removed.
  std::map<int, std::size_t> nonzero_ranks() const;
};

HomologyReport homology(const ChainComplex& c);
/// Only the ranks; skips representatives.
std::map<int, std::size_t> homology_ranks(const ChainComplex& c);
bool is_acyclic(const ChainComplex& c);

/// Coordinates of degree-n cycles with respect to fixed homology representatives.
class HomologyBasis {
 public:
  HomologyBasis(const ChainComplex& c, int n);

  std::size_t rank() const noexcept { return reps_.size(); }
  const std::vector<Vector>& representatives() const noexcept { return reps_; }
  /// Class coordinates of a degree-n vector, or nullopt if it is not a cycle.
  std::optional<Vector> class_of(const Vector& z) const;
  /// Some x with d x = z, or nullopt if z is not a boundary.
  std::optional<Vector> bounding_chain(const Vector& z) const;

 private:
  Matrix d_out_;   // d_n
  Matrix d_in_;    // d_{n+1}
  std::vector<Vector> reps_;
  Matrix reps_and_boundaries_;
};

/// cone(f)_n = target_n ⊕ source_{n-1}, d = [[d_t, f], [0, -d_s]].
ChainComplex cone(const ChainMap& f);
/// C[k]_n = C_{n-k} with differential (-1)^k d.
ChainComplex shift(const ChainComplex& c, int k);
ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b);
/// Basis ordered by (degree of a, basis of a, basis of b); d = d_a ⊗ 1 + (-1)^p 1 ⊗ d_b.
ChainComplex tensor(const ChainComplex& a, const ChainComplex& b);
bool is_quasi_iso(const ChainMap& f);

/// True when every nonzero entry of the total vector sits in degree n.
bool is_homogeneous(const ChainComplex& c, const Vector& total, int n);

std::string format_ranks(const std::map<int, std::size_t>& ranks);

}  // namespace dgres
