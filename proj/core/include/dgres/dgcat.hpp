#pragma once

/**
 * @file dgcat.hpp
 * @brief Finite dg-categories given by structure constants, dg-functors,
 * the homotopy category H0 and homotopy-invertibility certificates.
 *
 * Morphisms are total vectors of the hom complex (see ChainComplex). The
 * product g∘f of g in Hom(y,z) and f in Hom(x,y) is stored sparsely per pair
 * of basis indices. Composition obeys the Leibniz rule
 *
 *     d(g∘f) = (-1)^{|f|} dg∘f + g∘df,
 *
 * i.e. the usual rule for the opposite product f·g = g∘f.
 */

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "dgres/complex.hpp"

namespace dgres {

class DgCategory;
using DgCategoryPtr = std::shared_ptr<const DgCategory>;

class DgCategory {
 public:
  const Field& field() const noexcept { return field_; }
  std::size_t num_objects() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t x) const { return labels_.at(x); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Throws UnknownObject.
  std::size_t object_index(std::string_view label) const;

  const ChainComplex& hom(std::size_t x, std::size_t y) const { return homs_.at(pair(x, y)); }
  const std::vector<std::string>& basis_names(std::size_t x, std::size_t y) const { return names_.at(pair(x, y)); }
  const Vector& unit(std::size_t x) const { return units_.at(x); }

  Vector zero(std::size_t x, std::size_t y) const { return zero_vector(field_, hom(x, y).total_dim()); }
  Vector d(std::size_t x, std::size_t y, const Vector& f) const { return hom(x, y).apply_differential(f); }
  /// g∘f for g in Hom(y,z), f in Hom(x,y).
  Vector compose(std::size_t x, std::size_t y, std::size_t z, const Vector& g, const Vector& f) const;
  /// Product of basis elements b (of Hom(y,z)) and a (of Hom(x,y)); empty when zero.
  const SparseVector& product(std::size_t x, std::size_t y, std::size_t z, std::size_t b, std::size_t a) const;

  /// "Hom(x,y)[name]" for error messages and reports.
  std::string describe_basis(std::size_t x, std::size_t y, std::size_t index) const;

  /// Checks Leibniz, associativity and unit laws on every basis tuple; throws on the first witness.
  void validate() const;

 private:
  friend class DgCategoryBuilder;
  std::size_t pair(std::size_t x, std::size_t y) const { return x * labels_.size() + y; }
  std::size_t triple(std::size_t x, std::size_t y, std::size_t z) const {
    return (x * labels_.size() + y) * labels_.size() + z;
  }
  static std::uint64_t key(std::size_t b, std::size_t a) { return (static_cast<std::uint64_t>(b) << 32) | a; }

  Field field_ = Field::rationals();
  std::vector<std::string> labels_;
  std::vector<ChainComplex> homs_;
  std::vector<std::vector<std::string>> names_;
  std::vector<Vector> units_;
  std::vector<std::unordered_map<std::uint64_t, SparseVector>> products_;
};

class DgCategoryBuilder {
 public:
  explicit DgCategoryBuilder(Field field) : field_(field) {}

  std::size_t add_object(std::string label);
  /// Unset homs default to zero complexes. Names default to "e0", "e1", ...
  void set_hom(std::size_t x, std::size_t y, ChainComplex hom, std::vector<std::string> names = {});
  void set_unit(std::size_t x, Vector unit);
  /// Unit = basis vector `index` of Hom(x,x).
  void set_unit_basis(std::size_t x, std::size_t index);
  /// Structure constant: basis b of Hom(y,z) composed with basis a of Hom(x,y).
  void set_product(std::size_t x, std::size_t y, std::size_t z, std::size_t b, std::size_t a, const Vector& value);
  void set_product(std::size_t x, std::size_t y, std::size_t z, std::size_t b, std::size_t a, SparseVector value);

  /// Products with a basis-vector unit are filled in when not given explicitly.
  DgCategoryPtr build(bool validate = true) const;

 private:
  Field field_;
  std::vector<std::string> labels_;
  std::vector<std::tuple<std::size_t, std::size_t, ChainComplex, std::vector<std::string>>> homs_;
  std::vector<std::optional<Vector>> units_;
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t, std::size_t, SparseVector>> products_;
};

// ---- functors ----

class DgFunctor {
 public:
  /// maps[x * |source| + y] : Hom_s(x,y) -> Hom_t(F x, F y) on total vectors. Validated.
  static DgFunctor make(DgCategoryPtr source, DgCategoryPtr target, std::vector<std::size_t> object_map,
                        std::vector<Matrix> maps);
  static DgFunctor identity(DgCategoryPtr cat);

  const DgCategoryPtr& source() const noexcept { return source_; }
  const DgCategoryPtr& target() const noexcept { return target_; }
  std::size_t object(std::size_t x) const { return object_map_.at(x); }
  const std::vector<std::size_t>& object_map() const noexcept { return object_map_; }
  const Matrix& map(std::size_t x, std::size_t y) const { return maps_.at(x * source_->num_objects() + y); }
  Vector apply(std::size_t x, std::size_t y, const Vector& f) const { return map(x, y) * f; }
  ChainMap hom_map(std::size_t x, std::size_t y) const;

 private:
  DgCategoryPtr source_;
  DgCategoryPtr target_;
  std::vector<std::size_t> object_map_;
  std::vector<Matrix> maps_;
};

// ---- homotopy category ----

class H0Category {
 public:
  explicit H0Category(DgCategoryPtr cat);

  const DgCategory& category() const noexcept { return *cat_; }
  std::size_t dim(std::size_t x, std::size_t y) const { return basis(x, y).rank(); }
  const HomologyBasis& basis(std::size_t x, std::size_t y) const { return bases_.at(x * cat_->num_objects() + y); }

  /// Class of a degree-0 cycle given as a total vector (nullopt if not closed).
  std::optional<Vector> class_of(std::size_t x, std::size_t y, const Vector& f) const;
  /// Cycle representing the given class, as a total vector.
  Vector representative(std::size_t x, std::size_t y, const Vector& cls) const;
  Vector compose(std::size_t x, std::size_t y, std::size_t z, const Vector& cg, const Vector& cf) const;
  Vector unit_class(std::size_t x) const;

 private:
  DgCategoryPtr cat_;
  std::vector<HomologyBasis> bases_;
};

/// Builds the H0 category and checks that induced composition ignores the choice of representatives.
H0Category h0_category(const DgCategoryPtr& cat);

struct InvertibilityCertificate {
  std::size_t x = 0, y = 0;
  Vector forward;          // f in Hom(x,y)_0
  Vector backward;         // g in Hom(y,x)_0
  Vector left_homotopy;    // h in Hom(x,x)_1 with dh = g∘f - id_x
  Vector right_homotopy;   // h in Hom(y,y)_1 with dh = f∘g - id_y

  /// Re-checks closedness, degrees and both homotopies exactly.
  bool verify(const DgCategory& cat) const;
};

enum class Verdict { Yes, No, Inconclusive };
std::string to_string(Verdict v);

struct InvertibilityResult {
  Verdict verdict = Verdict::Inconclusive;
  std::optional<InvertibilityCertificate> certificate;
  std::string reason;
};

/// f must be a closed degree-0 element of Hom(x,y) (NotClosed / WrongDegree otherwise).
InvertibilityResult is_homotopy_invertible(const DgCategory& cat, std::size_t x, std::size_t y, const Vector& f);
InvertibilityResult is_homotopy_invertible(const H0Category& h0, std::size_t x, std::size_t y, const Vector& f);

struct QuasiEquivalenceReport {
  struct PairEntry {
    std::size_t x, y;
    bool quasi_iso;
    std::map<int, std::size_t> cone_ranks;
  };
  struct ObjectEntry {
    std::size_t target_object;
    std::optional<std::size_t> source_object;
    std::optional<InvertibilityCertificate> certificate;
  };
  std::vector<PairEntry> pairs;
  std::vector<ObjectEntry> objects;
  bool fully_faithful = false;
  bool essentially_surjective = false;
  Verdict verdict = Verdict::Inconclusive;
};

/// Random candidates are drawn from a generator seeded with `seed`.
QuasiEquivalenceReport is_quasi_equivalence(const DgFunctor& functor, std::uint64_t seed = 1, std::size_t random_trials = 64);

// ---- fixtures ----

namespace fixtures {

/// One object, End = k in degree 0.
DgCategoryPtr unit_k(const Field& field);
/// S(n-1): objects a, b; Hom(a,b) = k.g with g in degree n-1.
DgCategoryPtr sphere(const Field& field, int n);
/// D(n): S(n-1) plus f in degree n with df = g; Hom(a,b) basis {g, f}.
DgCategoryPtr disk(const Field& field, int n);
/// Dispatch by name ("unit_k", "sphere", "disk"); throws UnknownFixture.
DgCategoryPtr by_name(std::string_view name, const Field& field, int n);

/// One object per complex; Hom(V_i, V_j) is the internal hom, with
/// basis of matrix units ordered by (degree, source basis, target basis).
DgCategoryPtr complexes_category(const std::vector<ChainComplex>& objects);
/// One object with End = A in degree 0 for an algebra given by structure constants
/// mult[b][a] = b·a (as the composite b∘a); basis element 0 must be the unit.
DgCategoryPtr algebra(const Field& field, const std::vector<std::vector<Vector>>& mult);

}  // namespace fixtures

}  // namespace dgres
