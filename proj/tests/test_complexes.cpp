#include <catch_amalgamated.hpp>

#include <functional>

#include "dgres/complex.hpp"
#include "dgres/error.hpp"
#include "random.hpp"

using namespace dgres;
using dgres::testing::Rng;

namespace {

Matrix mat(const Field& f, std::size_t rows, std::size_t cols, std::vector<long> entries) {
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < entries.size(); ++i) m(i / cols, i % cols) = f.from_int(entries[i]);
  return m;
}

ChainComplex two_term_identity(const Field& f) { return ChainComplex::make(f, {{0, 1}, {1, 1}}, {{1, mat(f, 1, 1, {1})}}); }

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InternalInvariant;
}

}  // namespace

TEST_CASE("field arithmetic is exact", "[field]") {
  for (const Field& f : {Field::rationals(), Field::prime(2), Field::prime(5), Field::prime(101)}) {
    Rng rng(7);
    for (int i = 0; i < 50; ++i) {
      Scalar a = testing::random_scalar(f, rng, true);
      CHECK((a + (-a)).is_zero());
      CHECK((a * a.inverse()).is_one());
    }
  }
  const Field q = Field::rationals();
  CHECK(q.parse("-2/4").to_string() == "-1/2");
  CHECK(Field::prime(5).parse("7").to_string() == "2");
  CHECK(Field::from_name("fp:7").characteristic() == 7);
  CHECK(kind_of([] { Field::prime(9); }) == ErrorKind::InvalidField);
  CHECK(kind_of([] { Field::from_name("r"); }) == ErrorKind::InvalidField);
  CHECK(kind_of([] { (void)(Field::prime(3).one() + Field::prime(5).one()); }) == ErrorKind::FieldMismatch);
}

TEST_CASE("matrix rank agrees with a hand count", "[matrix]") {
  const Field q = Field::rationals();
  CHECK(mat(q, 3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9}).rank() == 2);
  CHECK(mat(Field::prime(2), 2, 2, {1, 1, 1, 1}).rank() == 1);
  CHECK(mat(Field::prime(3), 2, 2, {1, 2, 2, 1}).rank() == 1);
  CHECK(mat(q, 2, 2, {1, 2, 2, 1}).rank() == 2);
  Matrix a = mat(q, 2, 3, {1, 1, 0, 0, 1, 1});
  for (const auto& k : a.kernel_basis()) CHECK(is_zero(a * k));
  auto x = a.solve({q.from_int(1), q.from_int(2)});
  REQUIRE(x);
  CHECK(a * *x == Vector{q.from_int(1), q.from_int(2)});
  CHECK_FALSE(mat(q, 2, 1, {1, 1}).solve({q.from_int(1), q.from_int(0)}));
}

TEST_CASE("make_complex examples", "[complex]") {
  const Field q = Field::rationals();
  ChainComplex c = two_term_identity(q);
  CHECK(is_acyclic(c));
  ChainComplex d = ChainComplex::make(q, {{0, 2}});
  CHECK(homology(d).nonzero_ranks() == std::map<int, std::size_t>{{0, 2}});
  CHECK(kind_of([&] {
          ChainComplex::make(q, {{0, 1}, {1, 1}, {2, 1}}, {{1, mat(q, 1, 1, {1})}, {2, mat(q, 1, 1, {1})}});
        }) == ErrorKind::NotSquareZero);
  CHECK(kind_of([&] { ChainComplex::make(q, {{0, 1}, {1, 2}}, {{1, mat(q, 1, 1, {1})}}); }) == ErrorKind::ShapeMismatch);
}

TEST_CASE("homology examples", "[complex]") {
  const Field q = Field::rationals();
  CHECK(homology(ChainComplex::make(q, {{0, 3}})).nonzero_ranks() == std::map<int, std::size_t>{{0, 3}});
  CHECK(homology(two_term_identity(q)).nonzero_ranks().empty());
  // ⋀^{≥1}⟨e0,e1⟩ graded by word length, contraction by e0 + e1: e0∧e1 ↦ e1 - e0.
  ChainComplex ext = ChainComplex::make(q, {{1, 2}, {2, 1}}, {{2, mat(q, 2, 1, {-1, 1})}});
  auto r = homology(ext);
  CHECK(r.rank(1) == 1);
  CHECK(r.rank(2) == 0);
  for (const auto& [n, reps] : r.representatives) {
    for (const auto& z : reps) CHECK(is_zero(ext.differential(n) * z));
  }
}

TEST_CASE("cone examples", "[complex]") {
  const Field q = Field::rationals();
  ChainComplex k0 = ChainComplex::concentrated(q, 0);
  CHECK(is_acyclic(cone(ChainMap::identity(k0))));
  CHECK(homology(cone(ChainMap::zero(k0, k0))).nonzero_ranks() == std::map<int, std::size_t>{{0, 1}, {1, 1}});
  for (auto [f, expected] : std::vector<std::pair<Field, std::map<int, std::size_t>>>{
           {Field::prime(2), {{0, 1}, {1, 1}}}, {Field::rationals(), {}}}) {
    ChainComplex k = ChainComplex::concentrated(f, 0);
    ChainMap two = ChainMap::make(k, k, {{0, mat(f, 1, 1, {2})}});
    CHECK(homology(cone(two)).nonzero_ranks() == expected);
  }
  ChainComplex k1 = ChainComplex::concentrated(q, 1);
  CHECK(kind_of([&] { cone(ChainMap::zero(k0, k1, 1)); }) == ErrorKind::ShiftNotZero);
}

TEST_CASE("shift, sum and tensor examples", "[complex]") {
  const Field q = Field::rationals();
  ChainComplex k0 = ChainComplex::concentrated(q, 0);
  ChainComplex s = shift(k0, 1);
  CHECK(s.dim(1) == 1);
  CHECK(s.total_dim() == 1);
  Rng rng(3);
  ChainComplex c = testing::random_complex(q, rng, -1, 2, 2);
  CHECK(homology_ranks(tensor(k0, c)) == homology_ranks(c));
  CHECK(is_acyclic(tensor(two_term_identity(q), two_term_identity(q))));
  CHECK(tensor(two_term_identity(q), two_term_identity(q)).total_dim() == 4);
  CHECK(homology(direct_sum(k0, s)).nonzero_ranks() == std::map<int, std::size_t>{{0, 1}, {1, 1}});
  CHECK(kind_of([&] { tensor(k0, ChainComplex::concentrated(Field::prime(3), 0)); }) == ErrorKind::FieldMismatch);
}

TEST_CASE("quasi-isomorphism examples", "[complex]") {
  const Field q = Field::rationals();
  ChainComplex k0 = ChainComplex::concentrated(q, 0);
  CHECK(is_quasi_iso(ChainMap::identity(k0)));
  CHECK_FALSE(is_quasi_iso(ChainMap::zero(k0, k0)));
  CHECK(is_quasi_iso(ChainMap::zero(two_term_identity(q), ChainComplex::zero(q))));
}

TEST_CASE("random complexes: Euler characteristic, cone(id), tensor associativity", "[complex][property]") {
  for (const Field& f : {Field::rationals(), Field::prime(2), testing::f101()}) {
    Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
      ChainComplex c = testing::random_complex(f, rng, -2, 2, 3);
      long chi_dims = 0, chi_h = 0;
      for (const auto& [n, d] : c.dims()) chi_dims += (n % 2 == 0 ? 1 : -1) * static_cast<long>(d);
      for (const auto& [n, r] : homology_ranks(c)) chi_h += (n % 2 == 0 ? 1 : -1) * static_cast<long>(r);
      CHECK(chi_dims == chi_h);
      CHECK(is_acyclic(cone(ChainMap::identity(c))));
      if (trial % 4 == 0) {
        ChainComplex a = testing::random_complex(f, rng, 0, 1, 2);
        ChainComplex b = testing::random_complex(f, rng, -1, 0, 2);
        auto left = homology(tensor(tensor(a, b), c)).nonzero_ranks();
        auto right = homology(tensor(a, tensor(b, c))).nonzero_ranks();
        CHECK(left == right);
      }
    }
  }
}
