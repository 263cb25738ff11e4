#include <catch_amalgamated.hpp>

#include <functional>

#include "dgres/error.hpp"
#include "dgres/pushout.hpp"
#include "examples.hpp"
#include "random.hpp"

using namespace dgres;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InternalInvariant;
}

Matrix identity_matrix(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

// k[t]/t^dim with basis 1, t, ..., t^{dim-1}
DgCategoryPtr truncated_polynomials(const Field& f, std::size_t dim) {
  std::vector<std::vector<Vector>> mult(dim, std::vector<Vector>(dim));
  for (std::size_t b = 0; b < dim; ++b) {
    for (std::size_t a = 0; a < dim; ++a) {
      mult[b][a] = zero_vector(f, dim);
      if (a + b < dim) mult[b][a][a + b] = f.one();
    }
  }
  return fixtures::algebra(f, mult);
}

AdjunctionData adjoin_data(DgCategoryPtr base, std::size_t x, std::size_t y, int n, Vector g, std::size_t N) {
  AdjunctionData d;
  d.base = std::move(base);
  d.x = x;
  d.y = y;
  d.n = n;
  d.g_img = std::move(g);
  d.truncation = N;
  return d;
}

}  // namespace

TEST_CASE("adjoining f of degree 1 to k", "[pushout]") {
  const Field q = Field::rationals();
  auto k = fixtures::unit_k(q);
  auto t = free_adjoin(adjoin_data(k, 0, 0, 1, k->zero(0, 0), 3));
  const auto& end = t.category->hom(0, 0);
  CHECK(end.dims() == std::map<int, std::size_t>{{0, 1}, {1, 1}, {2, 1}, {3, 1}});
  CHECK(end.total_differential().is_zero());
  const auto& words = t.hom_words(0, 0);
  REQUIRE(words.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(words[i].f_count() == i);
    CHECK(word_degree(t.data, words[i]) == static_cast<int>(i));
  }
  CHECK_FALSE(t.exact);
  CHECK_NOTHROW(t.category->validate());
}

TEST_CASE("word counts reproduce the tensor algebra", "[pushout]") {
  const Field q = Field::rationals();
  for (std::size_t dim = 1; dim <= 3; ++dim) {
    auto a = truncated_polynomials(q, dim);
    for (std::size_t N = 1; N <= 3; ++N) {
      auto t = free_adjoin(adjoin_data(a, 0, 0, 0, a->zero(0, 0), N));
      std::size_t expected = 0, power = 1;
      for (std::size_t m = 1; m <= N + 1; ++m) expected += (power *= dim);
      CHECK(t.category->hom(0, 0).dim(0) == expected);
      CHECK(t.category->hom(0, 0).total_dim() == expected);
      CHECK_NOTHROW(t.category->validate());
    }
  }
  auto a2 = truncated_polynomials(q, 2);
  CHECK(free_adjoin(adjoin_data(a2, 0, 0, 0, a2->zero(0, 0), 2)).category->hom(0, 0).dim(0) == 14);
}

TEST_CASE("adjoining a bounding cell to a sphere", "[pushout]") {
  for (const Field& f : {Field::rationals(), Field::prime(3)}) {
    for (int m : {0, 1, 2}) {
      auto s = fixtures::sphere(f, m);
      auto t = free_adjoin(adjoin_data(s, 0, 1, m, unit_vector(f, 1, 0), 2));
      CHECK(t.exact);
      CHECK(is_acyclic(t.category->hom(0, 1)));
      CHECK(t.category->hom(0, 1).dims() == std::map<int, std::size_t>{{m - 1, 1}, {m, 1}});
      CHECK(homology(t.category->hom(0, 0)).nonzero_ranks() == std::map<int, std::size_t>{{0, 1}});
      CHECK(t.category->hom(1, 0).total_dim() == 0);
      CHECK_NOTHROW(t.category->validate());
    }
  }
}

TEST_CASE("dimension formula with g = 0 and no reverse homs", "[pushout]") {
  const Field q = Field::rationals();
  for (int m : {0, 1}) {
    for (int n : {-1, 0, 2}) {
      auto s = fixtures::sphere(q, m);
      auto t = free_adjoin(adjoin_data(s, 0, 1, n, s->zero(0, 1), 3));
      CHECK(t.exact);
      const auto& h = t.category->hom(0, 1);
      const auto& base = s->hom(0, 1);
      const std::size_t words = s->hom(1, 1).total_dim() * s->hom(0, 0).total_dim();
      CHECK(h.total_dim() == base.total_dim() + words);
      for (int d = -3; d <= 3; ++d) CHECK(h.dim(d) == base.dim(d) + (d == n ? words : 0));
    }
  }
}

TEST_CASE("truncation that would be unsound", "[pushout]") {
  const Field q = Field::rationals();
  auto k = fixtures::unit_k(q);
  CHECK(kind_of([&] { free_adjoin(adjoin_data(k, 0, 0, 1, k->unit(0), 2)); }) == ErrorKind::TruncationUnsound);
  CHECK(kind_of([&] { free_adjoin(adjoin_data(k, 0, 0, 2, k->unit(0), 2)); }) == ErrorKind::WrongDegree);
  auto d = fixtures::disk(q, 1);
  CHECK(kind_of([&] { free_adjoin(adjoin_data(d, 0, 1, 2, Vector{q.zero(), q.one()}, 2)); }) == ErrorKind::NotClosed);
}

TEST_CASE("induced functors", "[pushout][qequiv]") {
  const Field q = Field::rationals();
  SECTION("identity") {
    auto s = fixtures::sphere(q, 1);
    auto t = free_adjoin(adjoin_data(s, 0, 1, 1, unit_vector(q, 1, 0), 2));
    auto g = induced_functor(DgFunctor::identity(s), t, t);
    for (std::size_t x = 0; x < 2; ++x) {
      for (std::size_t y = 0; y < 2; ++y) CHECK(g.map(x, y) == identity_matrix(q, t.category->hom(x, y).total_dim()));
    }
  }
  SECTION("quasi-equivalence with an acyclic summand, g ≠ 0") {
    auto s = fixtures::sphere(q, 1);
    auto e = testing::quiver_category(q, {"a", "b"}, {{"g", 0, 1, 0, ""}, {"u", 0, 1, 0, ""}, {"v", 0, 1, 1, "u"}});
    Matrix g_map(q, 3, 1);
    g_map(testing::basis_index(*e, 0, 1, "g"), 0) = q.one();
    DgFunctor F = DgFunctor::make(s, e, {0, 1}, {identity_matrix(q, 1), g_map, Matrix(q, 0, 0), identity_matrix(q, 1)});
    REQUIRE(is_quasi_equivalence(F).verdict == Verdict::Yes);
    auto ts = free_adjoin(adjoin_data(s, 0, 1, 1, unit_vector(q, 1, 0), 2));
    auto te = free_adjoin(adjoin_data(e, 0, 1, 1, testing::basis_vector(*e, 0, 1, "g"), 2));
    REQUIRE(ts.exact);
    REQUIRE(te.exact);
    auto r = is_quasi_equivalence(induced_functor(F, ts, te));
    CHECK(r.verdict == Verdict::Yes);
  }
  SECTION("quasi-equivalence of dg-algebras, g = 0") {
    Matrix d(q, 2, 1);
    d(1, 0) = q.one();
    ChainComplex w = ChainComplex::make(q, {{0, 2}, {1, 1}}, {{1, d}});
    auto k = fixtures::unit_k(q);
    auto e = fixtures::complexes_category({w});
    Matrix unit_map(q, e->hom(0, 0).total_dim(), 1);
    for (std::size_t i = 0; i < unit_map.rows(); ++i) unit_map(i, 0) = e->unit(0)[i];
    DgFunctor F = DgFunctor::make(k, e, {0}, {unit_map});
    REQUIRE(is_quasi_equivalence(F).verdict == Verdict::Yes);
    auto tk = free_adjoin(adjoin_data(k, 0, 0, 1, k->zero(0, 0), 1));
    auto te = free_adjoin(adjoin_data(e, 0, 0, 1, e->zero(0, 0), 1));
    CHECK(is_quasi_equivalence(induced_functor(F, tk, te)).verdict == Verdict::Yes);
  }
  SECTION("negative control: killing g") {
    auto s = fixtures::sphere(q, 1);
    DgCategoryBuilder b(q);
    b.add_object("a");
    b.add_object("b");
    b.set_hom(0, 0, ChainComplex::concentrated(q, 0), {"id_a"});
    b.set_hom(1, 1, ChainComplex::concentrated(q, 0), {"id_b"});
    b.set_unit_basis(0, 0);
    b.set_unit_basis(1, 0);
    auto two = b.build();
    DgFunctor F = DgFunctor::make(s, two, {0, 1}, {identity_matrix(q, 1), Matrix(q, 0, 1), Matrix(q, 0, 0), identity_matrix(q, 1)});
    CHECK(is_quasi_equivalence(F).verdict == Verdict::No);
    auto ts = free_adjoin(adjoin_data(s, 0, 1, 1, unit_vector(q, 1, 0), 2));
    auto tt = free_adjoin(adjoin_data(two, 0, 1, 1, two->zero(0, 1), 2));
    auto r = is_quasi_equivalence(induced_functor(F, ts, tt));
    CHECK(r.verdict == Verdict::No);
    CHECK_FALSE(r.fully_faithful);
    CHECK(homology(tt.category->hom(0, 1)).nonzero_ranks() == std::map<int, std::size_t>{{1, 1}});
  }
  SECTION("incompatible data") {
    auto s = fixtures::sphere(q, 1);
    auto t1 = free_adjoin(adjoin_data(s, 0, 1, 1, unit_vector(q, 1, 0), 2));
    auto t2 = free_adjoin(adjoin_data(s, 0, 1, 1, unit_vector(q, 1, 0), 3));
    CHECK(kind_of([&] { induced_functor(DgFunctor::identity(s), t1, t2); }) == ErrorKind::IncompatibleData);
  }
}
