#include <catch_amalgamated.hpp>

#include <functional>

#include "dgres/error.hpp"
#include "dgres/local_system.hpp"
#include "examples.hpp"
#include "random.hpp"

using namespace dgres;
using dgres::testing::Rng;

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

bool same_complex(const ChainComplex& a, const ChainComplex& b) { return a.dims() == b.dims() && a.total_differential() == b.total_differential(); }

LocalSystem circle_system(const DgCategoryPtr& k, long lambda) {
  auto s = std::make_shared<const FiniteSSet>(circle());
  auto eta = SSetCochain::zero(k, s, -1, {0}, {0});
  eta.set(1, 0, Vector{k->field().from_int(lambda)});
  return LocalSystem::make(k, s, {0}, std::move(eta));
}

// every entry 0 or 1, one 1 per row, at most one per column
bool is_coordinate_projection(const Matrix& m) {
  std::vector<int> per_col(m.cols(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    int ones = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c).is_zero()) continue;
      if (!m(r, c).is_one()) return false;
      ++ones;
      ++per_col[c];
    }
    if (ones != 1) return false;
  }
  for (int c : per_col) {
    if (c > 1) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("semisimplicial sets", "[sset]") {
  CHECK(standard_simplex(3).counts() == std::vector<std::size_t>{4, 6, 4, 1});
  CHECK(boundary_simplex(3).counts() == std::vector<std::size_t>{4, 6, 4});
  CHECK(boundary_simplex(1).counts() == std::vector<std::size_t>{2});
  CHECK(circle().counts() == std::vector<std::size_t>{1, 1});
  CHECK(discrete(3).dim() == 0);
  auto d2 = standard_simplex(2);
  // edges (0,1), (0,2), (1,2)
  CHECK(d2.face(2, 0, 0) == 2);
  CHECK(d2.face(2, 0, 2) == 0);
  CHECK(d2.first_vertex(2, 0) == 0);
  CHECK(d2.last_vertex(2, 0) == 2);
  CHECK(kind_of([] { FiniteSSet::make({3, 3, 1}, {{}, {{1, 0}, {2, 0}, {2, 1}}, {{0, 1, 2}}}); }) ==
        ErrorKind::SemisimplicialIdentityViolation);
  CHECK_NOTHROW(FiniteSSet::make({3, 3, 1}, {{}, {{1, 0}, {2, 0}, {2, 1}}, {{2, 1, 0}}}));
}

TEST_CASE("local systems on Δ^n agree with MC objects", "[cotensor][property]") {
  Rng rng(81);
  for (int n = 0; n <= 3; ++n) {
    for (int trial = 0; trial < 3; ++trial) {
      auto cat = testing::random_copies_category(testing::f101(), rng, 2);
      auto x = testing::random_mc(cat, testing::cycling_objects(n, 2), rng);
      auto y = testing::random_mc(cat, testing::constant_objects(n, 1), rng);
      auto lx = to_local_system(x);
      auto ly = to_local_system(y);
      CHECK(ls_residual(lx).is_zero());
      CHECK(ls_is_valid(lx) == mc_is_valid(x));
      CHECK(to_mc_object(lx) == x);
      CHECK(same_complex(ls_hom_complex(lx, ly).complex, hom_complex_mc(x, y).complex));
      auto a = testing::random_cochain(cat, n, 0, x.objects(), y.objects(), rng);
      CHECK(ls_twisted_differential(to_sset_cochain(a), lx.eta(), ly.eta()) == to_sset_cochain(twisted_differential(a, x.eta(), y.eta())));
    }
  }
  auto bad = testing::mc_example_n2(Field::rationals(), false);
  auto v = ls_validate(to_local_system(bad));
  CHECK_FALSE(v.valid);
  REQUIRE(v.first_bad);
  CHECK(*v.first_bad == CellRef{2, 0});
}

TEST_CASE("circle local systems", "[cotensor][circle]") {
  const Field q = Field::rationals();
  auto k = fixtures::unit_k(q);
  for (long lambda : {1L, 2L, -3L}) {
    auto x = circle_system(k, lambda);
    CHECK(ls_is_valid(x));
    CHECK(homology(ls_hom_complex(x, x).complex).nonzero_ranks() == std::map<int, std::size_t>{{-1, 1}, {0, 1}});
    for (long mu : {1L, 2L, -3L}) {
      if (mu == lambda) continue;
      CHECK(is_acyclic(ls_hom_complex(x, circle_system(k, mu)).complex));
    }
  }
  auto zero = circle_system(k, 0);
  CHECK(ls_residual(zero).is_zero());
  CHECK_FALSE(ls_is_valid(zero));
}

TEST_CASE("boundary of Δ^1 splits homs as products", "[cotensor]") {
  Rng rng(82);
  auto cat = testing::random_copies_category(testing::f101(), rng, 2);
  auto s = std::make_shared<const FiniteSSet>(boundary_simplex(1));
  auto x = LocalSystem::zero(cat, s, {0, 1});
  auto y = LocalSystem::zero(cat, s, {1, 1});
  auto h = ls_hom_complex(x, y, std::pair{-4, 4});
  auto h0 = cat->hom(0, 1), h1 = cat->hom(1, 1);
  for (int q = -4; q <= 4; ++q) CHECK(h.complex.dim(q) == h0.dim(q) + h1.dim(q));
  CHECK(homology(h.complex).nonzero_ranks() == homology(direct_sum(h0, h1)).nonzero_ranks());
  CHECK(ls_is_valid(x));
}

TEST_CASE("restriction", "[cotensor][restriction]") {
  Rng rng(83);
  for (int n = 1; n <= 3; ++n) {
    auto cat = testing::random_copies_category(testing::f101(), rng, 2);
    auto x = testing::random_mc(cat, testing::cycling_objects(n, 2), rng);
    auto y = testing::random_mc(cat, testing::cycling_objects(n, 2), rng);
    auto lx = to_local_system(x), ly = to_local_system(y);

    auto bd = boundary_inclusion(n);
    auto rx = restrict(lx, bd);
    CHECK(rx.sset()->counts() == boundary_simplex(n).counts());
    for (int k = 0; k < n; ++k) {
      for (std::size_t c = 0; c < rx.sset()->count(k); ++c) CHECK(rx.eta()(k, c) == lx.eta()(k, bd.cells[k][c]));
    }
    auto pi = restriction_map(lx, ly, bd);
    for (int q = pi.source().lo(); q <= pi.source().hi(); ++q) CHECK(is_coordinate_projection(pi.component(q)));
    CHECK(pi.source().total_dim() > pi.target().total_dim());

    for (int v = 0; v <= n; ++v) {
      auto e = restrict(lx, vertex_inclusion(n, v));
      CHECK(e.objects() == std::vector<std::size_t>{x.object(v)});
      CHECK(same_complex(ls_hom_complex(e, restrict(ly, vertex_inclusion(n, v)), std::pair{-3, 3}).complex,
                         ls_hom_complex(LocalSystem::zero(cat, e.sset(), e.objects()), LocalSystem::zero(cat, e.sset(), {y.object(v)}), std::pair{-3, 3}).complex));
    }

    auto edge = face_inclusion(n, {0, n});
    auto both = SSetInclusion::compose(edge, vertex_inclusion(1, 1));
    CHECK(restrict(restrict(lx, edge), vertex_inclusion(1, 1)) == restrict(lx, both));
    CHECK(restrict(lx, both) == restrict(lx, vertex_inclusion(n, n)));
    CHECK(restrict(lx, face_inclusion(n, {0, n})).eta()(1, 0) == x[MultiIndex::from_entries({0, n})]);
  }
  CHECK(kind_of([] { SSetInclusion::make(standard_simplex(1), standard_simplex(2), {{0, 1}, {1}}); }) == ErrorKind::NotASubcomplex);
  CHECK(kind_of([] { SSetInclusion::make(discrete(2), standard_simplex(1), {{0, 0}}); }) == ErrorKind::NotASubcomplex);
}
