#include <catch_amalgamated.hpp>

#include <functional>

#include "dgres/error.hpp"
#include "dgres/mc.hpp"
#include "random.hpp"

using namespace dgres;
using dgres::testing::Rng;

namespace {

MultiIndex mi(std::vector<int> e) { return MultiIndex::from_entries(e); }

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InternalInvariant;
}

bool higher_components_vanish(const MCObject& x) {
  for (MultiIndex I : x.eta().index().simplices()) {
    if (I.level() >= 2 && !is_zero(x[I])) return false;
  }
  return true;
}

// n = 2 on one object: unit edges, η012 = top, η02 forced by the MC equation.
MCObject unit_edges_with_top(const DgCategoryPtr& cat, const Vector& top) {
  std::vector<std::size_t> objs(3, 0);
  auto eta = SimplicialCochain::zero(cat, 2, -1, objs, objs);
  eta.set(mi({0, 1}), cat->unit(0));
  eta.set(mi({1, 2}), cat->unit(0));
  eta.set(mi({0, 1, 2}), top);
  // MC at (0,1,2): dη012 + η02 - η12∘η01 = 0
  eta.set(mi({0, 2}), cat->unit(0) - cat->d(0, 0, top));
  return MCObject::make(cat, objs, std::move(eta));
}

}  // namespace

TEST_CASE("sign search selects one convention", "[strictify]") {
  Rng rng(71);
  std::vector<MCObject> samples;
  for (int n : {2, 3}) {
    for (int i = 0; i < 4; ++i) {
      auto cat = testing::random_end_category(testing::f101(), rng);
      samples.push_back(testing::random_mc_inductive(cat, testing::constant_objects(n), rng));
    }
  }
  auto signs = consistent_strictification_signs(samples);
  REQUIRE(signs.size() == 1);
  CHECK(signs[0] == kFrozenStrictificationSigns);
}

TEST_CASE("strictify_step on random inputs", "[strictify][property]") {
  Rng rng(72);
  int checked = 0;
  for (int trial = 0; trial < 108; ++trial) {
    const int n = 2 + trial % 3;
    const Field field = trial % 6 == 5 ? Field::rationals() : testing::f101();
    auto cat = trial % 2 ? testing::random_copies_category(field, rng, 2) : testing::random_end_category(field, rng);
    auto objs = trial % 2 ? testing::cycling_objects(n, 2) : testing::constant_objects(n);
    auto x = testing::random_mc_inductive(cat, objs, rng);
    REQUIRE(mc_residual(x).is_zero());
    auto step = strictify_step(x);
    auto c = check_step(step);
    CHECK(c.h_closed);
    CHECK(c.h_inv_closed);
    CHECK(c.left_inverse);
    CHECK(c.right_inverse);
    CHECK(step.target == strict_from_chain(x));
    CHECK(mc_residual(step.target).is_zero());
    ++checked;
  }
  CHECK(checked >= 100);
}

TEST_CASE("strictify_step examples", "[strictify]") {
  Rng rng(73);
  auto cat = testing::random_end_category(testing::f101(), rng);
  SECTION("strict input gives the identity") {
    auto x = strict_from_chain(testing::random_mc(cat, testing::constant_objects(3), rng));
    auto step = strictify_step(x);
    CHECK(step.h.a == identity_cochain(cat, 3, x.objects()));
    CHECK(step.target == x);
    auto s = strictify(x);
    CHECK(s.steps.empty());
    CHECK(s.result == x);
  }
  SECTION("n = 2 with unit edges and a top component") {
    Vector top;
    for (int tries = 0; tries < 50; ++tries) {
      top = testing::random_homogeneous(cat->hom(0, 0), 1, rng);
      if (!is_zero(cat->d(0, 0, top))) break;
    }
    REQUIRE_FALSE(is_zero(cat->d(0, 0, top)));
    auto x = unit_edges_with_top(cat, top);
    REQUIRE(mc_residual(x).is_zero());
    auto step = strictify_step(x);
    CHECK(step.target[mi({0, 2})] == cat->unit(0));
    for (MultiIndex I : step.h.a.index().simplices()) {
      if (I.level() == 0) {
        CHECK(step.h.a[I] == cat->unit(0));
      } else if (I == mi({0, 2})) {
        CHECK(step.h.a[I] == top);
      } else {
        CHECK(is_zero(step.h.a[I]));
      }
    }
    CHECK(step.h_inv.a[mi({0, 2})] == scaled(top, -cat->field().one()));
    CHECK(check_step(step).ok());
    auto s = strictify(x);
    CHECK(s.steps.size() == 1);
    CHECK(higher_components_vanish(s.result));
  }
  SECTION("φ02 is the edge composite") {
    auto x = testing::random_mc(cat, testing::constant_objects(2), rng);
    auto y = strict_from_chain(x);
    CHECK(y[mi({0, 2})] == cat->compose(0, 0, 0, x[mi({1, 2})], x[mi({0, 1})]));
    CHECK(is_zero(y[mi({0, 1, 2})]));
  }
  SECTION("inductive hypothesis") {
    auto x = testing::random_mc(cat, testing::constant_objects(3), rng);
    REQUIRE_FALSE(is_zero(x[mi({0, 1, 2})]));
    CHECK(kind_of([&] { strictify_step(x); }) == ErrorKind::InductiveHypothesisViolated);
  }
}

TEST_CASE("full strictification", "[strictify]") {
  Rng rng(74);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 2 + trial % 3;
    auto cat = trial % 2 ? testing::random_copies_category(testing::f101(), rng, 2) : testing::random_end_category(Field::rationals(), rng);
    auto objs = trial % 2 ? testing::cycling_objects(n, 2) : testing::constant_objects(n);
    auto x = testing::random_mc(cat, objs, rng);
    auto s = strictify(x);
    CHECK(higher_components_vanish(s.result));
    CHECK(mc_residual(s.result).is_zero());
    CHECK(is_closed(s.composite));
    CHECK(is_closed(s.composite_inv));
    CHECK(mc_compose(s.composite_inv, s.composite).a == identity_cochain(cat, n, x.objects()));
    CHECK(mc_compose(s.composite, s.composite_inv).a == identity_cochain(cat, n, s.result.objects()));
    CHECK(s.steps.size() <= static_cast<std::size_t>(n - 1));
    if (!is_zero(x[mi({0, 1, 2})])) CHECK_FALSE(s.steps.empty());
  }
}

TEST_CASE("gauge transport", "[strictify][gauge]") {
  Rng rng(75);
  const Field f5 = Field::prime(5);
  auto cat = testing::random_end_category(f5, rng);
  auto objs = testing::constant_objects(2);
  auto x = testing::random_mc(cat, objs, rng);
  SECTION("identity and scalars leave η alone") {
    CHECK(gauge_transport(x, identity_cochain(cat, 2, objs)).first == x);
    CHECK(gauge_transport(x, f5.from_int(3) * identity_cochain(cat, 2, objs)).first == x);
  }
  SECTION("random strictly invertible gauge over F5") {
    for (int i = 0; i < 10; ++i) {
      auto g = testing::random_gauge(cat, 2, objs, objs, rng);
      auto [y, gm] = gauge_transport(x, g);
      CHECK(mc_residual(y).is_zero());
      CHECK(is_closed(gm));
      auto inv = cochain_inverse(g);
      CHECK(simplicial_compose(inv, g) == identity_cochain(cat, 2, objs));
      CHECK(simplicial_compose(g, inv) == identity_cochain(cat, 2, objs));
    }
  }
  SECTION("errors") {
    auto zero = SimplicialCochain::zero(cat, 2, 0, objs, objs);
    CHECK(kind_of([&] { gauge_transport(x, zero); }) == ErrorKind::NotStrictlyInvertible);
    auto bad = identity_cochain(cat, 2, objs);
    Vector v;
    for (int tries = 0; tries < 50; ++tries) {
      v = testing::random_homogeneous(cat->hom(0, 0), 0, rng);
      if (!is_zero(cat->d(0, 0, v))) break;
    }
    REQUIRE_FALSE(is_zero(cat->d(0, 0, v)));
    bad.set(mi({1}), v);
    CHECK(kind_of([&] { gauge_transport(x, bad); }) == ErrorKind::NotClosed);
  }
}
