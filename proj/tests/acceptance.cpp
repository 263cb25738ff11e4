// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "dgres/cli.hpp"
#include "dgres/error.hpp"
#include "dgres/io.hpp"
#include "dgres/local_system.hpp"
#include "dgres/pushout.hpp"
#include "examples.hpp"
#include "random.hpp"

using namespace dgres;
using dgres::testing::Rng;

namespace {

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool same_complex(const ChainComplex& a, const ChainComplex& b) { return a.dims() == b.dims() && a.total_differential() == b.total_differential(); }

struct Check {
  bool ok = true;
  std::string first_failure;
  void operator()(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      first_failure = what;
    }
  }
};

// 1
void sign_calculus(Check& check) {
  std::size_t cochains = 0;
  for (const Field& field : {testing::f101(), Field::rationals()}) {
    Rng rng(1000 + field.characteristic());
    for (int n = 0; n <= 4; ++n) {
      for (int trial = 0; trial < 26; ++trial) {
        auto cat = trial % 2 ? testing::random_copies_category(field, rng, 2) : testing::random_end_category(field, rng);
        std::uniform_int_distribution<int> deg(-2, 1);
        std::uniform_int_distribution<std::size_t> obj(0, cat->num_objects() - 1);
        std::vector<std::size_t> e, f, g;
        for (int i = 0; i <= n; ++i) {
          e.push_back(obj(rng));
          f.push_back(obj(rng));
          g.push_back(obj(rng));
        }
        auto eta = testing::random_cochain(cat, n, deg(rng), e, f, rng);
        auto phi = testing::random_cochain(cat, n, deg(rng), f, g, rng);
        cochains += 2;
        for (const auto* a : {&eta, &phi}) {
          check(simplicial_delta(simplicial_delta(*a)).is_zero(), "δ² ≠ 0");
          check(Delta_part(d_part(*a)) == -d_part(Delta_part(*a)), "Δd ≠ -dΔ");
        }
        const Scalar s = sign_scalar(field, eta.sign_degree());
        auto comp = simplicial_compose(phi, eta);
        check(simplicial_delta(comp) == s * simplicial_compose(simplicial_delta(phi), eta) + simplicial_compose(phi, simplicial_delta(eta)), "Leibniz δ");
        check(d_part(comp) == s * simplicial_compose(d_part(phi), eta) + simplicial_compose(phi, d_part(eta)), "Leibniz d");
        check(Delta_part(comp) == s * simplicial_compose(Delta_part(phi), eta) + simplicial_compose(phi, Delta_part(eta)), "Leibniz Δ");
      }
    }
  }
  check(cochains >= 500, "fewer than 500 cochains");
}

// 2
void d_squared(Check& check) {
  Rng rng(2000);
  int pairs = 0;
  for (int trial = 0; trial < 102; ++trial) {
    const int n = 1 + trial % 3;
    auto cat = testing::random_copies_category(trial % 3 ? testing::f101() : Field::rationals(), rng, 2);
    auto x = testing::random_mc(cat, testing::cycling_objects(n, 2), rng);
    auto y = testing::random_mc(cat, testing::cycling_objects(n, 2), rng);
    check(mc_residual(x).is_zero() && mc_residual(y).is_zero(), "random MC object is not MC");
    for (int t = -1; t <= 0; ++t) {
      auto a = testing::random_cochain(cat, n, t, x.objects(), y.objects(), rng);
      check(twisted_differential(twisted_differential(a, x.eta(), y.eta()), x.eta(), y.eta()).is_zero(), "d² ≠ 0 on an MC pair");
    }
    ++pairs;
  }
  check(pairs >= 100, "fewer than 100 pairs");
  auto cat = testing::random_end_category(testing::f101(), rng);
  auto objs = testing::constant_objects(2);
  auto bad = testing::random_cochain(cat, 2, -1, objs, objs, rng);
  bool witnessed = false;
  if (!mc_residual(bad).is_zero()) {
    for (int trial = 0; trial < 20 && !witnessed; ++trial) {
      auto a = testing::random_cochain(cat, 2, trial % 3 - 1, objs, objs, rng);
      witnessed = !twisted_differential(twisted_differential(a, bad, bad), bad, bad).is_zero();
    }
  }
  check(witnessed, "no d² ≠ 0 witness for a non-MC η");
}

// 3
void example_reproduction(Check& check) {
  std::string text;
  for (const auto& [label, formula] : testing::example_formulas()) text += label + ": " + formula + "\n";
  check(text == read_file(std::filesystem::path(DGRES_GOLDEN_DIR) / "example_formulas.txt"), "formulas differ from the golden file");
}

// 4
void iota_weak_equivalence(Check& check) {
  const Field q = Field::rationals();
  for (const auto& cat : {fixtures::unit_k(q), fixtures::sphere(q, 0), fixtures::sphere(q, 1), fixtures::sphere(q, 2), fixtures::disk(q, 1)}) {
    for (int n = 0; n <= 3; ++n) {
      for (std::size_t x = 0; x < cat->num_objects(); ++x) {
        for (std::size_t y = 0; y < cat->num_objects(); ++y) {
          check(is_acyclic(cone(iota_hom_map(cat, x, y, n))), "cone of the ι map is not acyclic");
        }
      }
    }
  }
}

// 5
void koszul(Check& check) {
  Rng rng(5000);
  int samples = 0;
  for (int trial = 0; trial < 20; ++trial) {
    ChainComplex h = testing::random_complex(trial % 2 ? testing::f101() : Field::rationals(), rng, -1, 1, 2);
    for (int n = 0; n <= 4; ++n) check(homology(koszul_model(h, n)).nonzero_ranks() == homology(h).nonzero_ranks(), "Koszul model changes homology");
    ++samples;
  }
  check(samples >= 20, "fewer than 20 samples");
  auto ext = homology(exterior_contraction_complex(Field::rationals(), 1));
  check(ext.rank(1) == 1 && ext.rank(2) == 0, "contraction complex ranks");
  const Field q = Field::rationals();
  for (const auto& cat : {fixtures::unit_k(q), fixtures::sphere(q, 1), fixtures::disk(q, 1)}) {
    for (int n = 0; n <= 3; ++n) {
      auto hc = hom_complex_mc(iota(cat, 0, n), iota(cat, cat->num_objects() - 1, n));
      check(same_complex(hc.complex, koszul_model(cat->hom(0, cat->num_objects() - 1), n, std::pair{hc.complex.lo(), hc.complex.hi()})),
            "Koszul model differs from the hom complex");
    }
  }
}

// 6
void strictification(Check& check) {
  Rng rng(6000);
  std::vector<MCObject> samples;
  for (int n : {2, 3}) {
    for (int i = 0; i < 4; ++i) samples.push_back(testing::random_mc_inductive(testing::random_end_category(testing::f101(), rng), testing::constant_objects(n), rng));
  }
  auto signs = consistent_strictification_signs(samples);
  check(signs.size() == 1 && signs[0] == kFrozenStrictificationSigns, "sign search is not unique");
  int steps = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 3;
    auto cat = trial % 2 ? testing::random_copies_category(testing::f101(), rng, 2) : testing::random_end_category(testing::f101(), rng);
    auto x = testing::random_mc_inductive(cat, trial % 2 ? testing::cycling_objects(n, 2) : testing::constant_objects(n), rng);
    check(check_step(strictify_step(x)).ok(), "strictify_step check failed");
    ++steps;
  }
  check(steps >= 100, "fewer than 100 steps");
}

// 7
void simplicial(Check& check) {
  using M = MonotoneMap;
  Rng rng(7000);
  for (int n = 1; n <= 4; ++n) {
    auto cat = testing::random_copies_category(testing::f101(), rng, 2);
    auto x = testing::random_mc(cat, testing::cycling_objects(n, 2), rng);
    auto y = testing::random_mc(cat, testing::cycling_objects(n, 2), rng);
    auto a = make_morphism(x, y, testing::random_cochain(cat, n, 0, x.objects(), y.objects(), rng));
    auto agree = [&](std::vector<M> lhs, std::vector<M> rhs) {
      MCObject xl = x, xr = x;
      MCMorphism al = a, ar = a;
      for (const auto& f : lhs) {
        xl = pullback(f, xl);
        al = pullback(f, al);
      }
      for (const auto& f : rhs) {
        xr = pullback(f, xr);
        ar = pullback(f, ar);
      }
      check(xl == xr && al.a == ar.a, "simplicial identity fails at n = " + std::to_string(n));
    };
    for (int j = 0; j <= n; ++j) {
      for (int i = 0; i < j; ++i) {
        if (n >= 2) agree({M::face(n, j), M::face(n - 1, i)}, {M::face(n, i), M::face(n - 1, j - 1)});
        agree({M::degeneracy(n, j), M::face(n + 1, i)}, {M::face(n, i), M::degeneracy(n - 1, j - 1)});
      }
      for (int i = 0; i <= j; ++i) agree({M::degeneracy(n, j), M::degeneracy(n + 1, i)}, {M::degeneracy(n, i), M::degeneracy(n + 1, j + 1)});
      agree({M::degeneracy(n, j), M::face(n + 1, j)}, {M::identity(n)});
      agree({M::degeneracy(n, j), M::face(n + 1, j + 1)}, {M::identity(n)});
      for (int i = j + 2; i <= n + 1; ++i) agree({M::degeneracy(n, j), M::face(n + 1, i)}, {M::face(n, i - 1), M::degeneracy(n - 1, j)});
    }
  }
  const Field q = Field::rationals();
  for (const auto& cat : {fixtures::unit_k(q), fixtures::sphere(q, 1), fixtures::disk(q, 1)}) {
    for (std::size_t e = 0; e < cat->num_objects(); ++e) {
      MCObject x = iota(cat, e, 0);
      for (int n = 1; n <= 4; ++n) {
        x = pullback(MonotoneMap::degeneracy(n - 1, 0), x);
        check(x == iota(cat, e, n), "ι differs from the (σ0)^n pullback");
      }
    }
  }
}

// 8
void cotensor(Check& check) {
  Rng rng(8000);
  for (int n = 0; n <= 3; ++n) {
    auto cat = testing::random_copies_category(testing::f101(), rng, 2);
    auto x = testing::random_mc(cat, testing::cycling_objects(n, 2), rng);
    auto y = testing::random_mc(cat, testing::cycling_objects(n, 2), rng);
    auto lx = to_local_system(x), ly = to_local_system(y);
    check(same_complex(ls_hom_complex(lx, ly).complex, hom_complex_mc(x, y).complex), "cotensor hom differs from the MC hom");
    if (n == 0) continue;
    auto bd = boundary_inclusion(n);
    auto rx = restrict(lx, bd);
    bool forgets_top = rx.sset()->counts() == boundary_simplex(n).counts();
    for (int k = 0; k < n; ++k) {
      for (std::size_t c = 0; c < rx.sset()->count(k); ++c) forgets_top = forgets_top && rx.eta()(k, c) == lx.eta()(k, bd.cells[k][c]);
    }
    check(forgets_top, "restriction to the boundary does not forget exactly the top cell");
    auto pi = restriction_map(lx, ly, bd);
    for (int q = pi.source().lo(); q <= pi.source().hi(); ++q) {
      Matrix m = pi.component(q);
      for (std::size_t r = 0; r < m.rows(); ++r) {
        std::size_t ones = 0;
        for (std::size_t c = 0; c < m.cols(); ++c) {
          if (m(r, c).is_one()) ++ones;
          else check(m(r, c).is_zero(), "restriction has an entry other than 0 or 1");
        }
        check(ones == 1, "restriction is not a coordinate projection");
      }
    }
  }
  auto cat = testing::random_copies_category(testing::f101(), rng, 2);
  auto two = std::make_shared<const FiniteSSet>(boundary_simplex(1));
  auto h = ls_hom_complex(LocalSystem::zero(cat, two, {0, 1}), LocalSystem::zero(cat, two, {1, 0}), std::pair{-4, 4});
  for (int q = -4; q <= 4; ++q) check(h.complex.dim(q) == cat->hom(0, 1).dim(q) + cat->hom(1, 0).dim(q), "∂Δ^1 hom is not a product");
  check(homology(h.complex).nonzero_ranks() == homology(direct_sum(cat->hom(0, 1), cat->hom(1, 0))).nonzero_ranks(), "∂Δ^1 homology is not a product");
}

// 9
void circle_systems(Check& check) {
  const Field q = Field::rationals();
  auto k = fixtures::unit_k(q);
  auto s = std::make_shared<const FiniteSSet>(circle());
  auto system = [&](long lambda) {
    auto eta = SSetCochain::zero(k, s, -1, {0}, {0});
    eta.set(1, 0, Vector{q.from_int(lambda)});
    return LocalSystem::make(k, s, {0}, std::move(eta));
  };
  for (long lambda : {1L, -1L, 2L, 5L}) {
    check(homology(ls_hom_complex(system(lambda), system(lambda)).complex).nonzero_ranks() == std::map<int, std::size_t>{{-1, 1}, {0, 1}},
          "End ranks of a circle local system");
    for (long mu : {1L, -1L, 2L, 5L}) {
      if (mu != lambda) check(is_acyclic(ls_hom_complex(system(lambda), system(mu)).complex), "cross hom is not acyclic");
    }
  }
}

// 10
void pushout(Check& check) {
  const Field q = Field::rationals();
  auto data = [](DgCategoryPtr base, std::size_t x, std::size_t y, int n, Vector g, std::size_t N) {
    AdjunctionData d;
    d.base = std::move(base);
    d.x = x;
    d.y = y;
    d.n = n;
    d.g_img = std::move(g);
    d.truncation = N;
    return d;
  };
  for (std::size_t dim = 1; dim <= 3; ++dim) {
    std::vector<std::vector<Vector>> mult(dim, std::vector<Vector>(dim));
    for (std::size_t b = 0; b < dim; ++b) {
      for (std::size_t a = 0; a < dim; ++a) {
        mult[b][a] = zero_vector(q, dim);
        if (a + b < dim) mult[b][a][a + b] = q.one();
      }
    }
    auto alg = fixtures::algebra(q, mult);
    for (std::size_t N = 1; N <= 3; ++N) {
      auto t = free_adjoin(data(alg, 0, 0, 0, alg->zero(0, 0), N));
      t.category->validate();
      std::size_t expected = 0, power = 1;
      for (std::size_t m = 1; m <= N + 1; ++m) expected += (power *= dim);
      check(t.category->hom(0, 0).dim(0) == expected, "word count differs from Σ dim A^m");
    }
  }
  for (int m = 0; m <= 2; ++m) {
    auto s = fixtures::sphere(q, m);
    auto t = free_adjoin(data(s, 0, 1, m, unit_vector(q, 1, 0), 2));
    t.category->validate();
    check(t.exact && is_acyclic(t.category->hom(0, 1)), "adjoining a bounding cell is not acyclic");
  }
  auto s = fixtures::sphere(q, 1);
  auto e = testing::quiver_category(q, {"a", "b"}, {{"g", 0, 1, 0, ""}, {"u", 0, 1, 0, ""}, {"v", 0, 1, 1, "u"}});
  Matrix id(q, 1, 1);
  id(0, 0) = q.one();
  Matrix g_map(q, 3, 1);
  g_map(testing::basis_index(*e, 0, 1, "g"), 0) = q.one();
  DgFunctor F = DgFunctor::make(s, e, {0, 1}, {id, g_map, Matrix(q, 0, 0), id});
  auto ts = free_adjoin(data(s, 0, 1, 1, unit_vector(q, 1, 0), 2));
  auto te = free_adjoin(data(e, 0, 1, 1, testing::basis_vector(*e, 0, 1, "g"), 2));
  check(is_quasi_equivalence(induced_functor(F, ts, te)).verdict == Verdict::Yes, "induced functor of a quasi-equivalence");

  DgCategoryBuilder b(q);
  b.add_object("a");
  b.add_object("b");
  b.set_hom(0, 0, ChainComplex::concentrated(q, 0), {"id_a"});
  b.set_hom(1, 1, ChainComplex::concentrated(q, 0), {"id_b"});
  b.set_unit_basis(0, 0);
  b.set_unit_basis(1, 0);
  auto two = b.build();
  DgFunctor G = DgFunctor::make(s, two, {0, 1}, {id, Matrix(q, 0, 1), Matrix(q, 0, 0), id});
  auto tt = free_adjoin(data(two, 0, 1, 1, two->zero(0, 1), 2));
  check(is_quasi_equivalence(induced_functor(G, ts, tt)).verdict == Verdict::No, "negative control was not refuted");
}

// 11
void cli_determinism(Check& check) {
  auto run = [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return std::pair{code, out.str()};
  };
  const std::filesystem::path golden = DGRES_GOLDEN_DIR;
  const auto dir = std::filesystem::temp_directory_path() / "dgres_acceptance";
  std::filesystem::create_directories(dir);
  for (const auto& [name, n] : std::vector<std::pair<std::string, int>>{
           {"unit_k", 0}, {"sphere", 0}, {"sphere", 1}, {"sphere", 2}, {"disk", 0}, {"disk", 1}, {"disk", 2}}) {
    auto [code, text] = run({"fixtures", name, "--n", std::to_string(n)});
    const std::string file = name == "unit_k" ? "unit_k.json" : name + "_" + std::to_string(n) + ".json";
    check(code == cli::Verified && text == read_file(golden / file), "fixture document differs from " + file);
    const auto path = (dir / file).string();
    std::ofstream(path, std::ios::binary) << text;
    for (const auto& args : std::vector<std::vector<std::string>>{{"validate", path}, {"homology", path}, {"resolve", path, "--n", "2"}}) {
      check(run(args) == run(args), "report not byte-identical for " + args[0] + " " + file);
    }
  }
  std::filesystem::remove_all(dir);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"sign calculus on random cochains", sign_calculus},
      {"d² = 0 on MC pairs, nonzero off the MC locus", d_squared},
      {"low-dimensional MC formulas and path-object differential", example_reproduction},
      {"ι is a levelwise weak equivalence", iota_weak_equivalence},
      {"Koszul model preserves homology", koszul},
      {"strictification steps and unique sign convention", strictification},
      {"simplicial identities and ι = (σ0)^n pullback", simplicial},
      {"cotensor coherence", cotensor},
      {"circle local systems", circle_systems},
      {"pushouts along generating cofibrations", pushout},
      {"CLI determinism and fixture goldens", cli_determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    try {
      criteria[i].second(check);
    } catch (const std::exception& e) {
      check(false, std::string("exception: ") + e.what());
    }
    std::cout << (check.ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first;
    if (!check.ok) std::cout << " (" << check.first_failure << ")";
    std::cout << "\n";
    if (!check.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
