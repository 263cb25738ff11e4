#include "random.hpp"

#include "dgres/error.hpp"

namespace dgres::testing {

Field f101() { return Field::prime(101); }

Scalar random_scalar(const Field& field, Rng& rng, bool nonzero) {
  for (;;) {
    Scalar s;
    if (field.is_rational()) {
      std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
      s = field.from_int(num(rng)) / field.from_int(den(rng));
    } else {
      std::uniform_int_distribution<std::int64_t> u(0, static_cast<std::int64_t>(field.characteristic()) - 1);
      s = field.from_int(u(rng));
    }
    if (!nonzero || !s.is_zero()) return s;
  }
}

Vector random_vector(const Field& field, std::size_t size, Rng& rng) {
  Vector v;
  v.reserve(size);
  for (std::size_t i = 0; i < size; ++i) v.push_back(random_scalar(field, rng));
  return v;
}

Vector random_homogeneous(const ChainComplex& c, int q, Rng& rng) {
  if (c.dim(q) == 0) return zero_vector(c.field(), c.total_dim());
  return c.embed(random_vector(c.field(), c.dim(q), rng), q);
}

ChainComplex random_complex(const Field& field, Rng& rng, int lo, int hi, std::size_t max_dim) {
  std::uniform_int_distribution<std::size_t> dim_dist(0, max_dim);
  std::map<int, std::size_t> dims;
  for (int q = lo; q <= hi; ++q) dims[q] = dim_dist(rng);
  std::map<int, Matrix> diffs;
  for (int q = lo + 1; q <= hi; ++q) {
    // columns of d_q in ker d_{q-1}
    std::vector<Vector> ker;
    if (q - 1 > lo && diffs.count(q - 1)) {
      ker = diffs.at(q - 1).kernel_basis();
    } else {
      for (std::size_t i = 0; i < dims[q - 1]; ++i) ker.push_back(unit_vector(field, dims[q - 1], i));
    }
    Matrix d(field, dims[q - 1], dims[q]);
    std::bernoulli_distribution keep(0.7);
    for (std::size_t c = 0; c < dims[q]; ++c) {
      Vector col = zero_vector(field, dims[q - 1]);
      for (const auto& k : ker) {
        if (keep(rng)) axpy(col, random_scalar(field, rng), k);
      }
      d.set_column(c, col);
    }
    diffs[q] = d;
  }
  return ChainComplex::make(field, dims, diffs);
}

namespace {

bool usable(const ChainComplex& v) {
  std::size_t biggest = 0;
  for (const auto& [q, n] : v.dims()) biggest = std::max(biggest, n);
  return v.total_dim() >= 3 && v.total_dim() <= 5 && biggest >= 2 && !is_acyclic(v);
}

ChainComplex usable_complex(const Field& field, Rng& rng) {
  for (;;) {
    ChainComplex v = random_complex(field, rng, -1, 1, 2);
    if (usable(v)) return v;
  }
}

}  // namespace

DgCategoryPtr random_end_category(const Field& field, Rng& rng) { return fixtures::complexes_category({usable_complex(field, rng)}); }

DgCategoryPtr random_copies_category(const Field& field, Rng& rng, std::size_t copies) {
  ChainComplex v = usable_complex(field, rng);
  return fixtures::complexes_category(std::vector<ChainComplex>(copies, v));
}

SimplicialCochain random_cochain(const DgCategoryPtr& cat, int n, int t, const std::vector<std::size_t>& source,
                                 const std::vector<std::size_t>& target, Rng& rng) {
  SimplicialCochain a = SimplicialCochain::zero(cat, n, t, source, target);
  for (MultiIndex I : a.index().simplices()) a.set(I, random_homogeneous(a.hom_at(I), t + I.level(), rng));
  return a;
}

Vector random_closed_degree0(const DgCategory& cat, std::size_t x, std::size_t y, Rng& rng) {
  const ChainComplex& h = cat.hom(x, y);
  if (h.dim(0) == 0) return cat.zero(x, y);
  std::vector<Vector> ker = h.differential(0).kernel_basis();
  Vector v = zero_vector(cat.field(), h.dim(0));
  for (const auto& k : ker) axpy(v, random_scalar(cat.field(), rng), k);
  return h.embed(v, 0);
}

Vector random_strict_iso(const DgCategory& cat, std::size_t x, std::size_t y, Rng& rng) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    Vector f = random_closed_degree0(cat, x, y, rng);
    if (strict_inverse(cat, x, y, f)) return f;
  }
  fail(ErrorKind::InternalInvariant, "no strict isomorphism found between " + cat.label(x) + " and " + cat.label(y));
}

SimplicialCochain random_gauge(const DgCategoryPtr& cat, int n, const std::vector<std::size_t>& source,
                               const std::vector<std::size_t>& target, Rng& rng, bool only_top) {
  SimplicialCochain g = SimplicialCochain::zero(cat, n, 0, source, target);
  for (MultiIndex I : g.index().simplices()) {
    if (I.level() == 0) {
      g.set(I, random_strict_iso(*cat, source.at(I.first()), target.at(I.first()), rng));
    } else if (!only_top || I.last() == n) {
      g.set(I, random_homogeneous(g.hom_at(I), I.level(), rng));
    }
  }
  return g;
}

namespace {

MCObject random_strict(const DgCategoryPtr& cat, const std::vector<std::size_t>& objects, Rng& rng) {
  const int n = static_cast<int>(objects.size()) - 1;
  SimplicialCochain eta = SimplicialCochain::zero(cat, n, -1, objects, objects);
  for (int i = 0; i < n; ++i) eta.set(MultiIndex::from_entries({i, i + 1}), random_strict_iso(*cat, objects[i], objects[i + 1], rng));
  return strict_from_chain(MCObject::make(cat, objects, std::move(eta)));
}

}  // namespace

MCObject random_mc(const DgCategoryPtr& cat, const std::vector<std::size_t>& objects, Rng& rng) {
  MCObject strict = random_strict(cat, objects, rng);
  return gauge_transport(strict, random_gauge(cat, strict.n(), objects, objects, rng)).first;
}

MCObject random_mc_inductive(const DgCategoryPtr& cat, const std::vector<std::size_t>& objects, Rng& rng) {
  MCObject strict = random_strict(cat, objects, rng);
  return gauge_transport(strict, random_gauge(cat, strict.n(), objects, objects, rng, true)).first;
}

std::vector<std::size_t> constant_objects(int n, std::size_t object) { return std::vector<std::size_t>(n + 1, object); }

std::vector<std::size_t> cycling_objects(int n, std::size_t count) {
  std::vector<std::size_t> out;
  for (int i = 0; i <= n; ++i) out.push_back(static_cast<std::size_t>(i) % count);
  return out;
}

}  // namespace dgres::testing
