#include <random>

#include "dgres/dgcat.hpp"
#include "dgres/error.hpp"

namespace dgres {

H0Category::H0Category(DgCategoryPtr cat) : cat_(std::move(cat)) {
  const std::size_t n = cat_->num_objects();
  bases_.reserve(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) bases_.emplace_back(cat_->hom(x, y), 0);
  }
}

std::optional<Vector> H0Category::class_of(std::size_t x, std::size_t y, const Vector& f) const {
  const ChainComplex& h = cat_->hom(x, y);
  if (!is_homogeneous(h, f, 0)) fail(ErrorKind::WrongDegree, "expected a degree-0 element of Hom(" + cat_->label(x) + "," + cat_->label(y) + ")");
  return basis(x, y).class_of(h.slice(f, 0));
}

Vector H0Category::representative(std::size_t x, std::size_t y, const Vector& cls) const {
  const HomologyBasis& b = basis(x, y);
  if (cls.size() != b.rank()) fail(ErrorKind::ShapeMismatch, "class vector has wrong length");
  const ChainComplex& h = cat_->hom(x, y);
  Vector v = zero_vector(cat_->field(), h.dim(0));
  for (std::size_t i = 0; i < cls.size(); ++i) axpy(v, cls[i], b.representatives()[i]);
  return h.embed(v, 0);
}

Vector H0Category::compose(std::size_t x, std::size_t y, std::size_t z, const Vector& cg, const Vector& cf) const {
  Vector g = representative(y, z, cg);
  Vector f = representative(x, y, cf);
  auto c = class_of(x, z, cat_->compose(x, y, z, g, f));
  if (!c) fail(ErrorKind::InternalInvariant, "composite of cycles is not a cycle");
  return *c;
}

Vector H0Category::unit_class(std::size_t x) const {
  auto c = class_of(x, x, cat_->unit(x));
  if (!c) fail(ErrorKind::UnitViolation, "unit is not closed");
  return *c;
}

H0Category h0_category(const DgCategoryPtr& cat) {
  H0Category h0(cat);
  const std::size_t n = cat->num_objects();
  const Field& field = cat->field();
  // Composing a representative with a boundary must give the zero class.
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const ChainComplex& hxy = cat->hom(x, y);
        const ChainComplex& hyz = cat->hom(y, z);
        for (std::size_t i = 0; i < h0.dim(x, y); ++i) {
          Vector f = h0.representative(x, y, unit_vector(field, h0.dim(x, y), i));
          for (std::size_t u = 0; u < hyz.dim(1); ++u) {
            Vector du = cat->d(y, z, hyz.embed(unit_vector(field, hyz.dim(1), u), 1));
            auto c = h0.class_of(x, z, cat->compose(x, y, z, du, f));
            if (!c || !is_zero(*c)) fail(ErrorKind::InternalInvariant, "H0 composition depends on the representative");
          }
        }
        for (std::size_t j = 0; j < h0.dim(y, z); ++j) {
          Vector g = h0.representative(y, z, unit_vector(field, h0.dim(y, z), j));
          for (std::size_t u = 0; u < hxy.dim(1); ++u) {
            Vector du = cat->d(x, y, hxy.embed(unit_vector(field, hxy.dim(1), u), 1));
            auto c = h0.class_of(x, z, cat->compose(x, y, z, g, du));
            if (!c || !is_zero(*c)) fail(ErrorKind::InternalInvariant, "H0 composition depends on the representative");
          }
        }
      }
    }
  }
  return h0;
}

bool InvertibilityCertificate::verify(const DgCategory& cat) const {
  try {
    const ChainComplex& hxy = cat.hom(x, y);
    const ChainComplex& hyx = cat.hom(y, x);
    if (!is_homogeneous(hxy, forward, 0) || !is_homogeneous(hyx, backward, 0)) return false;
    if (!is_homogeneous(cat.hom(x, x), left_homotopy, 1) || !is_homogeneous(cat.hom(y, y), right_homotopy, 1)) return false;
    if (!is_zero(cat.d(x, y, forward)) || !is_zero(cat.d(y, x, backward))) return false;
    Vector gf = cat.compose(x, y, x, backward, forward) - cat.unit(x);
    Vector fg = cat.compose(y, x, y, forward, backward) - cat.unit(y);
    return cat.d(x, x, left_homotopy) == gf && cat.d(y, y, right_homotopy) == fg;
  } catch (const Error&) {
    return false;
  }
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "YES";
    case Verdict::No: return "NO";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

namespace {

Matrix vstack(const Matrix& a, const Matrix& b) {
  Matrix m(a.field(), a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

Vector concat(const Vector& a, const Vector& b) {
  Vector v = a;
  v.insert(v.end(), b.begin(), b.end());
  return v;
}

Vector homotopy_for(const DgCategory& cat, const H0Category& h0, std::size_t x, const Vector& boundary) {
  const ChainComplex& e = cat.hom(x, x);
  auto h = h0.basis(x, x).bounding_chain(e.slice(boundary, 0));
  if (!h) fail(ErrorKind::InternalInvariant, "class is zero but no bounding chain found");
  return e.embed(*h, 1);
}

}  // namespace

InvertibilityResult is_homotopy_invertible(const DgCategory& cat, std::size_t x, std::size_t y, const Vector& f) {
  DgCategoryPtr alias(std::shared_ptr<const DgCategory>{}, &cat);
  return is_homotopy_invertible(H0Category(alias), x, y, f);
}

InvertibilityResult is_homotopy_invertible(const H0Category& h0, std::size_t x, std::size_t y, const Vector& f) {
  const DgCategory& cat = h0.category();
  const Field& field = cat.field();
  const ChainComplex& hxy = cat.hom(x, y);
  if (f.size() != hxy.total_dim()) fail(ErrorKind::ShapeMismatch, "morphism has wrong length");
  if (!is_homogeneous(hxy, f, 0)) fail(ErrorKind::WrongDegree, "morphism is not of degree 0");
  if (!is_zero(cat.d(x, y, f))) fail(ErrorKind::NotClosed, "morphism is not closed");

  const HomologyBasis& back = h0.basis(y, x);
  const std::size_t m = back.rank();
  const std::size_t ex = h0.dim(x, x), ey = h0.dim(y, y);
  Matrix left(field, ex, m), right(field, ey, m);
  std::vector<Vector> reps;
  for (std::size_t j = 0; j < m; ++j) {
    Vector g = h0.representative(y, x, unit_vector(field, m, j));
    reps.push_back(g);
    left.set_column(j, *h0.class_of(x, x, cat.compose(x, y, x, g, f)));
    right.set_column(j, *h0.class_of(y, y, cat.compose(y, x, y, f, g)));
  }
  Vector ux = h0.unit_class(x), uy = h0.unit_class(y);

  InvertibilityResult result;
  auto joint = vstack(left, right).solve(concat(ux, uy));
  if (joint) {
    InvertibilityCertificate cert;
    cert.x = x;
    cert.y = y;
    cert.forward = f;
    cert.backward = cat.zero(y, x);
    for (std::size_t j = 0; j < m; ++j) axpy(cert.backward, (*joint)[j], reps[j]);
    cert.left_homotopy = homotopy_for(cat, h0, x, cat.compose(x, y, x, cert.backward, f) - cat.unit(x));
    cert.right_homotopy = homotopy_for(cat, h0, y, cat.compose(y, x, y, f, cert.backward) - cat.unit(y));
    if (!cert.verify(cat)) fail(ErrorKind::InternalInvariant, "invertibility certificate failed to verify");
    result.verdict = Verdict::Yes;
    result.certificate = std::move(cert);
    return result;
  }
  bool has_left = left.solve(ux).has_value();
  bool has_right = right.solve(uy).has_value();
  if (!has_left && !has_right) {
    result.verdict = Verdict::No;
    result.reason = "neither a left nor a right inverse exists in H0";
  } else {
    result.verdict = Verdict::Inconclusive;
    result.reason = has_left ? "only a left inverse found in H0" : "only a right inverse found in H0";
  }
  return result;
}

namespace {

Scalar random_scalar(const Field& field, std::mt19937_64& rng) {
  if (field.is_rational()) {
    std::uniform_int_distribution<int> dist(-4, 4);
    return field.from_int(dist(rng));
  }
  std::uniform_int_distribution<std::uint64_t> dist(0, field.characteristic() - 1);
  return field.from_int(static_cast<std::int64_t>(dist(rng)));
}

std::optional<InvertibilityCertificate> search_equivalence(const H0Category& h0, std::size_t x, std::size_t y,
                                                           std::mt19937_64& rng, std::size_t random_trials) {
  const Field& field = h0.category().field();
  const std::size_t m = h0.dim(x, y);
  if (m == 0) return std::nullopt;
  std::vector<Vector> candidates;
  for (std::size_t i = 0; i < m; ++i) candidates.push_back(unit_vector(field, m, i));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      candidates.push_back(unit_vector(field, m, i) + unit_vector(field, m, j));
      candidates.push_back(unit_vector(field, m, i) - unit_vector(field, m, j));
    }
  }
  for (std::size_t t = 0; t < random_trials; ++t) {
    Vector c = zero_vector(field, m);
    for (auto& s : c) s = random_scalar(field, rng);
    candidates.push_back(std::move(c));
  }
  for (const auto& c : candidates) {
    if (is_zero(c)) continue;
    auto r = is_homotopy_invertible(h0, x, y, h0.representative(x, y, c));
    if (r.verdict == Verdict::Yes) return r.certificate;
  }
  return std::nullopt;
}

}  // namespace

QuasiEquivalenceReport is_quasi_equivalence(const DgFunctor& functor, std::uint64_t seed, std::size_t random_trials) {
  QuasiEquivalenceReport report;
  const DgCategory& s = *functor.source();
  const DgCategory& t = *functor.target();
  report.fully_faithful = true;
  for (std::size_t x = 0; x < s.num_objects(); ++x) {
    for (std::size_t y = 0; y < s.num_objects(); ++y) {
      auto ranks = homology_ranks(cone(functor.hom_map(x, y)));
      bool ok = true;
      for (const auto& [n, r] : ranks) ok = ok && r == 0;
      std::map<int, std::size_t> nz;
      for (const auto& [n, r] : ranks) {
        if (r != 0) nz[n] = r;
      }
      report.pairs.push_back({x, y, ok, nz});
      report.fully_faithful = report.fully_faithful && ok;
    }
  }

  H0Category h0(functor.target());
  std::mt19937_64 rng(seed);
  report.essentially_surjective = true;
  for (std::size_t w = 0; w < t.num_objects(); ++w) {
    QuasiEquivalenceReport::ObjectEntry entry{w, std::nullopt, std::nullopt};
    for (std::size_t x = 0; x < s.num_objects() && !entry.source_object; ++x) {
      if (functor.object(x) == w) {
        InvertibilityCertificate cert;
        cert.x = cert.y = w;
        cert.forward = cert.backward = t.unit(w);
        cert.left_homotopy = cert.right_homotopy = t.zero(w, w);
        entry.source_object = x;
        entry.certificate = std::move(cert);
      }
    }
    for (std::size_t x = 0; x < s.num_objects() && !entry.source_object; ++x) {
      if (auto cert = search_equivalence(h0, functor.object(x), w, rng, random_trials)) {
        entry.source_object = x;
        entry.certificate = std::move(cert);
      }
    }
    report.essentially_surjective = report.essentially_surjective && entry.source_object.has_value();
    report.objects.push_back(std::move(entry));
  }
  if (!report.fully_faithful) {
    report.verdict = Verdict::No;
  } else if (report.essentially_surjective) {
    report.verdict = Verdict::Yes;
  } else {
    report.verdict = Verdict::Inconclusive;
  }
  return report;
}

}  // namespace dgres
