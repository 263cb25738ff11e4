#include "dgres/mc.hpp"

#include <algorithm>

#include "dgres/error.hpp"

namespace dgres {

MCObject MCObject::make(DgCategoryPtr cat, std::vector<std::size_t> objects, SimplicialCochain eta) {
  if (eta.category() != cat) fail(ErrorKind::ShapeError, "MC element lives over a different category");
  if (eta.total_degree() != -1) fail(ErrorKind::ShapeError, "MC element must have total degree -1");
  if (eta.source() != objects || eta.target() != objects) fail(ErrorKind::ShapeError, "MC element objects differ from the vertex objects");
  for (int i = 0; i <= eta.n(); ++i) {
    if (!is_zero(eta[MultiIndex(1U << i)])) fail(ErrorKind::ShapeError, "MC element must vanish on vertex " + std::to_string(i));
  }
  MCObject x;
  x.eta_ = std::move(eta);
  return x;
}

MCObject MCObject::zero(DgCategoryPtr cat, std::vector<std::size_t> objects) {
  int n = static_cast<int>(objects.size()) - 1;
  auto eta = SimplicialCochain::zero(cat, n, -1, objects, objects);
  return make(std::move(cat), std::move(objects), std::move(eta));
}

SimplicialCochain mc_residual(const SimplicialCochain& eta) {
  if (eta.total_degree() != -1) fail(ErrorKind::ShapeError, "MC element must have total degree -1");
  if (eta.source() != eta.target()) fail(ErrorKind::ShapeError, "MC element must have equal source and target objects");
  return simplicial_delta(eta) + simplicial_compose(eta, eta);
}

MCValidation mc_validate(const MCObject& x) {
  MCValidation v;
  SimplicialCochain r = mc_residual(x);
  const SimplexIndex& idx = r.index();
  for (std::size_t p = 0; p < idx.size(); ++p) {
    if (!is_zero(r.component(p))) {
      v.first_bad = idx.at(p);
      break;
    }
  }
  v.residual_zero = !v.first_bad;
  if (!v.residual_zero) return v;
  v.valid = true;
  if (x.n() == 0) return v;
  H0Category h0(x.category());
  for (int i = 0; i < x.n(); ++i) {
    MultiIndex e((1U << i) | (1U << (i + 1)));
    auto res = is_homotopy_invertible(h0, x.object(i), x.object(i + 1), x[e]);
    v.valid = v.valid && res.verdict == Verdict::Yes;
    v.edges.push_back({i, std::move(res)});
  }
  return v;
}

bool mc_is_valid(const MCObject& x) { return mc_validate(x).valid; }

SimplicialCochain twisted_differential(const SimplicialCochain& a, const SimplicialCochain& eta,
                                       const SimplicialCochain& phi) {
  SimplicialCochain out = simplicial_delta(a) + simplicial_compose(a, eta);
  SimplicialCochain right = simplicial_compose(phi, a);
  if (is_odd(a.sign_degree())) {
    out += right;
  } else {
    out -= right;
  }
  return out;
}

MCMorphism make_morphism(const MCObject& source, const MCObject& target, SimplicialCochain a) {
  if (a.category() != source.category() || a.category() != target.category()) {
    fail(ErrorKind::ObjectMismatch, "morphism lives over a different category");
  }
  if (a.n() != source.n() || a.n() != target.n()) fail(ErrorKind::ObjectMismatch, "morphism and objects live on different simplices");
  if (a.source() != source.objects() || a.target() != target.objects()) {
    fail(ErrorKind::ObjectMismatch, "morphism objects differ from the source/target vertex objects");
  }
  return MCMorphism{source, target, std::move(a)};
}

SimplicialCochain mc_differential(const MCMorphism& f) { return twisted_differential(f.a, f.source.eta(), f.target.eta()); }

bool is_closed(const MCMorphism& f) { return mc_differential(f).is_zero(); }

MCMorphism mc_identity(const MCObject& x) {
  return MCMorphism{x, x, identity_cochain(x.category(), x.n(), x.objects())};
}

MCMorphism mc_compose(const MCMorphism& b, const MCMorphism& a) {
  if (!(a.target == b.source)) fail(ErrorKind::ObjectMismatch, "morphisms are not composable");
  return MCMorphism{a.source, b.target, simplicial_compose(b.a, a.a)};
}

// ---- hom complexes ----

std::optional<std::pair<int, int>> required_window(const DgCategory& cat, int n, const std::vector<std::size_t>& source,
                                                   const std::vector<std::size_t>& target) {
  std::optional<int> lo, hi;
  for (int i = 0; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      const ChainComplex& h = cat.hom(source.at(i), target.at(j));
      auto a = h.min_support();
      auto b = h.max_support();
      if (!a) continue;
      lo = lo ? std::min(*lo, *a) : *a;
      hi = hi ? std::max(*hi, *b) : *b;
    }
  }
  if (!lo) return std::nullopt;
  return std::make_pair(*lo - n, *hi);
}

Vector MCHomComplex::flatten(const SimplicialCochain& a) const {
  if (a.category() != cat || a.n() != n || a.source() != source || a.target() != target) {
    fail(ErrorKind::ObjectMismatch, "cochain does not belong to this hom complex");
  }
  const Field& field = cat->field();
  Vector out = zero_vector(field, complex.total_dim());
  const int t = a.total_degree();
  if (t < complex.lo() || t > complex.hi()) {
    if (!a.is_zero()) fail(ErrorKind::WindowTooSmall, "cochain of degree " + std::to_string(t) + " lies outside the window");
    return out;
  }
  const auto& offs = face_offsets.at(t);
  const SimplexIndex& idx = a.index();
  const std::size_t base = complex.offset(t);
  for (std::size_t p = 0; p < idx.size(); ++p) {
    const Vector& c = a.component(p);
    if (is_zero(c)) continue;
    MultiIndex I = idx.at(p);
    const ChainComplex& h = a.hom_at(I);
    const int q = t + I.level();
    for (std::size_t b = 0; b < h.dim(q); ++b) out[base + offs[p] + b] = c[h.offset(q) + b];
  }
  return out;
}

SimplicialCochain MCHomComplex::unflatten(const Vector& total, int t) const {
  SimplicialCochain a = SimplicialCochain::zero(cat, n, t, source, target);
  if (t < complex.lo() || t > complex.hi()) return a;
  if (total.size() != complex.total_dim()) fail(ErrorKind::ShapeMismatch, "vector has wrong length for this hom complex");
  const auto& offs = face_offsets.at(t);
  const SimplexIndex& idx = a.index();
  const std::size_t base = complex.offset(t);
  for (std::size_t p = 0; p < idx.size(); ++p) {
    MultiIndex I = idx.at(p);
    const ChainComplex& h = a.hom_at(I);
    const int q = t + I.level();
    Vector& c = a.mutable_component(p);
    for (std::size_t b = 0; b < h.dim(q); ++b) c[h.offset(q) + b] = total[base + offs[p] + b];
  }
  return a;
}

namespace {

std::pair<int, int> resolve_window(const std::optional<std::pair<int, int>>& required, int n,
                                   const std::optional<std::pair<int, int>>& window) {
  if (window) {
    if (window->first > window->second + 1) fail(ErrorKind::WindowTooSmall, "window is empty");
    if (required && (window->first > required->first || window->second < required->second)) {
      fail(ErrorKind::WindowTooSmall, "window [" + std::to_string(window->first) + ", " + std::to_string(window->second) +
                                          "] must contain [" + std::to_string(required->first) + ", " +
                                          std::to_string(required->second) + "]");
    }
    return *window;
  }
  if (!required) return {-n - 1, n + 1};
  return {required->first - 1, required->second + n + 1};
}

}  // namespace

MCHomComplex hom_complex_mc(const MCObject& src, const MCObject& tgt, std::optional<std::pair<int, int>> window) {
  if (src.category() != tgt.category()) fail(ErrorKind::ObjectMismatch, "MC objects over different categories");
  if (src.n() != tgt.n()) fail(ErrorKind::ObjectMismatch, "MC objects on different simplices");
  const DgCategory& cat = src.cat();
  const Field& field = cat.field();
  const int n = src.n();
  auto [lo, hi] = resolve_window(required_window(cat, n, src.objects(), tgt.objects()), n, window);

  MCHomComplex out;
  out.cat = src.category();
  out.n = n;
  out.source = src.objects();
  out.target = tgt.objects();
  const SimplexIndex& idx = SimplexIndex::of(n);

  std::map<int, std::size_t> dims;
  for (int t = lo; t <= hi; ++t) {
    auto& offs = out.face_offsets[t];
    std::size_t running = 0;
    for (std::size_t p = 0; p < idx.size(); ++p) {
      MultiIndex I = idx.at(p);
      const ChainComplex& h = cat.hom(out.source[I.first()], out.target[I.last()]);
      const int q = t + I.level();
      offs.push_back(running);
      for (std::size_t b = 0; b < h.dim(q); ++b) out.basis.push_back({t, I, h.offset(q) + b});
      running += h.dim(q);
    }
    dims[t] = running;
  }

  // Provisional complex (zero differential) so flatten/unflatten can run while assembling.
  out.complex = ChainComplex::make(field, dims, {});
  std::map<int, Matrix> diffs;
  for (int t = lo + 1; t <= hi; ++t) {
    Matrix d(field, dims[t - 1], dims[t]);
    const std::size_t base = out.complex.offset(t);
    for (std::size_t col = 0; col < dims[t]; ++col) {
      const MCBasisElement& e = out.basis[base + col];
      SimplicialCochain a = SimplicialCochain::zero(out.cat, n, t, out.source, out.target);
      a.mutable_component(idx.position(e.face))[e.internal] = field.one();
      Vector image = out.complex.slice(out.flatten(twisted_differential(a, src.eta(), tgt.eta())), t - 1);
      d.set_column(col, image);
    }
    diffs[t] = std::move(d);
  }
  out.complex = ChainComplex::make(field, dims, diffs);
  return out;
}

// ---- simplicial structure ----

MCObject pullback(const MonotoneMap& f, const MCObject& x) {
  SimplicialCochain eta = pullback_cochain(f, x.eta(), true);
  std::vector<std::size_t> objects = eta.source();
  MCObject y = MCObject::make(x.category(), std::move(objects), std::move(eta));
  if (!mc_residual(y).is_zero()) fail(ErrorKind::InternalInvariant, "pullback broke the MC equation");
  return y;
}

MCMorphism pullback(const MonotoneMap& f, const MCMorphism& a) {
  return make_morphism(pullback(f, a.source), pullback(f, a.target), pullback_cochain(f, a.a, false));
}

MCObject iota(DgCategoryPtr cat, std::size_t object, int n) {
  std::vector<std::size_t> objects(n + 1, object);
  SimplicialCochain eta = SimplicialCochain::zero(cat, n, -1, objects, objects);
  for (int i = 0; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) eta.set(MultiIndex((1U << i) | (1U << j)), cat->unit(object));
  }
  return MCObject::make(std::move(cat), std::move(objects), std::move(eta));
}

ChainMap iota_hom_map(const DgCategoryPtr& cat, std::size_t x, std::size_t y, int n,
                      std::optional<std::pair<int, int>> window) {
  MCHomComplex c = hom_complex_mc(iota(cat, x, n), iota(cat, y, n), window);
  const ChainComplex& h = cat->hom(x, y);
  const Field& field = cat->field();
  std::map<int, Matrix> comps;
  for (int q = h.lo(); q <= h.hi(); ++q) {
    Matrix m(field, c.complex.dim(q), h.dim(q));
    for (std::size_t b = 0; b < h.dim(q); ++b) {
      SimplicialCochain a = SimplicialCochain::zero(cat, n, q, c.source, c.target);
      for (int i = 0; i <= n; ++i) a.mutable_component(static_cast<std::size_t>(i))[h.offset(q) + b] = field.one();
      m.set_column(b, c.complex.slice(c.flatten(a), q));
    }
    comps[q] = std::move(m);
  }
  return ChainMap::make(h, c.complex, comps);
}

// ---- Koszul model ----

ChainComplex koszul_model(const ChainComplex& h, int n, std::optional<std::pair<int, int>> window) {
  const Field& field = h.field();
  std::optional<std::pair<int, int>> required;
  if (auto a = h.min_support()) required = std::make_pair(*a - n, *h.max_support());
  auto [lo, hi] = resolve_window(required, n, window);
  const SimplexIndex& idx = SimplexIndex::of(n);

  std::map<int, std::size_t> dims;
  std::map<int, std::vector<std::size_t>> offs;
  for (int t = lo; t <= hi; ++t) {
    std::size_t running = 0;
    for (const auto& I : idx.simplices()) {
      offs[t].push_back(running);
      running += h.dim(t + I.level());
    }
    dims[t] = running;
  }
  std::map<int, Matrix> diffs;
  for (int t = lo + 1; t <= hi; ++t) {
    Matrix d(field, dims[t - 1], dims[t]);
    const Scalar st = sign_scalar(field, t);
    for (std::size_t p = 0; p < idx.size(); ++p) {
      MultiIndex S = idx.at(p);
      const int q = t + S.level();
      const std::size_t col0 = offs[t][p];
      Matrix dh = h.differential(q);
      for (std::size_t b = 0; b < h.dim(q); ++b) {
        for (std::size_t r = 0; r < dh.rows(); ++r) {
          if (!dh(r, b).is_zero()) d(offs[t - 1][p] + r, col0 + b) += dh(r, b);
        }
        for (int i = 0; i <= n; ++i) {
          if (S.contains(i)) continue;
          std::size_t target = idx.position(S.with(i));
          d(offs[t - 1][target] + b, col0 + b) += st * sign_scalar(field, S.insertion_position(i));
        }
      }
    }
    diffs[t] = std::move(d);
  }
  return ChainComplex::make(field, dims, diffs);
}

ChainComplex exterior_contraction_complex(const Field& field, int n) {
  const SimplexIndex& idx = SimplexIndex::of(n);
  std::map<int, std::vector<MultiIndex>> words;
  for (const auto& S : idx.simplices()) words[S.size()].push_back(S);
  std::map<int, std::size_t> dims;
  for (int l = 1; l <= n + 1; ++l) dims[l] = words[l].size();
  std::map<int, Matrix> diffs;
  for (int l = 2; l <= n + 1; ++l) {
    Matrix d(field, dims[l - 1], dims[l]);
    const auto& shorter = words[l - 1];
    for (std::size_t c = 0; c < words[l].size(); ++c) {
      MultiIndex S = words[l][c];
      for (int pos = 0; pos < l; ++pos) {
        MultiIndex T = S.remove(pos);
        auto r = static_cast<std::size_t>(std::find(shorter.begin(), shorter.end(), T) - shorter.begin());
        d(r, c) += sign_scalar(field, pos);
      }
    }
    diffs[l] = std::move(d);
  }
  return ChainComplex::make(field, dims, diffs);
}

}  // namespace dgres
