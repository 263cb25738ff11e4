#include "dgres/local_system.hpp"

#include <algorithm>

#include "dgres/error.hpp"

namespace dgres {

SSetCochain SSetCochain::zero(DgCategoryPtr cat, SSetPtr k, int t, std::vector<std::size_t> source,
                              std::vector<std::size_t> target) {
  if (source.size() != k->count(0) || target.size() != k->count(0)) {
    fail(ErrorKind::ShapeError, "local system needs one object per vertex on each side");
  }
  for (auto o : source) {
    if (o >= cat->num_objects()) fail(ErrorKind::UnknownObject, "cochain source object out of range");
  }
  for (auto o : target) {
    if (o >= cat->num_objects()) fail(ErrorKind::UnknownObject, "cochain target object out of range");
  }
  SSetCochain a;
  a.cat_ = std::move(cat);
  a.k_ = std::move(k);
  a.t_ = t;
  a.source_ = std::move(source);
  a.target_ = std::move(target);
  a.components_.reserve(a.k_->total_cells());
  for (int d = 0; d <= a.k_->dim(); ++d) {
    for (std::size_t c = 0; c < a.k_->count(d); ++c) a.components_.push_back(a.cat_->zero(a.source_[a.k_->first_vertex(d, c)], a.target_[a.k_->last_vertex(d, c)]));
  }
  return a;
}

const ChainComplex& SSetCochain::hom_at(int k, std::size_t c) const {
  return cat_->hom(source_.at(k_->first_vertex(k, c)), target_.at(k_->last_vertex(k, c)));
}

void SSetCochain::set(int k, std::size_t c, Vector v) {
  const ChainComplex& h = hom_at(k, c);
  if (v.size() != h.total_dim()) fail(ErrorKind::ShapeError, "component has wrong length");
  if (!is_homogeneous(h, v, t_ + k)) {
    fail(ErrorKind::WrongDegree, "component on a " + std::to_string(k) + "-cell must have internal degree " + std::to_string(t_ + k));
  }
  components_[k_->position(k, c)] = std::move(v);
}

bool SSetCochain::is_zero() const noexcept {
  return std::all_of(components_.begin(), components_.end(), [](const Vector& v) { return dgres::is_zero(v); });
}

void SSetCochain::check_compatible(const SSetCochain& o) const {
  if (cat_ != o.cat_ || !(*k_ == *o.k_) || t_ != o.t_ || source_ != o.source_ || target_ != o.target_) {
    fail(ErrorKind::ObjectMismatch, "cochains differ in category, simplicial set, degree or objects");
  }
}

SSetCochain& SSetCochain::operator+=(const SSetCochain& o) {
  check_compatible(o);
  for (std::size_t p = 0; p < components_.size(); ++p) axpy(components_[p], cat_->field().one(), o.components_[p]);
  return *this;
}

SSetCochain& SSetCochain::operator-=(const SSetCochain& o) {
  check_compatible(o);
  Scalar m1 = -cat_->field().one();
  for (std::size_t p = 0; p < components_.size(); ++p) axpy(components_[p], m1, o.components_[p]);
  return *this;
}

bool operator==(const SSetCochain& a, const SSetCochain& b) {
  return a.cat_ == b.cat_ && *a.k_ == *b.k_ && a.t_ == b.t_ && a.source_ == b.source_ && a.target_ == b.target_ &&
         a.components_ == b.components_;
}

SSetCochain ls_delta(const SSetCochain& a) {
  const FiniteSSet& K = *a.sset();
  SSetCochain out = SSetCochain::zero(a.category(), a.sset(), a.total_degree() - 1, a.source(), a.target());
  const Field& field = a.cat().field();
  for (int k = 0; k <= K.dim(); ++k) {
    for (std::size_t c = 0; c < K.count(k); ++c) {
      Vector& v = out.mutable_component(K.position(k, c));
      const Vector& own = a(k, c);
      if (!is_zero(own)) v = a.hom_at(k, c).apply_differential(own);
      for (int j = 1; j <= k - 1; ++j) {
        const Vector& face = a(k - 1, K.face(k, c, j));
        if (!is_zero(face)) axpy(v, sign_scalar(field, a.sign_degree() + j), face);
      }
    }
  }
  return out;
}

SSetCochain ls_compose(const SSetCochain& phi, const SSetCochain& eta) {
  if (phi.category() != eta.category() || !(*phi.sset() == *eta.sset())) {
    fail(ErrorKind::ObjectMismatch, "cochains over different categories or simplicial sets");
  }
  if (eta.target() != phi.source()) fail(ErrorKind::ObjectMismatch, "target objects of the right factor differ from source objects of the left factor");
  const FiniteSSet& K = *phi.sset();
  const DgCategory& cat = phi.cat();
  SSetCochain out = SSetCochain::zero(phi.category(), phi.sset(), phi.total_degree() + eta.total_degree(), eta.source(), phi.target());
  for (int k = 0; k <= K.dim(); ++k) {
    for (std::size_t c = 0; c < K.count(k); ++c) {
      Vector& v = out.mutable_component(K.position(k, c));
      const std::size_t x = eta.source()[K.first_vertex(k, c)];
      const std::size_t z = phi.target()[K.last_vertex(k, c)];
      for (int j = 0; j <= k; ++j) {
        const std::size_t b = K.back(k, c, j);
        const std::size_t f = K.front(k, c, j);
        const Vector& pb = phi(k - j, b);
        const Vector& ef = eta(j, f);
        if (is_zero(pb) || is_zero(ef)) continue;
        const std::size_t y = eta.target()[K.last_vertex(j, f)];
        axpy(v, sign_scalar(cat.field(), static_cast<long>(phi.sign_degree()) * j), cat.compose(x, y, z, pb, ef));
      }
    }
  }
  return out;
}

SSetCochain ls_twisted_differential(const SSetCochain& a, const SSetCochain& eta, const SSetCochain& phi) {
  SSetCochain out = ls_delta(a) + ls_compose(a, eta);
  SSetCochain right = ls_compose(phi, a);
  if (is_odd(a.sign_degree())) {
    out += right;
  } else {
    out -= right;
  }
  return out;
}

LocalSystem LocalSystem::make(DgCategoryPtr cat, SSetPtr k, std::vector<std::size_t> objects, SSetCochain eta) {
  if (eta.category() != cat || !(*eta.sset() == *k)) fail(ErrorKind::ShapeError, "MC element lives over a different category or simplicial set");
  if (eta.total_degree() != -1) fail(ErrorKind::ShapeError, "MC element must have total degree -1");
  if (eta.source() != objects || eta.target() != objects) fail(ErrorKind::ShapeError, "MC element objects differ from the vertex objects");
  for (std::size_t v = 0; v < k->count(0); ++v) {
    if (!is_zero(eta(0, v))) fail(ErrorKind::ShapeError, "MC element must vanish on vertex " + std::to_string(v));
  }
  LocalSystem x;
  x.eta_ = std::move(eta);
  return x;
}

LocalSystem LocalSystem::zero(DgCategoryPtr cat, SSetPtr k, std::vector<std::size_t> objects) {
  auto eta = SSetCochain::zero(cat, k, -1, objects, objects);
  return make(std::move(cat), std::move(k), std::move(objects), std::move(eta));
}

SSetCochain ls_residual(const LocalSystem& x) { return ls_delta(x.eta()) + ls_compose(x.eta(), x.eta()); }

LSValidation ls_validate(const LocalSystem& x) {
  LSValidation v;
  SSetCochain r = ls_residual(x);
  const FiniteSSet& K = *x.sset();
  for (std::size_t p = 0; p < K.total_cells(); ++p) {
    if (!is_zero(r.component(p))) {
      v.first_bad = K.cell_at(p);
      break;
    }
  }
  v.residual_zero = !v.first_bad;
  if (!v.residual_zero) return v;
  v.valid = true;
  if (K.count(1) == 0) return v;
  H0Category h0(x.category());
  for (std::size_t c = 0; c < K.count(1); ++c) {
    auto res = is_homotopy_invertible(h0, x.objects()[K.face(1, c, 1)], x.objects()[K.face(1, c, 0)], x.eta()(1, c));
    v.valid = v.valid && res.verdict == Verdict::Yes;
    v.edges.push_back({c, std::move(res)});
  }
  return v;
}

bool ls_is_valid(const LocalSystem& x) { return ls_validate(x).valid; }

Vector LSHomComplex::flatten(const SSetCochain& a) const {
  if (a.category() != cat || !(*a.sset() == *sset) || a.source() != source || a.target() != target) {
    fail(ErrorKind::ObjectMismatch, "cochain does not belong to this hom complex");
  }
  Vector out = zero_vector(cat->field(), complex.total_dim());
  const int t = a.total_degree();
  if (t < complex.lo() || t > complex.hi()) {
    if (!a.is_zero()) fail(ErrorKind::WindowTooSmall, "cochain of degree " + std::to_string(t) + " lies outside the window");
    return out;
  }
  const auto& offs = cell_offsets.at(t);
  const std::size_t base = complex.offset(t);
  for (std::size_t p = 0; p < sset->total_cells(); ++p) {
    const Vector& c = a.component(p);
    if (is_zero(c)) continue;
    CellRef cell = sset->cell_at(p);
    const ChainComplex& h = a.hom_at(cell.dim, cell.index);
    const int q = t + cell.dim;
    for (std::size_t b = 0; b < h.dim(q); ++b) out[base + offs[p] + b] = c[h.offset(q) + b];
  }
  return out;
}

SSetCochain LSHomComplex::unflatten(const Vector& total, int t) const {
  SSetCochain a = SSetCochain::zero(cat, sset, t, source, target);
  if (t < complex.lo() || t > complex.hi()) return a;
  if (total.size() != complex.total_dim()) fail(ErrorKind::ShapeMismatch, "vector has wrong length for this hom complex");
  const auto& offs = cell_offsets.at(t);
  const std::size_t base = complex.offset(t);
  for (std::size_t p = 0; p < sset->total_cells(); ++p) {
    CellRef cell = sset->cell_at(p);
    const ChainComplex& h = a.hom_at(cell.dim, cell.index);
    const int q = t + cell.dim;
    Vector& c = a.mutable_component(p);
    for (std::size_t b = 0; b < h.dim(q); ++b) c[h.offset(q) + b] = total[base + offs[p] + b];
  }
  return a;
}

LSHomComplex ls_hom_complex(const LocalSystem& src, const LocalSystem& tgt, std::optional<std::pair<int, int>> window) {
  if (src.category() != tgt.category()) fail(ErrorKind::ObjectMismatch, "local systems over different categories");
  if (!(*src.sset() == *tgt.sset())) fail(ErrorKind::ObjectMismatch, "local systems over different simplicial sets");
  const DgCategory& cat = src.cat();
  const Field& field = cat.field();
  const FiniteSSet& K = *src.sset();
  const int dk = std::max(K.dim(), 0);

  std::optional<int> smin, smax;
  for (std::size_t p = 0; p < K.total_cells(); ++p) {
    CellRef cell = K.cell_at(p);
    const ChainComplex& h = cat.hom(src.objects()[K.first_vertex(cell.dim, cell.index)], tgt.objects()[K.last_vertex(cell.dim, cell.index)]);
    if (auto a = h.min_support()) {
      smin = smin ? std::min(*smin, *a) : *a;
      smax = smax ? std::max(*smax, *h.max_support()) : *h.max_support();
    }
  }
  int lo, hi;
  if (window) {
    lo = window->first;
    hi = window->second;
    if (smin && (lo > *smin - dk || hi < *smax)) {
      fail(ErrorKind::WindowTooSmall, "window [" + std::to_string(lo) + ", " + std::to_string(hi) + "] must contain [" +
                                          std::to_string(*smin - dk) + ", " + std::to_string(*smax) + "]");
    }
  } else if (smin) {
    lo = *smin - dk - 1;
    hi = *smax + dk + 1;
  } else {
    lo = -dk - 1;
    hi = dk + 1;
  }

  LSHomComplex out;
  out.cat = src.category();
  out.sset = src.sset();
  out.source = src.objects();
  out.target = tgt.objects();
  std::map<int, std::size_t> dims;
  for (int t = lo; t <= hi; ++t) {
    auto& offs = out.cell_offsets[t];
    std::size_t running = 0;
    for (std::size_t p = 0; p < K.total_cells(); ++p) {
      CellRef cell = K.cell_at(p);
      const ChainComplex& h = cat.hom(out.source[K.first_vertex(cell.dim, cell.index)], out.target[K.last_vertex(cell.dim, cell.index)]);
      const int q = t + cell.dim;
      offs.push_back(running);
      for (std::size_t b = 0; b < h.dim(q); ++b) out.basis.push_back({t, cell, h.offset(q) + b});
      running += h.dim(q);
    }
    dims[t] = running;
  }
  out.complex = ChainComplex::make(field, dims, {});
  std::map<int, Matrix> diffs;
  for (int t = lo + 1; t <= hi; ++t) {
    Matrix d(field, dims[t - 1], dims[t]);
    const std::size_t base = out.complex.offset(t);
    for (std::size_t col = 0; col < dims[t]; ++col) {
      const LSBasisElement& e = out.basis[base + col];
      SSetCochain a = SSetCochain::zero(out.cat, out.sset, t, out.source, out.target);
      a.mutable_component(K.position(e.cell.dim, e.cell.index))[e.internal] = field.one();
      d.set_column(col, out.complex.slice(out.flatten(ls_twisted_differential(a, src.eta(), tgt.eta())), t - 1));
    }
    diffs[t] = std::move(d);
  }
  out.complex = ChainComplex::make(field, dims, diffs);
  return out;
}

SSetCochain restrict(const SSetCochain& a, const SSetInclusion& inclusion) {
  if (!(*a.sset() == inclusion.ambient)) fail(ErrorKind::NotASubcomplex, "inclusion does not end in the cochain's simplicial set");
  const FiniteSSet& L = inclusion.sub;
  std::vector<std::size_t> src, tgt;
  for (std::size_t v = 0; v < L.count(0); ++v) {
    src.push_back(a.source()[inclusion.cells[0][v]]);
    tgt.push_back(a.target()[inclusion.cells[0][v]]);
  }
  SSetCochain out = SSetCochain::zero(a.category(), std::make_shared<const FiniteSSet>(L), a.total_degree(), src, tgt);
  for (int k = 0; k <= L.dim(); ++k) {
    for (std::size_t c = 0; c < L.count(k); ++c) out.mutable_component(L.position(k, c)) = a(k, inclusion.cells[k][c]);
  }
  return out;
}

LocalSystem restrict(const LocalSystem& x, const SSetInclusion& inclusion) {
  SSetCochain eta = restrict(x.eta(), inclusion);
  std::vector<std::size_t> objects = eta.source();
  SSetPtr L = eta.sset();
  return LocalSystem::make(x.category(), std::move(L), std::move(objects), std::move(eta));
}

ChainMap restriction_map(const LocalSystem& src, const LocalSystem& tgt, const SSetInclusion& inclusion,
                         std::optional<std::pair<int, int>> window) {
  LSHomComplex big = ls_hom_complex(src, tgt, window);
  LocalSystem rs = restrict(src, inclusion), rt = restrict(tgt, inclusion);
  if (!window) window = std::make_pair(big.complex.lo(), big.complex.hi());
  LSHomComplex small = ls_hom_complex(rs, rt, window);
  const Field& field = src.cat().field();
  std::map<int, Matrix> comps;
  for (int t = big.complex.lo(); t <= big.complex.hi(); ++t) {
    Matrix m(field, small.complex.dim(t), big.complex.dim(t));
    for (std::size_t col = 0; col < big.complex.dim(t); ++col) {
      Vector e = big.complex.embed(unit_vector(field, big.complex.dim(t), col), t);
      SSetCochain r = restrict(big.unflatten(e, t), inclusion);
      m.set_column(col, small.complex.slice(small.flatten(r), t));
    }
    comps[t] = std::move(m);
  }
  return ChainMap::make(big.complex, small.complex, comps);
}

SSetCochain to_sset_cochain(const SimplicialCochain& a) {
  auto K = std::make_shared<const FiniteSSet>(standard_simplex(a.n()));
  SSetCochain out = SSetCochain::zero(a.category(), K, a.total_degree(), a.source(), a.target());
  const SimplexIndex& idx = a.index();
  for (std::size_t p = 0; p < idx.size(); ++p) out.mutable_component(p) = a.component(p);
  return out;
}

LocalSystem to_local_system(const MCObject& x) {
  SSetCochain eta = to_sset_cochain(x.eta());
  SSetPtr K = eta.sset();
  return LocalSystem::make(x.category(), std::move(K), x.objects(), std::move(eta));
}

MCObject to_mc_object(const LocalSystem& x) {
  const int n = x.sset()->dim();
  if (n < 0 || !(*x.sset() == standard_simplex(n))) fail(ErrorKind::ShapeError, "local system is not over a standard simplex");
  SimplicialCochain eta = SimplicialCochain::zero(x.category(), n, -1, x.objects(), x.objects());
  for (std::size_t p = 0; p < x.sset()->total_cells(); ++p) eta.mutable_component(p) = x.eta().component(p);
  return MCObject::make(x.category(), x.objects(), std::move(eta));
}

}  // namespace dgres
