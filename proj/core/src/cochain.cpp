#include "dgres/cochain.hpp"

#include "dgres/error.hpp"

namespace dgres {

SimplicialCochain SimplicialCochain::zero(DgCategoryPtr cat, int n, int t, std::vector<std::size_t> source,
                                          std::vector<std::size_t> target) {
  if (source.size() != static_cast<std::size_t>(n + 1) || target.size() != static_cast<std::size_t>(n + 1)) {
    fail(ErrorKind::ShapeError, "cochain on Δ^" + std::to_string(n) + " needs " + std::to_string(n + 1) + " objects per side");
  }
  for (auto o : source) {
    if (o >= cat->num_objects()) fail(ErrorKind::UnknownObject, "cochain source object out of range");
  }
  for (auto o : target) {
    if (o >= cat->num_objects()) fail(ErrorKind::UnknownObject, "cochain target object out of range");
  }
  SimplicialCochain a;
  a.cat_ = std::move(cat);
  a.n_ = n;
  a.t_ = t;
  a.source_ = std::move(source);
  a.target_ = std::move(target);
  const SimplexIndex& idx = SimplexIndex::of(n);
  a.components_.reserve(idx.size());
  for (const auto& I : idx.simplices()) a.components_.push_back(a.cat_->zero(a.source_[I.first()], a.target_[I.last()]));
  return a;
}

void SimplicialCochain::set(MultiIndex I, Vector v) {
  const ChainComplex& h = hom_at(I);
  if (v.size() != h.total_dim()) fail(ErrorKind::ShapeError, "component on " + I.to_string() + " has wrong length");
  if (!is_homogeneous(h, v, internal_degree(I))) {
    fail(ErrorKind::WrongDegree, "component on " + I.to_string() + " must have internal degree " + std::to_string(internal_degree(I)));
  }
  components_[index().position(I)] = std::move(v);
}

bool SimplicialCochain::is_zero() const noexcept {
  for (const auto& c : components_) {
    if (!dgres::is_zero(c)) return false;
  }
  return true;
}

bool SimplicialCochain::is_vertex_only() const noexcept {
  const auto& list = SimplexIndex::of(n_).simplices();
  for (std::size_t p = 0; p < list.size(); ++p) {
    if (list[p].level() >= 1 && !dgres::is_zero(components_[p])) return false;
  }
  return true;
}

void SimplicialCochain::check_compatible(const SimplicialCochain& o) const {
  if (cat_ != o.cat_ || n_ != o.n_ || t_ != o.t_ || source_ != o.source_ || target_ != o.target_) {
    fail(ErrorKind::ObjectMismatch, "cochains differ in category, level, degree or objects");
  }
}

SimplicialCochain& SimplicialCochain::operator+=(const SimplicialCochain& o) {
  check_compatible(o);
  for (std::size_t p = 0; p < components_.size(); ++p) axpy(components_[p], cat_->field().one(), o.components_[p]);
  return *this;
}

SimplicialCochain& SimplicialCochain::operator-=(const SimplicialCochain& o) {
  check_compatible(o);
  Scalar m1 = -cat_->field().one();
  for (std::size_t p = 0; p < components_.size(); ++p) axpy(components_[p], m1, o.components_[p]);
  return *this;
}

SimplicialCochain SimplicialCochain::operator-() const { return (-cat_->field().one()) * *this; }

SimplicialCochain operator*(const Scalar& s, const SimplicialCochain& a) {
  SimplicialCochain out = a;
  for (auto& c : out.components_) c = scaled(c, s);
  return out;
}

bool operator==(const SimplicialCochain& a, const SimplicialCochain& b) {
  return a.cat_ == b.cat_ && a.n_ == b.n_ && a.t_ == b.t_ && a.source_ == b.source_ && a.target_ == b.target_ &&
         a.components_ == b.components_;
}

namespace {

SimplicialCochain like(const SimplicialCochain& a, int t) {
  return SimplicialCochain::zero(a.category(), a.n(), t, a.source(), a.target());
}

}  // namespace

SimplicialCochain d_part(const SimplicialCochain& a) {
  SimplicialCochain out = like(a, a.total_degree() - 1);
  const SimplexIndex& idx = a.index();
  for (std::size_t p = 0; p < idx.size(); ++p) {
    MultiIndex I = idx.at(p);
    if (is_zero(a.component(p))) continue;
    out.mutable_component(p) = a.hom_at(I).apply_differential(a.component(p));
  }
  return out;
}

SimplicialCochain Delta_part(const SimplicialCochain& a) {
  SimplicialCochain out = like(a, a.total_degree() - 1);
  const SimplexIndex& idx = a.index();
  for (std::size_t p = 0; p < idx.size(); ++p) {
    MultiIndex I = idx.at(p);
    int k = I.level();
    for (int j = 1; j <= k - 1; ++j) {
      const Vector& face = a[I.remove(j)];
      if (is_zero(face)) continue;
      Scalar s = sign_scalar(a.cat().field(), a.sign_degree() + j);
      axpy(out.mutable_component(p), s, face);
    }
  }
  return out;
}

SimplicialCochain simplicial_delta(const SimplicialCochain& a) { return d_part(a) + Delta_part(a); }

SimplicialCochain simplicial_compose(const SimplicialCochain& phi, const SimplicialCochain& eta) {
  if (phi.category() != eta.category() || phi.n() != eta.n()) fail(ErrorKind::ObjectMismatch, "cochains over different categories or levels");
  if (eta.target() != phi.source()) fail(ErrorKind::ObjectMismatch, "target objects of the right factor differ from source objects of the left factor");
  const DgCategory& cat = phi.cat();
  SimplicialCochain out = SimplicialCochain::zero(phi.category(), phi.n(), phi.total_degree() + eta.total_degree(),
                                                  eta.source(), phi.target());
  const SimplexIndex& idx = phi.index();
  std::vector<bool> phi_nz(idx.size()), eta_nz(idx.size());
  for (std::size_t p = 0; p < idx.size(); ++p) {
    phi_nz[p] = !is_zero(phi.component(p));
    eta_nz[p] = !is_zero(eta.component(p));
  }
  for (std::size_t p = 0; p < idx.size(); ++p) {
    MultiIndex I = idx.at(p);
    int k = I.level();
    for (int j = 0; j <= k; ++j) {
      std::size_t pa = idx.position(I.back(j));
      std::size_t pb = idx.position(I.front(j));
      if (!phi_nz[pa] || !eta_nz[pb]) continue;
      std::size_t x = eta.source()[I.first()], y = eta.target()[I.at(j)], z = phi.target()[I.last()];
      Vector c = cat.compose(x, y, z, phi.component(pa), eta.component(pb));
      axpy(out.mutable_component(p), sign_scalar(cat.field(), static_cast<long>(phi.sign_degree()) * j), c);
    }
  }
  return out;
}

SimplicialCochain identity_cochain(DgCategoryPtr cat, int n, const std::vector<std::size_t>& objects) {
  SimplicialCochain a = SimplicialCochain::zero(cat, n, 0, objects, objects);
  for (int i = 0; i <= n; ++i) a.set(MultiIndex(1U << i), cat->unit(objects[i]));
  return a;
}

SimplicialCochain pullback_cochain(const MonotoneMap& f, const SimplicialCochain& a, bool unit_on_degenerate_edges) {
  if (f.target_dim() != a.n()) fail(ErrorKind::NotMonotone, "pullback: map target is not the cochain's simplex");
  const int m = f.source_dim();
  std::vector<std::size_t> src(m + 1), tgt(m + 1);
  for (int j = 0; j <= m; ++j) {
    src[j] = a.source()[f(j)];
    tgt[j] = a.target()[f(j)];
  }
  SimplicialCochain out = SimplicialCochain::zero(a.category(), m, a.total_degree(), src, tgt);
  const SimplexIndex& idx = out.index();
  for (std::size_t p = 0; p < idx.size(); ++p) {
    MultiIndex J = idx.at(p);
    std::uint32_t image = 0;
    bool repeated = false;
    for (int v : J.entries()) {
      std::uint32_t bit = 1U << f(v);
      if (image & bit) repeated = true;
      image |= bit;
    }
    if (!repeated) {
      out.mutable_component(p) = a[MultiIndex(image)];
    } else if (unit_on_degenerate_edges && J.level() == 1) {
      if (src[J.first()] != tgt[J.last()]) fail(ErrorKind::ObjectMismatch, "degenerate edge between different objects");
      out.mutable_component(p) = a.cat().unit(src[J.first()]);
    }
  }
  return out;
}

}  // namespace dgres
