#include "dgres/dgcat.hpp"

#include <map>

#include "dgres/error.hpp"

namespace dgres {

namespace {

const SparseVector kEmpty;

std::string deg_label(const ChainComplex& c, std::size_t i) { return std::to_string(c.degree_of(i)); }

}  // namespace

std::size_t DgCategory::object_index(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  fail(ErrorKind::UnknownObject, "unknown object '" + std::string(label) + "'");
}

const SparseVector& DgCategory::product(std::size_t x, std::size_t y, std::size_t z, std::size_t b,
                                        std::size_t a) const {
  const auto& table = products_.at(triple(x, y, z));
  auto it = table.find(key(b, a));
  return it == table.end() ? kEmpty : it->second;
}

Vector DgCategory::compose(std::size_t x, std::size_t y, std::size_t z, const Vector& g, const Vector& f) const {
  const ChainComplex& gy = hom(y, z);
  const ChainComplex& fx = hom(x, y);
  if (g.size() != gy.total_dim() || f.size() != fx.total_dim()) {
    fail(ErrorKind::ShapeMismatch, "compose: operands do not match Hom(" + label(y) + "," + label(z) + ") and Hom(" +
                                       label(x) + "," + label(y) + ")");
  }
  Vector out = zero(x, z);
  const auto& table = products_[triple(x, y, z)];
  if (table.empty()) return out;
  std::vector<std::size_t> fnz;
  for (std::size_t a = 0; a < f.size(); ++a) {
    if (!f[a].is_zero()) fnz.push_back(a);
  }
  for (std::size_t b = 0; b < g.size(); ++b) {
    if (g[b].is_zero()) continue;
    for (auto a : fnz) {
      auto it = table.find(key(b, a));
      if (it == table.end()) continue;
      Scalar c = g[b] * f[a];
      for (const auto& [i, v] : it->second) out[i] += c * v;
    }
  }
  return out;
}

std::string DgCategory::describe_basis(std::size_t x, std::size_t y, std::size_t index) const {
  return "Hom(" + label(x) + "," + label(y) + ")[" + names_.at(pair(x, y)).at(index) + ", deg " +
         deg_label(hom(x, y), index) + "]";
}

namespace {

// Sparse accumulator keyed by basis index.
using Acc = std::map<std::size_t, Scalar>;

void add_into(Acc& acc, const SparseVector& v, const Scalar& c) {
  for (const auto& [i, x] : v) {
    auto [it, fresh] = acc.try_emplace(i, c * x);
    if (!fresh) it->second += c * x;
  }
}

SparseVector finish(const Acc& acc) {
  SparseVector out;
  for (const auto& [i, x] : acc) {
    if (!x.is_zero()) out.emplace_back(i, x);
  }
  return out;
}

std::vector<SparseVector> differential_columns(const ChainComplex& c) {
  std::vector<SparseVector> cols(c.total_dim());
  for (int n = c.lo() + 1; n <= c.hi(); ++n) {
    Matrix d = c.differential(n);
    for (std::size_t j = 0; j < d.cols(); ++j) {
      for (std::size_t i = 0; i < d.rows(); ++i) {
        if (!d(i, j).is_zero()) cols[c.offset(n) + j].emplace_back(c.offset(n - 1) + i, d(i, j));
      }
    }
  }
  return cols;
}

}  // namespace

void DgCategory::validate() const {
  const std::size_t n = num_objects();
  const Scalar one = field_.one();
  auto compose_sparse = [&](std::size_t x, std::size_t y, std::size_t z, const SparseVector& g, const SparseVector& f) {
    Acc acc;
    const auto& table = products_[triple(x, y, z)];
    for (const auto& [b, gb] : g) {
      for (const auto& [a, fa] : f) {
        auto it = table.find(key(b, a));
        if (it != table.end()) add_into(acc, it->second, gb * fa);
      }
    }
    return finish(acc);
  };
  std::vector<std::vector<SparseVector>> dcols(n * n);
  for (std::size_t p = 0; p < n * n; ++p) dcols[p] = differential_columns(homs_[p]);

  // units
  for (std::size_t x = 0; x < n; ++x) {
    const ChainComplex& e = hom(x, x);
    if (!is_homogeneous(e, unit(x), 0) || (e.dim(0) == 0 && e.total_dim() > 0)) {
      fail(ErrorKind::UnitViolation, "unit of " + label(x) + " is not of degree 0");
    }
    if (!is_zero(d(x, x, unit(x)))) fail(ErrorKind::UnitViolation, "d(id_" + label(x) + ") != 0");
    SparseVector u = to_sparse(unit(x));
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t a = 0; a < hom(x, y).total_dim(); ++a) {
        SparseVector ea{{a, one}};
        if (!(compose_sparse(x, x, y, ea, u) == ea)) fail(ErrorKind::UnitViolation, describe_basis(x, y, a) + " ∘ id_" + label(x) + " != itself");
      }
      for (std::size_t a = 0; a < hom(y, x).total_dim(); ++a) {
        SparseVector ea{{a, one}};
        if (!(compose_sparse(y, x, x, u, ea) == ea)) fail(ErrorKind::UnitViolation, "id_" + label(x) + " ∘ " + describe_basis(y, x, a) + " != itself");
      }
    }
  }
  // degrees and Leibniz: d(b∘a) = (-1)^{|a|} db∘a + b∘da
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const ChainComplex& hxy = hom(x, y);
      if (hxy.total_dim() == 0) continue;
      for (std::size_t z = 0; z < n; ++z) {
        const ChainComplex& hyz = hom(y, z);
        const ChainComplex& hxz = hom(x, z);
        const auto& dxz = dcols[pair(x, z)];
        for (std::size_t b = 0; b < hyz.total_dim(); ++b) {
          SparseVector eb{{b, one}};
          const SparseVector& db = dcols[pair(y, z)][b];
          int qb = hyz.degree_of(b);
          for (std::size_t a = 0; a < hxy.total_dim(); ++a) {
            SparseVector ea{{a, one}};
            int pa = hxy.degree_of(a);
            SparseVector ba = compose_sparse(x, y, z, eb, ea);
            Acc lhs;
            for (const auto& [i, v] : ba) {
              if (hxz.degree_of(i) != pa + qb) {
                fail(ErrorKind::ShapeError, describe_basis(y, z, b) + " ∘ " + describe_basis(x, y, a) + " has the wrong degree");
              }
              add_into(lhs, dxz[i], v);
            }
            Acc rhs;
            add_into(rhs, compose_sparse(x, y, z, db, ea), sign_scalar(field_, pa));
            add_into(rhs, compose_sparse(x, y, z, eb, dcols[pair(x, y)][a]), one);
            if (!(finish(lhs) == finish(rhs))) {
              fail(ErrorKind::LeibnizViolation, "Leibniz fails for " + describe_basis(y, z, b) + " ∘ " + describe_basis(x, y, a));
            }
          }
        }
      }
    }
  }
  // associativity on basis triples c∘b∘a
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t dxy = hom(x, y).total_dim();
      if (dxy == 0) continue;
      for (std::size_t z = 0; z < n; ++z) {
        const std::size_t dyz = hom(y, z).total_dim();
        if (dyz == 0) continue;
        for (std::size_t w = 0; w < n; ++w) {
          const std::size_t dzw = hom(z, w).total_dim();
          if (dzw == 0) continue;
          for (std::size_t b = 0; b < dyz; ++b) {
            SparseVector eb{{b, one}};
            for (std::size_t a = 0; a < dxy; ++a) {
              SparseVector ea{{a, one}};
              SparseVector ba = compose_sparse(x, y, z, eb, ea);
              for (std::size_t c = 0; c < dzw; ++c) {
                SparseVector ec{{c, one}};
                SparseVector left = compose_sparse(x, y, w, compose_sparse(y, z, w, ec, eb), ea);
                SparseVector right = compose_sparse(x, z, w, ec, ba);
                if (!(left == right)) {
                  fail(ErrorKind::AssociativityViolation, "associativity fails for " + describe_basis(z, w, c) + ", " +
                                                              describe_basis(y, z, b) + ", " + describe_basis(x, y, a));
                }
              }
            }
          }
        }
      }
    }
  }
}

// ---- builder ----

std::size_t DgCategoryBuilder::add_object(std::string label) {
  for (const auto& l : labels_) {
    if (l == label) fail(ErrorKind::ShapeError, "duplicate object label '" + label + "'");
  }
  labels_.push_back(std::move(label));
  units_.emplace_back();
  return labels_.size() - 1;
}

void DgCategoryBuilder::set_hom(std::size_t x, std::size_t y, ChainComplex hom, std::vector<std::string> names) {
  if (x >= labels_.size() || y >= labels_.size()) fail(ErrorKind::UnknownObject, "set_hom: object index out of range");
  if (!(hom.field() == field_)) fail(ErrorKind::FieldMismatch, "hom complex over " + hom.field().name() + ", category over " + field_.name());
  if (!names.empty() && names.size() != hom.total_dim()) fail(ErrorKind::ShapeMismatch, "basis name count does not match hom dimension");
  homs_.emplace_back(x, y, std::move(hom), std::move(names));
}

void DgCategoryBuilder::set_unit(std::size_t x, Vector unit) { units_.at(x) = std::move(unit); }

void DgCategoryBuilder::set_unit_basis(std::size_t x, std::size_t index) {
  for (auto it = homs_.rbegin(); it != homs_.rend(); ++it) {
    if (std::get<0>(*it) == x && std::get<1>(*it) == x) {
      units_.at(x) = unit_vector(field_, std::get<2>(*it).total_dim(), index);
      return;
    }
  }
  fail(ErrorKind::UnitViolation, "set_unit_basis before End(" + labels_.at(x) + ") was set");
}

void DgCategoryBuilder::set_product(std::size_t x, std::size_t y, std::size_t z, std::size_t b, std::size_t a,
                                    const Vector& value) {
  set_product(x, y, z, b, a, to_sparse(value));
}

void DgCategoryBuilder::set_product(std::size_t x, std::size_t y, std::size_t z, std::size_t b, std::size_t a,
                                    SparseVector value) {
  products_.emplace_back(x, y, z, b, a, std::move(value));
}

DgCategoryPtr DgCategoryBuilder::build(bool validate) const {
  auto cat = std::make_shared<DgCategory>();
  const std::size_t n = labels_.size();
  cat->field_ = field_;
  cat->labels_ = labels_;
  cat->homs_.assign(n * n, ChainComplex::zero(field_));
  cat->names_.assign(n * n, {});
  for (const auto& [x, y, h, names] : homs_) {
    cat->homs_[cat->pair(x, y)] = h;
    cat->names_[cat->pair(x, y)] = names;
  }
  for (std::size_t p = 0; p < n * n; ++p) {
    if (cat->names_[p].empty()) {
      for (std::size_t i = 0; i < cat->homs_[p].total_dim(); ++i) cat->names_[p].push_back("e" + std::to_string(i));
    }
  }
  cat->units_.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    const ChainComplex& e = cat->homs_[cat->pair(x, x)];
    if (units_[x]) {
      if (units_[x]->size() != e.total_dim()) fail(ErrorKind::ShapeMismatch, "unit of " + labels_[x] + " has wrong length");
      cat->units_[x] = *units_[x];
    } else {
      fail(ErrorKind::UnitViolation, "no unit given for " + labels_[x]);
    }
  }
  cat->products_.assign(n * n * n, {});
  for (const auto& [x, y, z, b, a, v] : products_) {
    if (b >= cat->hom(y, z).total_dim() || a >= cat->hom(x, y).total_dim()) fail(ErrorKind::ShapeMismatch, "product index out of range");
    for (const auto& [i, s] : v) {
      if (i >= cat->hom(x, z).total_dim()) fail(ErrorKind::ShapeMismatch, "product value out of range");
      (void)s;
    }
    if (!v.empty()) cat->products_[cat->triple(x, y, z)][DgCategory::key(b, a)] = v;
  }
  // Products through basis-vector units.
  for (std::size_t x = 0; x < n; ++x) {
    const Vector& u = cat->units_[x];
    SparseVector su = to_sparse(u);
    if (su.size() != 1 || !su[0].second.is_one()) continue;
    std::size_t ui = su[0].first;
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t dim = cat->hom(x, y).total_dim();
      for (std::size_t a = 0; a < dim; ++a) {
        SparseVector ea{{a, field_.one()}};
        // a ∘ id_x
        cat->products_[cat->triple(x, x, y)].try_emplace(DgCategory::key(a, ui), ea);
      }
      std::size_t dim_yx = cat->hom(y, x).total_dim();
      for (std::size_t a = 0; a < dim_yx; ++a) {
        SparseVector ea{{a, field_.one()}};  // id_x ∘ a
        cat->products_[cat->triple(y, x, x)].try_emplace(DgCategory::key(ui, a), ea);
      }
    }
  }
  if (validate) cat->validate();
  return cat;
}

// ---- functors ----

DgFunctor DgFunctor::make(DgCategoryPtr source, DgCategoryPtr target, std::vector<std::size_t> object_map,
                          std::vector<Matrix> maps) {
  const std::size_t ns = source->num_objects();
  if (!(source->field() == target->field())) fail(ErrorKind::FieldMismatch, "functor between categories over different fields");
  if (object_map.size() != ns) fail(ErrorKind::ShapeMismatch, "object map has wrong size");
  for (auto o : object_map) {
    if (o >= target->num_objects()) fail(ErrorKind::UnknownObject, "object map points outside the target");
  }
  if (maps.size() != ns * ns) fail(ErrorKind::ShapeMismatch, "functor needs one matrix per ordered object pair");
  DgFunctor F;
  F.source_ = std::move(source);
  F.target_ = std::move(target);
  F.object_map_ = std::move(object_map);
  F.maps_ = std::move(maps);
  const DgCategory& s = *F.source_;
  const DgCategory& t = *F.target_;
  auto where = [&](std::size_t x, std::size_t y) { return "on Hom(" + s.label(x) + "," + s.label(y) + ")"; };
  for (std::size_t x = 0; x < ns; ++x) {
    for (std::size_t y = 0; y < ns; ++y) {
      const Matrix& m = F.map(x, y);
      const ChainComplex& hs = s.hom(x, y);
      const ChainComplex& ht = t.hom(F.object(x), F.object(y));
      if (m.rows() != ht.total_dim() || m.cols() != hs.total_dim()) fail(ErrorKind::ShapeMismatch, "functor matrix has wrong shape " + where(x, y));
      for (std::size_t a = 0; a < hs.total_dim(); ++a) {
        Vector ea = unit_vector(s.field(), hs.total_dim(), a);
        Vector fa = m * ea;
        if (!is_homogeneous(ht, fa, hs.degree_of(a))) fail(ErrorKind::FunctorViolation, "functor does not preserve degrees " + where(x, y));
        if (!(ht.apply_differential(fa) == m * hs.apply_differential(ea))) {
          fail(ErrorKind::FunctorViolation, "functor does not commute with d on " + s.describe_basis(x, y, a));
        }
      }
    }
    if (!(F.apply(x, x, s.unit(x)) == t.unit(F.object(x)))) fail(ErrorKind::FunctorViolation, "functor does not preserve id_" + s.label(x));
  }
  for (std::size_t x = 0; x < ns; ++x) {
    for (std::size_t y = 0; y < ns; ++y) {
      for (std::size_t z = 0; z < ns; ++z) {
        std::size_t dxy = s.hom(x, y).total_dim(), dyz = s.hom(y, z).total_dim();
        for (std::size_t b = 0; b < dyz; ++b) {
          Vector eb = unit_vector(s.field(), dyz, b);
          Vector Fb = F.apply(y, z, eb);
          for (std::size_t a = 0; a < dxy; ++a) {
            Vector ea = unit_vector(s.field(), dxy, a);
            Vector lhs = F.apply(x, z, s.compose(x, y, z, eb, ea));
            Vector rhs = t.compose(F.object(x), F.object(y), F.object(z), Fb, F.apply(x, y, ea));
            if (!(lhs == rhs)) {
              fail(ErrorKind::FunctorViolation, "F(b∘a) != F(b)∘F(a) for " + s.describe_basis(y, z, b) + ", " + s.describe_basis(x, y, a));
            }
          }
        }
      }
    }
  }
  return F;
}

DgFunctor DgFunctor::identity(DgCategoryPtr cat) {
  const std::size_t n = cat->num_objects();
  std::vector<std::size_t> objects(n);
  std::vector<Matrix> maps;
  for (std::size_t x = 0; x < n; ++x) {
    objects[x] = x;
    for (std::size_t y = 0; y < n; ++y) maps.push_back(Matrix::identity(cat->field(), cat->hom(x, y).total_dim()));
  }
  return make(cat, cat, std::move(objects), std::move(maps));
}

ChainMap DgFunctor::hom_map(std::size_t x, std::size_t y) const {
  const ChainComplex& hs = source_->hom(x, y);
  const ChainComplex& ht = target_->hom(object(x), object(y));
  const Matrix& m = map(x, y);
  std::map<int, Matrix> comps;
  for (int n = hs.lo(); n <= hs.hi(); ++n) {
    Matrix c(source_->field(), ht.dim(n), hs.dim(n));
    for (std::size_t i = 0; i < ht.dim(n); ++i) {
      for (std::size_t j = 0; j < hs.dim(n); ++j) c(i, j) = m(ht.offset(n) + i, hs.offset(n) + j);
    }
    comps[n] = c;
  }
  return ChainMap::make(hs, ht, comps, 0);
}

}  // namespace dgres
