#include "dgres/dgcat.hpp"
#include "dgres/error.hpp"

namespace dgres::fixtures {

DgCategoryPtr unit_k(const Field& field) {
  DgCategoryBuilder b(field);
  auto o = b.add_object("*");
  b.set_hom(o, o, ChainComplex::concentrated(field, 0), {"id"});
  b.set_unit_basis(o, 0);
  return b.build();
}

namespace {

DgCategoryPtr two_objects(const Field& field, const ChainComplex& hom_ab, std::vector<std::string> names) {
  DgCategoryBuilder b(field);
  auto a = b.add_object("a");
  auto bb = b.add_object("b");
  b.set_hom(a, a, ChainComplex::concentrated(field, 0), {"id_a"});
  b.set_hom(bb, bb, ChainComplex::concentrated(field, 0), {"id_b"});
  b.set_hom(a, bb, hom_ab, std::move(names));
  b.set_unit_basis(a, 0);
  b.set_unit_basis(bb, 0);
  return b.build();
}

}  // namespace

DgCategoryPtr sphere(const Field& field, int n) {
  return two_objects(field, ChainComplex::concentrated(field, n - 1), {"g"});
}

DgCategoryPtr disk(const Field& field, int n) {
  Matrix d(field, 1, 1);
  d(0, 0) = field.one();
  return two_objects(field, ChainComplex::make(field, {{n - 1, 1}, {n, 1}}, {{n, d}}), {"g", "f"});
}

DgCategoryPtr by_name(std::string_view name, const Field& field, int n) {
  if (name == "unit_k") return unit_k(field);
  if (name == "sphere") return sphere(field, n);
  if (name == "disk") return disk(field, n);
  fail(ErrorKind::UnknownFixture, "unknown fixture '" + std::string(name) + "' (expected unit_k, sphere or disk)");
}

namespace {

// Matrix units of Hom(V, W) in one degree p: (s, r, c) with c a basis vector of V_s
// and r a basis vector of W_{s+p}.
struct Unit {
  int s;
  std::size_t r, c;
};

std::vector<Unit> hom_units(const ChainComplex& v, const ChainComplex& w, int p) {
  std::vector<Unit> out;
  for (int s = v.lo(); s <= v.hi(); ++s) {
    for (std::size_t c = 0; c < v.dim(s); ++c) {
      for (std::size_t r = 0; r < w.dim(s + p); ++r) out.push_back({s, r, c});
    }
  }
  return out;
}

struct InternalHom {
  ChainComplex complex;
  std::map<int, std::vector<Unit>> units;
  std::size_t index(const ChainComplex& v, int p, int s, std::size_t r, std::size_t c) const {
    const auto& us = units.at(p);
    for (std::size_t i = 0; i < us.size(); ++i) {
      if (us[i].s == s && us[i].r == r && us[i].c == c) return complex.offset(p) + i;
    }
    (void)v;
    fail(ErrorKind::InternalInvariant, "matrix unit not found");
  }
};

InternalHom internal_hom(const ChainComplex& v, const ChainComplex& w) {
  const Field& field = v.field();
  InternalHom h;
  if (v.empty_window() || w.empty_window()) {
    h.complex = ChainComplex::zero(field);
    return h;
  }
  int lo = w.lo() - v.hi(), hi = w.hi() - v.lo();
  std::map<int, std::size_t> dims;
  for (int p = lo; p <= hi; ++p) {
    h.units[p] = hom_units(v, w, p);
    dims[p] = h.units[p].size();
  }
  // D(E) = d_W E - (-1)^p E d_V
  std::map<int, Matrix> diffs;
  for (int p = lo + 1; p <= hi; ++p) {
    Matrix d(field, dims[p - 1], dims[p]);
    const auto& src = h.units[p];
    const auto& tgt = h.units[p - 1];
    auto find = [&](int s, std::size_t r, std::size_t c) {
      for (std::size_t i = 0; i < tgt.size(); ++i) {
        if (tgt[i].s == s && tgt[i].r == r && tgt[i].c == c) return i;
      }
      fail(ErrorKind::InternalInvariant, "matrix unit not found");
    };
    Scalar sign = sign_scalar(field, p);
    for (std::size_t j = 0; j < src.size(); ++j) {
      auto [s, r, c] = src[j];
      Matrix dw = w.differential(s + p);
      for (std::size_t r2 = 0; r2 < dw.rows(); ++r2) {
        if (!dw(r2, r).is_zero()) d(find(s, r2, c), j) += dw(r2, r);
      }
      Matrix dv = v.differential(s + 1);
      for (std::size_t c2 = 0; c2 < dv.cols(); ++c2) {
        if (!dv(c, c2).is_zero()) d(find(s + 1, r, c2), j) -= sign * dv(c, c2);
      }
    }
    diffs[p] = d;
  }
  h.complex = ChainComplex::make(field, dims, diffs);
  return h;
}

}  // namespace

DgCategoryPtr complexes_category(const std::vector<ChainComplex>& objects) {
  if (objects.empty()) fail(ErrorKind::ShapeError, "complexes_category needs at least one complex");
  const Field& field = objects.front().field();
  const std::size_t n = objects.size();
  DgCategoryBuilder b(field);
  for (std::size_t i = 0; i < n; ++i) b.add_object("V" + std::to_string(i));
  std::vector<InternalHom> homs(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      homs[i * n + j] = internal_hom(objects[i], objects[j]);
      b.set_hom(i, j, homs[i * n + j].complex);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto& e = homs[i * n + i];
    Vector unit = zero_vector(field, e.complex.total_dim());
    for (int s = objects[i].lo(); s <= objects[i].hi(); ++s) {
      for (std::size_t c = 0; c < objects[i].dim(s); ++c) unit[e.index(objects[i], 0, s, c, c)] = field.one();
    }
    b.set_unit(i, unit);
  }
  // E'∘E = (-1)^{pq} (E' E), nonzero when E' starts where E ends.
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const auto& hxy = homs[x * n + y];
        const auto& hyz = homs[y * n + z];
        const auto& hxz = homs[x * n + z];
        for (const auto& [p, us] : hxy.units) {
          for (std::size_t ia = 0; ia < us.size(); ++ia) {
            const Unit& ua = us[ia];
            for (const auto& [q, vs] : hyz.units) {
              for (std::size_t ib = 0; ib < vs.size(); ++ib) {
                const Unit& ub = vs[ib];
                if (ub.s != ua.s + p || ub.c != ua.r) continue;
                std::size_t target = hxz.index(objects[x], p + q, ua.s, ub.r, ua.c);
                SparseVector v{{target, sign_scalar(field, static_cast<long>(p) * q)}};
                b.set_product(x, y, z, hyz.complex.offset(q) + ib, hxy.complex.offset(p) + ia, std::move(v));
              }
            }
          }
        }
      }
    }
  }
  return b.build();
}

DgCategoryPtr algebra(const Field& field, const std::vector<std::vector<Vector>>& mult) {
  const std::size_t dim = mult.size();
  DgCategoryBuilder b(field);
  auto o = b.add_object("*");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i) names.push_back(i == 0 ? "1" : "a" + std::to_string(i));
  b.set_hom(o, o, ChainComplex::concentrated(field, 0, dim), names);
  b.set_unit_basis(o, 0);
  for (std::size_t bi = 0; bi < dim; ++bi) {
    if (mult[bi].size() != dim) fail(ErrorKind::ShapeMismatch, "multiplication table is not square");
    for (std::size_t ai = 0; ai < dim; ++ai) b.set_product(o, o, o, bi, ai, mult[bi][ai]);
  }
  return b.build();
}

}  // namespace dgres::fixtures
