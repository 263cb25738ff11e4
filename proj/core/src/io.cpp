#include "dgres/io.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "dgres/error.hpp"

namespace dgres::io {

using Json = nlohmann::json;

std::string_view to_string(DocumentKind kind) noexcept {
  switch (kind) {
    case DocumentKind::DgCategory: return "dg-category";
    case DocumentKind::MCObject: return "mc-object";
    case DocumentKind::LocalSystem: return "local-system";
    case DocumentKind::SimplicialSet: return "simplicial-set";
    case DocumentKind::Functor: return "functor";
    case DocumentKind::AdjunctionData: return "adjunction-data";
  }
  return "?";
}

namespace {

[[noreturn]] void parse_fail(const std::string& path, const std::string& message) {
  fail(ErrorKind::ParseError, "field '" + path + "': " + message);
}

void check_keys(const Json& obj, std::initializer_list<std::string_view> allowed, const std::string& path) {
  if (!obj.is_object()) parse_fail(path, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) parse_fail(path.empty() ? key : path + "." + key, "unknown field");
  }
}

std::string join(const std::string& path, std::string_view key) { return path.empty() ? std::string(key) : path + "." + std::string(key); }
std::string at_index(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const Json& member(const Json& obj, std::string_view key, const std::string& path) {
  auto it = obj.find(std::string(key));
  if (it == obj.end()) parse_fail(join(path, key), "missing");
  return *it;
}

std::string get_string(const Json& v, const std::string& path) {
  if (!v.is_string()) parse_fail(path, "expected a string");
  return v.get<std::string>();
}

long long get_int(const Json& v, const std::string& path) {
  if (!v.is_number_integer()) parse_fail(path, "expected an integer");
  return v.get<long long>();
}

const Json& get_array(const Json& v, const std::string& path) {
  if (!v.is_array()) parse_fail(path, "expected an array");
  return v;
}

Scalar parse_scalar(const Field& field, const Json& v, const std::string& path) {
  if (v.is_number_integer()) return field.from_int(v.get<long long>());
  if (!v.is_string()) parse_fail(path, "expected a scalar string");
  try {
    return field.parse(v.get<std::string>());
  } catch (const Error& e) {
    parse_fail(path, e.detail());
  }
}

std::size_t lookup(const std::vector<std::string>& names, const std::string& name, const std::string& path) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) parse_fail(path, "unknown name '" + name + "'");
  return static_cast<std::size_t>(it - names.begin());
}

Json combination_json(const DgCategory& cat, std::size_t x, std::size_t y, const Vector& v) {
  Json out = Json::object();
  const auto& names = cat.basis_names(x, y);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) out[names[i]] = v[i].to_string();
  }
  return out;
}

Vector parse_combination(const DgCategory& cat, std::size_t x, std::size_t y, const Json& j, const std::string& path) {
  if (!j.is_object()) parse_fail(path, "expected a linear combination object");
  Vector v = cat.zero(x, y);
  const auto& names = cat.basis_names(x, y);
  for (const auto& [name, value] : j.items()) v[lookup(names, name, join(path, name))] = parse_scalar(cat.field(), value, join(path, name));
  return v;
}

// ---- categories ----

Json category_json(const DgCategory& cat) {
  Json j;
  j["objects"] = cat.labels();
  const std::size_t k = cat.num_objects();
  Json homs = Json::array();
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      const ChainComplex& h = cat.hom(x, y);
      if (h.total_dim() == 0) continue;
      const auto& names = cat.basis_names(x, y);
      Json basis = Json::array();
      for (std::size_t i = 0; i < h.total_dim(); ++i) basis.push_back({{"name", names[i]}, {"degree", h.degree_of(i)}});
      Json diff = Json::object();
      for (std::size_t i = 0; i < h.total_dim(); ++i) {
        Vector di = h.apply_differential(unit_vector(cat.field(), h.total_dim(), i));
        if (!is_zero(di)) diff[names[i]] = combination_json(cat, x, y, di);
      }
      homs.push_back({{"source", cat.label(x)}, {"target", cat.label(y)}, {"basis", basis}, {"differential", diff}});
    }
  }
  j["homs"] = homs;
  Json units = Json::object();
  for (std::size_t x = 0; x < k; ++x) units[cat.label(x)] = combination_json(cat, x, x, cat.unit(x));
  j["units"] = units;
  Json products = Json::array();
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      for (std::size_t z = 0; z < k; ++z) {
        const std::size_t na = cat.hom(x, y).total_dim(), nb = cat.hom(y, z).total_dim();
        for (std::size_t b = 0; b < nb; ++b) {
          for (std::size_t a = 0; a < na; ++a) {
            const SparseVector& p = cat.product(x, y, z, b, a);
            if (p.empty()) continue;
            products.push_back({{"source", cat.label(x)},
                                {"middle", cat.label(y)},
                                {"target", cat.label(z)},
                                {"left", cat.basis_names(y, z)[b]},
                                {"right", cat.basis_names(x, y)[a]},
                                {"value", combination_json(cat, x, z, to_dense(cat.field(), cat.hom(x, z).total_dim(), p))}});
          }
        }
      }
    }
  }
  j["products"] = products;
  return j;
}

DgCategoryPtr parse_category_fresh(const Field& field, const Json& j, const std::string& path) {
  check_keys(j, {"objects", "homs", "units", "products"}, path);
  DgCategoryBuilder b(field);
  std::vector<std::string> labels;
  const Json& objs = get_array(member(j, "objects", path), join(path, "objects"));
  for (std::size_t i = 0; i < objs.size(); ++i) {
    std::string l = get_string(objs[i], at_index(join(path, "objects"), i));
    if (std::find(labels.begin(), labels.end(), l) != labels.end()) parse_fail(at_index(join(path, "objects"), i), "duplicate object '" + l + "'");
    labels.push_back(l);
    b.add_object(l);
  }
  auto object = [&](const Json& v, const std::string& p) { return lookup(labels, get_string(v, p), p); };

  const std::size_t k = labels.size();
  std::vector<std::vector<std::string>> names(k * k);
  std::vector<ChainComplex> homs(k * k, ChainComplex::zero(field));
  const Json& hl = get_array(member(j, "homs", path), join(path, "homs"));
  for (std::size_t i = 0; i < hl.size(); ++i) {
    const std::string hp = at_index(join(path, "homs"), i);
    check_keys(hl[i], {"source", "target", "basis", "differential"}, hp);
    std::size_t x = object(member(hl[i], "source", hp), join(hp, "source"));
    std::size_t y = object(member(hl[i], "target", hp), join(hp, "target"));
    if (!names[x * k + y].empty()) parse_fail(hp, "hom listed twice");
    const Json& basis = get_array(member(hl[i], "basis", hp), join(hp, "basis"));
    std::vector<std::string> nm;
    std::vector<int> degs;
    for (std::size_t e = 0; e < basis.size(); ++e) {
      const std::string bp = at_index(join(hp, "basis"), e);
      check_keys(basis[e], {"name", "degree"}, bp);
      std::string name = get_string(member(basis[e], "name", bp), join(bp, "name"));
      if (std::find(nm.begin(), nm.end(), name) != nm.end()) parse_fail(join(bp, "name"), "duplicate basis name '" + name + "'");
      int deg = static_cast<int>(get_int(member(basis[e], "degree", bp), join(bp, "degree")));
      if (!degs.empty() && deg < degs.back()) parse_fail(join(bp, "degree"), "basis must be ordered by degree");
      nm.push_back(std::move(name));
      degs.push_back(deg);
    }
    std::map<int, std::size_t> dims;
    std::map<int, std::size_t> offset;
    if (!degs.empty()) {
      for (int q = degs.front(); q <= degs.back(); ++q) dims[q] = 0;
      for (int q : degs) ++dims[q];
      std::size_t run = 0;
      for (const auto& [q, n] : dims) {
        offset[q] = run;
        run += n;
      }
    }
    std::map<int, Matrix> diffs;
    const Json& dj = member(hl[i], "differential", hp);
    if (!dj.is_object()) parse_fail(join(hp, "differential"), "expected an object");
    for (const auto& [col_name, comb] : dj.items()) {
      const std::string cp = join(join(hp, "differential"), col_name);
      std::size_t col = lookup(nm, col_name, cp);
      const int q = degs[col];
      if (!comb.is_object()) parse_fail(cp, "expected a linear combination object");
      for (const auto& [row_name, value] : comb.items()) {
        std::size_t row = lookup(nm, row_name, join(cp, row_name));
        if (degs[row] != q - 1) parse_fail(join(cp, row_name), "differential must lower the degree by one");
        auto it = diffs.find(q);
        if (it == diffs.end()) it = diffs.emplace(q, Matrix(field, dims[q - 1], dims[q])).first;
        it->second(row - offset[q - 1], col - offset[q]) = parse_scalar(field, value, join(cp, row_name));
      }
    }
    ChainComplex c = dims.empty() ? ChainComplex::zero(field) : ChainComplex::make(field, dims, diffs);
    homs[x * k + y] = c;
    names[x * k + y] = nm;
    b.set_hom(x, y, c, nm);
  }
  auto comb_vec = [&](std::size_t x, std::size_t y, const Json& v, const std::string& p) {
    if (!v.is_object()) parse_fail(p, "expected a linear combination object");
    Vector out = zero_vector(field, homs[x * k + y].total_dim());
    for (const auto& [name, value] : v.items()) out[lookup(names[x * k + y], name, join(p, name))] = parse_scalar(field, value, join(p, name));
    return out;
  };
  const Json& units = member(j, "units", path);
  if (!units.is_object()) parse_fail(join(path, "units"), "expected an object");
  for (const auto& [label, comb] : units.items()) {
    std::size_t x = lookup(labels, label, join(join(path, "units"), label));
    b.set_unit(x, comb_vec(x, x, comb, join(join(path, "units"), label)));
  }
  const Json& prods = get_array(member(j, "products", path), join(path, "products"));
  for (std::size_t i = 0; i < prods.size(); ++i) {
    const std::string pp = at_index(join(path, "products"), i);
    check_keys(prods[i], {"source", "middle", "target", "left", "right", "value"}, pp);
    std::size_t x = object(member(prods[i], "source", pp), join(pp, "source"));
    std::size_t y = object(member(prods[i], "middle", pp), join(pp, "middle"));
    std::size_t z = object(member(prods[i], "target", pp), join(pp, "target"));
    std::size_t bb = lookup(names[y * k + z], get_string(member(prods[i], "left", pp), join(pp, "left")), join(pp, "left"));
    std::size_t aa = lookup(names[x * k + y], get_string(member(prods[i], "right", pp), join(pp, "right")), join(pp, "right"));
    b.set_product(x, y, z, bb, aa, comb_vec(x, z, member(prods[i], "value", pp), join(pp, "value")));
  }
  return b.build(true);
}

Json sset_json(const FiniteSSet& k) {
  Json faces = Json::array();
  for (int d = 0; d <= k.dim(); ++d) faces.push_back(d == 0 ? Json::array() : Json(k.faces()[d]));
  return Json{{"counts", k.counts()}, {"faces", faces}};
}

FiniteSSet parse_sset(const Json& j, const std::string& path) {
  check_keys(j, {"counts", "faces"}, path);
  const Json& counts = get_array(member(j, "counts", path), join(path, "counts"));
  std::vector<std::size_t> c;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    long long v = get_int(counts[i], at_index(join(path, "counts"), i));
    if (v < 0) parse_fail(at_index(join(path, "counts"), i), "negative cell count");
    c.push_back(static_cast<std::size_t>(v));
  }
  const Json& faces = get_array(member(j, "faces", path), join(path, "faces"));
  std::vector<std::vector<std::vector<std::size_t>>> f(faces.size());
  for (std::size_t d = 0; d < faces.size(); ++d) {
    const std::string dp = at_index(join(path, "faces"), d);
    const Json& cells = get_array(faces[d], dp);
    for (std::size_t cell = 0; cell < cells.size(); ++cell) {
      const Json& list = get_array(cells[cell], at_index(dp, cell));
      std::vector<std::size_t> fs;
      for (std::size_t i = 0; i < list.size(); ++i) {
        long long v = get_int(list[i], at_index(at_index(dp, cell), i));
        if (v < 0) parse_fail(at_index(at_index(dp, cell), i), "negative face index");
        fs.push_back(static_cast<std::size_t>(v));
      }
      f[d].push_back(std::move(fs));
    }
  }
  return FiniteSSet::make(std::move(c), std::move(f));
}

std::vector<std::size_t> parse_objects(const DgCategory& cat, const Json& j, const std::string& path) {
  const Json& arr = get_array(j, path);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = at_index(path, i);
    out.push_back(lookup(cat.labels(), get_string(arr[i], p), p));
  }
  return out;
}

Json object_labels(const DgCategory& cat, const std::vector<std::size_t>& objects) {
  Json out = Json::array();
  for (auto o : objects) out.push_back(cat.label(o));
  return out;
}

}  // namespace

struct ReaderAccess {
  static DgCategoryPtr category(DocumentReader& r, const Field& field, const Json& j, const std::string& path) {
    DgCategoryPtr fresh = parse_category_fresh(field, j, path);
    std::string key = field.name() + "|" + category_json(*fresh).dump();
    for (const auto& [k, ptr] : r.categories_) {
      if (k == key) return ptr;
    }
    r.categories_.emplace_back(std::move(key), fresh);
    return fresh;
  }
};

Document DocumentReader::parse(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::ParseError, e.what());
  }
  check_keys(j, {"field", "format_version", "kind", "payload"}, "");
  std::string version = get_string(member(j, "format_version", ""), "format_version");
  if (version != kFormatVersion) fail(ErrorKind::VersionMismatch, "document version '" + version + "', expected '" + std::string(kFormatVersion) + "'");
  Document doc;
  if (j.contains("field")) {
    try {
      doc.field = Field::from_name(get_string(j["field"], "field"));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::ParseError) throw;
      parse_fail("field", e.detail());
    }
    if (field_ && !(*field_ == doc.field)) fail(ErrorKind::FieldMismatch, "document field " + doc.field.name() + " differs from " + field_->name());
  } else {
    doc.field = field_.value_or(Field::rationals());
  }
  const Field& field = doc.field;
  std::string kind = get_string(member(j, "kind", ""), "kind");
  const Json& p = member(j, "payload", "");
  if (kind == "dg-category") {
    doc.kind = DocumentKind::DgCategory;
    doc.payload = ReaderAccess::category(*this, field, p, "payload");
  } else if (kind == "mc-object") {
    doc.kind = DocumentKind::MCObject;
    check_keys(p, {"category", "objects", "eta"}, "payload");
    DgCategoryPtr cat = ReaderAccess::category(*this, field, member(p, "category", "payload"), "payload.category");
    auto objects = parse_objects(*cat, member(p, "objects", "payload"), "payload.objects");
    if (objects.empty() || objects.size() > static_cast<std::size_t>(kMaxSimplexDim + 1)) parse_fail("payload.objects", "need between 1 and 13 vertices");
    const int n = static_cast<int>(objects.size()) - 1;
    SimplicialCochain eta = SimplicialCochain::zero(cat, n, -1, objects, objects);
    const Json& ej = member(p, "eta", "payload");
    if (!ej.is_object()) parse_fail("payload.eta", "expected an object");
    for (const auto& [face, comb] : ej.items()) {
      const std::string fp = "payload.eta." + face;
      std::vector<int> entries;
      if (face.size() < 2 || face.front() != '(' || face.back() != ')') parse_fail(fp, "faces are written (i0,i1,...)");
      std::string inner = face.substr(1, face.size() - 2);
      std::size_t pos = 0;
      try {
        while (pos <= inner.size()) {
          std::size_t comma = inner.find(',', pos);
          if (comma == std::string::npos) comma = inner.size();
          std::size_t used = 0;
          std::string tok = inner.substr(pos, comma - pos);
          entries.push_back(std::stoi(tok, &used));
          if (used != tok.size()) parse_fail(fp, "faces are written (i0,i1,...)");
          pos = comma + 1;
        }
      } catch (const std::logic_error&) {
        parse_fail(fp, "faces are written (i0,i1,...)");
      }
      MultiIndex I;
      try {
        I = MultiIndex::from_entries(entries);
      } catch (const Error& e) {
        parse_fail(fp, e.detail());
      }
      if (I.last() > n) parse_fail(fp, "face outside Δ^" + std::to_string(n));
      Vector v = parse_combination(*cat, objects[I.first()], objects[I.last()], comb, fp);
      eta.set(I, std::move(v));
    }
    doc.payload = MCObject::make(cat, objects, std::move(eta));
  } else if (kind == "local-system") {
    doc.kind = DocumentKind::LocalSystem;
    check_keys(p, {"category", "sset", "objects", "eta"}, "payload");
    DgCategoryPtr cat = ReaderAccess::category(*this, field, member(p, "category", "payload"), "payload.category");
    auto K = std::make_shared<const FiniteSSet>(parse_sset(member(p, "sset", "payload"), "payload.sset"));
    auto objects = parse_objects(*cat, member(p, "objects", "payload"), "payload.objects");
    if (objects.size() != K->count(0)) parse_fail("payload.objects", "need one object per vertex");
    SSetCochain eta = SSetCochain::zero(cat, K, -1, objects, objects);
    const Json& ej = member(p, "eta", "payload");
    if (!ej.is_object()) parse_fail("payload.eta", "expected an object");
    for (const auto& [cell, comb] : ej.items()) {
      const std::string cp = "payload.eta." + cell;
      auto colon = cell.find(':');
      int dim = -1;
      long long index = -1;
      try {
        if (colon == std::string::npos) throw std::invalid_argument("colon");
        dim = std::stoi(cell.substr(0, colon));
        index = std::stoll(cell.substr(colon + 1));
      } catch (const std::logic_error&) {
        parse_fail(cp, "cells are written <dim>:<index>");
      }
      if (dim < 1 || index < 0 || static_cast<std::size_t>(index) >= K->count(dim)) parse_fail(cp, "no such cell of positive dimension");
      const auto c = static_cast<std::size_t>(index);
      eta.set(dim, c, parse_combination(*cat, objects[K->first_vertex(dim, c)], objects[K->last_vertex(dim, c)], comb, cp));
    }
    doc.payload = LocalSystem::make(cat, K, objects, std::move(eta));
  } else if (kind == "simplicial-set") {
    doc.kind = DocumentKind::SimplicialSet;
    doc.payload = parse_sset(p, "payload");
  } else if (kind == "functor") {
    doc.kind = DocumentKind::Functor;
    check_keys(p, {"source", "target", "objects", "maps"}, "payload");
    DgCategoryPtr s = ReaderAccess::category(*this, field, member(p, "source", "payload"), "payload.source");
    DgCategoryPtr t = ReaderAccess::category(*this, field, member(p, "target", "payload"), "payload.target");
    const Json& om = member(p, "objects", "payload");
    if (!om.is_object()) parse_fail("payload.objects", "expected an object");
    std::vector<std::optional<std::size_t>> omap(s->num_objects());
    for (const auto& [from, to] : om.items()) {
      const std::string op = "payload.objects." + from;
      omap[lookup(s->labels(), from, op)] = lookup(t->labels(), get_string(to, op), op);
    }
    std::vector<std::size_t> object_map;
    for (std::size_t i = 0; i < omap.size(); ++i) {
      if (!omap[i]) parse_fail("payload.objects." + s->label(i), "missing");
      object_map.push_back(*omap[i]);
    }
    const std::size_t k = s->num_objects();
    std::vector<Matrix> maps;
    for (std::size_t x = 0; x < k; ++x) {
      for (std::size_t y = 0; y < k; ++y) maps.emplace_back(field, t->hom(object_map[x], object_map[y]).total_dim(), s->hom(x, y).total_dim());
    }
    const Json& ml = get_array(member(p, "maps", "payload"), "payload.maps");
    for (std::size_t i = 0; i < ml.size(); ++i) {
      const std::string mp = at_index("payload.maps", i);
      check_keys(ml[i], {"source", "target", "images"}, mp);
      std::size_t x = lookup(s->labels(), get_string(member(ml[i], "source", mp), join(mp, "source")), join(mp, "source"));
      std::size_t y = lookup(s->labels(), get_string(member(ml[i], "target", mp), join(mp, "target")), join(mp, "target"));
      const Json& im = member(ml[i], "images", mp);
      if (!im.is_object()) parse_fail(join(mp, "images"), "expected an object");
      for (const auto& [name, comb] : im.items()) {
        const std::string ip = join(join(mp, "images"), name);
        std::size_t col = lookup(s->basis_names(x, y), name, ip);
        maps[x * k + y].set_column(col, parse_combination(*t, object_map[x], object_map[y], comb, ip));
      }
    }
    doc.payload = DgFunctor::make(s, t, object_map, std::move(maps));
  } else if (kind == "adjunction-data") {
    doc.kind = DocumentKind::AdjunctionData;
    check_keys(p, {"category", "x", "y", "n", "g_img", "truncation"}, "payload");
    AdjunctionData d;
    d.base = ReaderAccess::category(*this, field, member(p, "category", "payload"), "payload.category");
    d.x = lookup(d.base->labels(), get_string(member(p, "x", "payload"), "payload.x"), "payload.x");
    d.y = lookup(d.base->labels(), get_string(member(p, "y", "payload"), "payload.y"), "payload.y");
    d.n = static_cast<int>(get_int(member(p, "n", "payload"), "payload.n"));
    long long tr = get_int(member(p, "truncation", "payload"), "payload.truncation");
    if (tr < 1) parse_fail("payload.truncation", "must be at least 1");
    d.truncation = static_cast<std::size_t>(tr);
    d.g_img = parse_combination(*d.base, d.x, d.y, member(p, "g_img", "payload"), "payload.g_img");
    d.validate();
    doc.payload = std::move(d);
  } else {
    parse_fail("kind", "unknown document kind '" + kind + "'");
  }
  return doc;
}

Document parse_document(std::string_view text, std::optional<Field> field) { return DocumentReader(field).parse(text); }

std::string print_document(const Document& doc) {
  Json p;
  switch (doc.kind) {
    case DocumentKind::DgCategory: p = category_json(*std::get<DgCategoryPtr>(doc.payload)); break;
    case DocumentKind::MCObject: {
      const auto& x = std::get<MCObject>(doc.payload);
      Json eta = Json::object();
      const SimplexIndex& idx = x.eta().index();
      for (std::size_t i = 0; i < idx.size(); ++i) {
        MultiIndex I = idx.at(i);
        if (is_zero(x.eta().component(i))) continue;
        eta[I.to_string()] = combination_json(x.cat(), x.object(I.first()), x.object(I.last()), x.eta().component(i));
      }
      p = Json{{"category", category_json(x.cat())}, {"objects", object_labels(x.cat(), x.objects())}, {"eta", eta}};
      break;
    }
    case DocumentKind::LocalSystem: {
      const auto& x = std::get<LocalSystem>(doc.payload);
      const FiniteSSet& K = *x.sset();
      Json eta = Json::object();
      for (std::size_t i = 0; i < K.total_cells(); ++i) {
        if (is_zero(x.eta().component(i))) continue;
        CellRef c = K.cell_at(i);
        eta[std::to_string(c.dim) + ":" + std::to_string(c.index)] =
            combination_json(x.cat(), x.objects()[K.first_vertex(c.dim, c.index)], x.objects()[K.last_vertex(c.dim, c.index)], x.eta().component(i));
      }
      p = Json{{"category", category_json(x.cat())}, {"sset", sset_json(K)}, {"objects", object_labels(x.cat(), x.objects())}, {"eta", eta}};
      break;
    }
    case DocumentKind::SimplicialSet: p = sset_json(std::get<FiniteSSet>(doc.payload)); break;
    case DocumentKind::Functor: {
      const auto& f = std::get<DgFunctor>(doc.payload);
      const DgCategory& s = *f.source();
      const DgCategory& t = *f.target();
      Json objects = Json::object();
      for (std::size_t x = 0; x < s.num_objects(); ++x) objects[s.label(x)] = t.label(f.object(x));
      Json maps = Json::array();
      for (std::size_t x = 0; x < s.num_objects(); ++x) {
        for (std::size_t y = 0; y < s.num_objects(); ++y) {
          Json images = Json::object();
          const Matrix& m = f.map(x, y);
          for (std::size_t c = 0; c < m.cols(); ++c) {
            Vector col = m.column(c);
            if (!is_zero(col)) images[s.basis_names(x, y)[c]] = combination_json(t, f.object(x), f.object(y), col);
          }
          if (!images.empty()) maps.push_back({{"source", s.label(x)}, {"target", s.label(y)}, {"images", images}});
        }
      }
      p = Json{{"source", category_json(s)}, {"target", category_json(t)}, {"objects", objects}, {"maps", maps}};
      break;
    }
    case DocumentKind::AdjunctionData: {
      const auto& d = std::get<AdjunctionData>(doc.payload);
      p = Json{{"category", category_json(*d.base)},
               {"x", d.base->label(d.x)},
               {"y", d.base->label(d.y)},
               {"n", d.n},
               {"g_img", combination_json(*d.base, d.x, d.y, d.g_img)},
               {"truncation", d.truncation}};
      break;
    }
  }
  Json j{{"field", doc.field.name()}, {"format_version", std::string(kFormatVersion)}, {"kind", std::string(to_string(doc.kind))}, {"payload", p}};
  return j.dump(2) + "\n";
}

std::string canonical(std::string_view text) { return print_document(parse_document(text)); }

Document make_document(DgCategoryPtr cat) {
  Field f = cat->field();
  return Document{DocumentKind::DgCategory, f, std::move(cat)};
}
Document make_document(const MCObject& x) { return Document{DocumentKind::MCObject, x.cat().field(), x}; }
Document make_document(const LocalSystem& x) { return Document{DocumentKind::LocalSystem, x.cat().field(), x}; }
Document make_document(const FiniteSSet& k, const Field& field) { return Document{DocumentKind::SimplicialSet, field, k}; }
Document make_document(const DgFunctor& f) { return Document{DocumentKind::Functor, f.source()->field(), f}; }
Document make_document(const AdjunctionData& data) { return Document{DocumentKind::AdjunctionData, data.base->field(), data}; }

std::map<std::string, std::string> combination(const DgCategory& cat, std::size_t x, std::size_t y, const Vector& v) {
  std::map<std::string, std::string> out;
  const auto& names = cat.basis_names(x, y);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) out[names[i]] = v[i].to_string();
  }
  return out;
}

}  // namespace dgres::io
