#include "dgres/error.hpp"
#include "dgres/mc.hpp"

namespace dgres {

namespace {

MultiIndex edge(int i, int j) { return MultiIndex((1U << i) | (1U << j)); }

// Composite of consecutive edges from i to j in the chosen order.
Vector chain_product(const MCObject& x, int i, int j, bool forward) {
  const DgCategory& cat = x.cat();
  if (forward) {
    Vector acc = x[edge(i, i + 1)];
    for (int l = i + 1; l < j; ++l) acc = cat.compose(x.object(i), x.object(l), x.object(l + 1), x[edge(l, l + 1)], acc);
    return acc;
  }
  for (int l = i; l <= j; ++l) {
    if (x.object(l) != x.object(i)) fail(ErrorKind::ObjectMismatch, "reversed edge product needs equal vertex objects");
  }
  const std::size_t o = x.object(i);
  Vector acc = x[edge(j - 1, j)];
  for (int l = j - 2; l >= i; --l) acc = cat.compose(o, o, o, x[edge(l, l + 1)], acc);
  return acc;
}

MCObject chain_object(const MCObject& x, bool forward) {
  SimplicialCochain phi = SimplicialCochain::zero(x.category(), x.n(), -1, x.objects(), x.objects());
  for (int i = 0; i <= x.n(); ++i) {
    for (int j = i + 1; j <= x.n(); ++j) phi.set(edge(i, j), chain_product(x, i, j, forward));
  }
  return MCObject::make(x.category(), x.objects(), std::move(phi));
}

// H for last vertex m: identities on vertices, ±η(i_0..i_{k-1}, m-1, m) on faces ending at m
// whose second-to-last vertex is not m-1.
SimplicialCochain level_homotopy(const MCObject& x, int m, bool sign_k_minus_1) {
  SimplicialCochain h = identity_cochain(x.category(), x.n(), x.objects());
  const SimplexIndex& idx = h.index();
  const Field& field = x.cat().field();
  for (std::size_t p = 0; p < idx.size(); ++p) {
    MultiIndex I = idx.at(p);
    const int k = I.level();
    if (k < 1 || I.last() != m || I.at(k - 1) == m - 1) continue;
    const Vector& v = x[I.with(m - 1)];
    if (is_zero(v)) continue;
    h.mutable_component(p) = scaled(v, sign_scalar(field, sign_k_minus_1 ? k - 1 : k));
  }
  return h;
}

SimplicialCochain negate_positive_levels(SimplicialCochain h) {
  const Scalar m1 = -h.cat().field().one();
  const SimplexIndex& idx = h.index();
  for (std::size_t p = 0; p < idx.size(); ++p) {
    if (idx.at(p).level() >= 1) h.mutable_component(p) = scaled(h.component(p), m1);
  }
  return h;
}

}  // namespace

MCObject strict_from_chain(const MCObject& x) {
  MCObject y = chain_object(x, true);
  if (!mc_residual(y).is_zero()) fail(ErrorKind::InternalInvariant, "edge composite is not an MC element");
  return y;
}

StrictifyStep strictify_candidate(const MCObject& x, const StrictificationSigns& signs) {
  MCObject target = chain_object(x, signs.chain_order_forward);
  SimplicialCochain h = level_homotopy(x, x.n(), signs.h_sign_k_minus_1);
  SimplicialCochain h_inv = signs.inverse_negates ? negate_positive_levels(h) : h;
  return StrictifyStep{make_morphism(x, target, std::move(h)), make_morphism(target, x, std::move(h_inv)), target};
}

StrictifyStep strictify_step(const MCObject& x) {
  const int n = x.n();
  const SimplexIndex& idx = x.eta().index();
  for (std::size_t p = 0; p < idx.size(); ++p) {
    MultiIndex I = idx.at(p);
    if (I.level() >= 2 && I.last() < n && !is_zero(x.eta().component(p))) {
      fail(ErrorKind::InductiveHypothesisViolated, "η" + I.to_string() + " must vanish below the top vertex");
    }
  }
  StrictifyStep step = strictify_candidate(x, kFrozenStrictificationSigns);
  step.target = strict_from_chain(x);
  return step;
}

StepCheck check_step(const StrictifyStep& step) {
  StepCheck c;
  c.h_closed = is_closed(step.h);
  c.h_inv_closed = is_closed(step.h_inv);
  const MCObject& x = step.h.source;
  const MCObject& y = step.target;
  c.left_inverse = simplicial_compose(step.h_inv.a, step.h.a) == identity_cochain(x.category(), x.n(), x.objects());
  c.right_inverse = simplicial_compose(step.h.a, step.h_inv.a) == identity_cochain(y.category(), y.n(), y.objects());
  return c;
}

std::vector<StrictificationSigns> consistent_strictification_signs(const std::vector<MCObject>& samples) {
  std::vector<StrictificationSigns> out;
  for (int bits = 0; bits < 8; ++bits) {
    StrictificationSigns s{(bits & 1) != 0, (bits & 2) != 0, (bits & 4) != 0};
    bool ok = true;
    for (const auto& x : samples) {
      try {
        ok = check_step(strictify_candidate(x, s)).ok();
      } catch (const Error&) {
        ok = false;
      }
      if (!ok) break;
    }
    if (ok) out.push_back(s);
  }
  return out;
}

std::optional<Vector> strict_inverse(const DgCategory& cat, std::size_t x, std::size_t y, const Vector& f) {
  const Field& field = cat.field();
  const ChainComplex& back = cat.hom(y, x);
  const std::size_t rows = cat.hom(y, y).total_dim() + cat.hom(x, x).total_dim();
  std::vector<Vector> cols;
  for (std::size_t b = 0; b < back.dim(0); ++b) {
    Vector u = unit_vector(field, back.total_dim(), back.offset(0) + b);
    Vector col = cat.compose(y, x, y, f, u);
    Vector other = cat.compose(x, y, x, u, f);
    col.insert(col.end(), other.begin(), other.end());
    cols.push_back(std::move(col));
  }
  Vector rhs = cat.unit(y);
  rhs.insert(rhs.end(), cat.unit(x).begin(), cat.unit(x).end());
  if (cols.empty()) return std::nullopt;
  auto c = Matrix::from_columns(field, rows, cols).solve(rhs);
  if (!c) return std::nullopt;
  return back.embed(*c, 0);
}

SimplicialCochain cochain_inverse(const SimplicialCochain& g) {
  if (g.total_degree() != 0) fail(ErrorKind::WrongDegree, "only degree-0 cochains are inverted");
  const DgCategory& cat = g.cat();
  const int n = g.n();
  const auto& E = g.source();
  const auto& F = g.target();
  std::vector<Vector> u(n + 1);
  for (int i = 0; i <= n; ++i) {
    auto inv = strict_inverse(cat, E[i], F[i], g[MultiIndex(1U << i)]);
    if (!inv) fail(ErrorKind::NotStrictlyInvertible, "vertex component " + std::to_string(i) + " has no strict inverse");
    u[i] = std::move(*inv);
  }
  SimplicialCochain h = SimplicialCochain::zero(g.category(), n, 0, F, E);
  const SimplexIndex& idx = h.index();
  const Scalar m1 = -cat.field().one();
  for (std::size_t p = 0; p < idx.size(); ++p) {
    MultiIndex I = idx.at(p);
    const int k = I.level();
    if (k == 0) {
      h.mutable_component(p) = u[I.first()];
      continue;
    }
    // (g∘h)(I) = 0 solved for h(I): h(I) = -g(i_k)⁻¹ ∘ Σ_{j<k} g(I[j..]) ∘ h(I[..j])
    const std::size_t f0 = F[I.first()], fk = F[I.last()], ek = E[I.last()];
    Vector s = cat.zero(f0, fk);
    for (int j = 0; j < k; ++j) {
      const Vector& gj = g[I.back(j)];
      const Vector& hj = h[I.front(j)];
      if (is_zero(gj) || is_zero(hj)) continue;
      axpy(s, cat.field().one(), cat.compose(f0, E[I.at(j)], fk, gj, hj));
    }
    if (is_zero(s)) continue;
    h.mutable_component(p) = scaled(cat.compose(f0, fk, ek, u[I.last()], s), m1);
  }
  return h;
}

std::pair<MCObject, MCMorphism> gauge_transport(const MCObject& x, const SimplicialCochain& g) {
  if (g.category() != x.category() || g.n() != x.n()) fail(ErrorKind::ObjectMismatch, "gauge lives over a different category or simplex");
  if (g.total_degree() != 0) fail(ErrorKind::WrongDegree, "gauge must have total degree 0");
  if (g.source() != x.objects()) fail(ErrorKind::ObjectMismatch, "gauge source objects differ from the MC object");
  for (int i = 0; i <= x.n(); ++i) {
    MultiIndex v(1U << i);
    if (!is_zero(x.cat().d(g.source()[i], g.target()[i], g[v]))) {
      fail(ErrorKind::NotClosed, "gauge vertex component " + std::to_string(i) + " is not closed");
    }
  }
  SimplicialCochain h = cochain_inverse(g);
  SimplicialCochain eta = simplicial_compose(simplicial_compose(g, x.eta()) + simplicial_delta(g), h);
  MCObject y = MCObject::make(x.category(), g.target(), std::move(eta));
  if (!mc_residual(y).is_zero()) fail(ErrorKind::InternalInvariant, "gauge transport broke the MC equation");
  return {y, make_morphism(x, y, g)};
}

Strictification strictify(const MCObject& x) {
  Strictification out;
  MCObject current = x;
  out.composite = mc_identity(x);
  out.composite_inv = mc_identity(x);
  for (int m = 2; m <= x.n(); ++m) {
    SimplicialCochain h = level_homotopy(current, m, kFrozenStrictificationSigns.h_sign_k_minus_1);
    if (h.is_vertex_only()) continue;
    auto [next, hm] = gauge_transport(current, h);
    StrictifyStep step{hm, make_morphism(next, current, negate_positive_levels(h)), next};
    if (!check_step(step).ok()) fail(ErrorKind::InternalInvariant, "strictification step at vertex " + std::to_string(m) + " failed");
    out.composite = mc_compose(step.h, out.composite);
    out.composite_inv = mc_compose(out.composite_inv, step.h_inv);
    out.steps.push_back(std::move(step));
    current = std::move(next);
  }
  const SimplexIndex& idx = current.eta().index();
  for (std::size_t p = 0; p < idx.size(); ++p) {
    if (idx.at(p).level() >= 2 && !is_zero(current.eta().component(p))) {
      fail(ErrorKind::InternalInvariant, "strictification left a higher component");
    }
  }
  out.result = std::move(current);
  return out;
}

}  // namespace dgres
