#include "dgres/complex.hpp"

#include <algorithm>
#include <sstream>

#include "dgres/error.hpp"

namespace dgres {

ChainComplex ChainComplex::make(const Field& field, const std::map<int, std::size_t>& dims,
                                const std::map<int, Matrix>& differentials) {
  ChainComplex c;
  c.field_ = field;
  if (!dims.empty()) {
    c.lo_ = dims.begin()->first;
    c.hi_ = dims.rbegin()->first;
  }
  std::size_t width = c.empty_window() ? 0 : static_cast<std::size_t>(c.hi_ - c.lo_ + 1);
  c.dims_.assign(width, 0);
  for (const auto& [n, k] : dims) c.dims_[n - c.lo_] = k;
  c.d_.clear();
  for (int n = c.lo_; n <= c.hi_; ++n) c.d_.emplace_back(field, c.dim(n - 1), c.dim(n));

  for (const auto& [n, m] : differentials) {
    if (!(m.field() == field)) fail(ErrorKind::FieldMismatch, "differential d_" + std::to_string(n) + " over " + m.field().name());
    if (m.rows() != c.dim(n - 1) || m.cols() != c.dim(n)) {
      fail(ErrorKind::ShapeMismatch, "d_" + std::to_string(n) + " has shape " + std::to_string(m.rows()) + "x" +
                                         std::to_string(m.cols()) + ", expected " + std::to_string(c.dim(n - 1)) + "x" +
                                         std::to_string(c.dim(n)));
    }
    if (n < c.lo_ || n > c.hi_) {
      if (!m.empty()) fail(ErrorKind::ShapeMismatch, "d_" + std::to_string(n) + " outside the degree window");
      continue;
    }
    c.d_[n - c.lo_] = m;
  }
  for (int n = c.lo_ + 1; n <= c.hi_; ++n) {
    const Matrix& dn = c.d_[n - c.lo_];
    const Matrix& dn1 = c.d_[n - 1 - c.lo_];
    if (dn.empty() || dn1.empty()) continue;
    if (!(dn1 * dn).is_zero()) fail(ErrorKind::NotSquareZero, "d_" + std::to_string(n - 1) + " d_" + std::to_string(n) + " != 0 at degree " + std::to_string(n));
  }
  c.rebuild_offsets();
  return c;
}

ChainComplex ChainComplex::zero(const Field& field) { return make(field, {}); }

ChainComplex ChainComplex::concentrated(const Field& field, int degree, std::size_t dim) {
  return make(field, {{degree, dim}});
}

void ChainComplex::rebuild_offsets() {
  offsets_.assign(dims_.size(), 0);
  total_ = 0;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    offsets_[i] = total_;
    total_ += dims_[i];
  }
}

std::size_t ChainComplex::dim(int n) const noexcept {
  if (n < lo_ || n > hi_) return 0;
  return dims_[n - lo_];
}

Matrix ChainComplex::differential(int n) const {
  if (n < lo_ || n > hi_) return Matrix(field_, dim(n - 1), dim(n));
  return d_[n - lo_];
}

std::size_t ChainComplex::offset(int n) const noexcept {
  if (n < lo_) return 0;
  if (n > hi_) return total_;
  return offsets_[n - lo_];
}

int ChainComplex::degree_of(std::size_t index) const {
  if (index >= total_) fail(ErrorKind::ShapeMismatch, "basis index out of range");
  for (int n = hi_; n >= lo_; --n) {
    if (dims_[n - lo_] != 0 && offsets_[n - lo_] <= index) return n;
  }
  fail(ErrorKind::InternalInvariant, "degree lookup failed");
}

Matrix ChainComplex::total_differential() const {
  Matrix m(field_, total_, total_);
  for (int n = lo_ + 1; n <= hi_; ++n) {
    if (dim(n) == 0 || dim(n - 1) == 0) continue;
    m.set_block(offset(n - 1), offset(n), d_[n - lo_]);
  }
  return m;
}

Vector ChainComplex::apply_differential(const Vector& total) const {
  if (total.size() != total_) fail(ErrorKind::ShapeMismatch, "vector length does not match complex");
  Vector out = zero_vector(field_, total_);
  for (int n = lo_ + 1; n <= hi_; ++n) {
    if (dim(n) == 0 || dim(n - 1) == 0) continue;
    Vector part = d_[n - lo_] * slice(total, n);
    std::copy(part.begin(), part.end(), out.begin() + static_cast<std::ptrdiff_t>(offset(n - 1)));
  }
  return out;
}

Vector ChainComplex::slice(const Vector& total, int n) const {
  if (total.size() != total_) fail(ErrorKind::ShapeMismatch, "vector length does not match complex");
  auto begin = total.begin() + static_cast<std::ptrdiff_t>(offset(n));
  return Vector(begin, begin + static_cast<std::ptrdiff_t>(dim(n)));
}

Vector ChainComplex::embed(const Vector& homogeneous, int n) const {
  if (homogeneous.size() != dim(n)) fail(ErrorKind::ShapeMismatch, "homogeneous vector length does not match degree " + std::to_string(n));
  Vector out = zero_vector(field_, total_);
  std::copy(homogeneous.begin(), homogeneous.end(), out.begin() + static_cast<std::ptrdiff_t>(offset(n)));
  return out;
}

std::optional<int> ChainComplex::min_support() const noexcept {
  for (int n = lo_; n <= hi_; ++n) {
    if (dim(n) != 0) return n;
  }
  return std::nullopt;
}

std::optional<int> ChainComplex::max_support() const noexcept {
  for (int n = hi_; n >= lo_; --n) {
    if (dim(n) != 0) return n;
  }
  return std::nullopt;
}

std::map<int, std::size_t> ChainComplex::dims() const {
  std::map<int, std::size_t> out;
  for (int n = lo_; n <= hi_; ++n) out[n] = dim(n);
  return out;
}

bool operator==(const ChainComplex& a, const ChainComplex& b) {
  if (!(a.field_ == b.field_)) return false;
  auto sa = a.min_support(), sb = b.min_support();
  if (sa != sb) return false;
  if (!sa) return true;
  int lo = *sa, hi = std::max(*a.max_support(), *b.max_support());
  for (int n = lo; n <= hi; ++n) {
    if (a.dim(n) != b.dim(n)) return false;
  }
  for (int n = lo + 1; n <= hi; ++n) {
    if (!(a.differential(n) == b.differential(n))) return false;
  }
  return true;
}

// ---- chain maps ----

ChainMap ChainMap::make(const ChainComplex& source, const ChainComplex& target,
                        const std::map<int, Matrix>& components, int shift) {
  if (!(source.field() == target.field())) fail(ErrorKind::FieldMismatch, "chain map between complexes over different fields");
  ChainMap f;
  f.source_ = source;
  f.target_ = target;
  f.shift_ = shift;
  for (const auto& [n, m] : components) {
    if (m.rows() != target.dim(n + shift) || m.cols() != source.dim(n)) {
      fail(ErrorKind::ShapeMismatch, "chain map component at degree " + std::to_string(n) + " has wrong shape");
    }
    if (!m.is_zero()) f.components_[n] = m;
  }
  // d_t f_n = (-1)^shift f_{n-1} d_s
  Scalar sign = sign_scalar(source.field(), shift);
  int lo = std::min(source.lo(), target.lo() - shift);
  int hi = std::max(source.hi(), target.hi() - shift);
  for (int n = lo; n <= hi + 1; ++n) {
    Matrix lhs = target.differential(n + shift) * f.component(n);
    Matrix rhs = sign * (f.component(n - 1) * source.differential(n));
    if (!(lhs == rhs)) fail(ErrorKind::NotChainMap, "chain map fails to commute with d at degree " + std::to_string(n));
  }
  return f;
}

ChainMap ChainMap::identity(const ChainComplex& c) {
  std::map<int, Matrix> comps;
  for (int n = c.lo(); n <= c.hi(); ++n) comps[n] = Matrix::identity(c.field(), c.dim(n));
  return make(c, c, comps, 0);
}

ChainMap ChainMap::zero(const ChainComplex& source, const ChainComplex& target, int shift) {
  return make(source, target, {}, shift);
}

Matrix ChainMap::component(int n) const {
  auto it = components_.find(n);
  if (it != components_.end()) return it->second;
  return Matrix(source_.field(), target_.dim(n + shift_), source_.dim(n));
}

// ---- homology ----

std::size_t HomologyReport::rank(int n) const {
  auto it = ranks.find(n);
  return it == ranks.end() ? 0 : it->second;
}

bool HomologyReport::acyclic() const {
  return std::all_of(ranks.begin(), ranks.end(), [](const auto& kv) { return kv.second == 0; });
}

std::map<int, std::size_t> HomologyReport::nonzero_ranks() const {
  std::map<int, std::size_t> out;
  for (const auto& [n, r] : ranks) {
    if (r != 0) out[n] = r;
  }
  return out;
}

HomologyBasis::HomologyBasis(const ChainComplex& c, int n) : d_out_(c.differential(n)), d_in_(c.differential(n + 1)) {
  const Field& field = c.field();
  std::size_t dim = c.dim(n);
  std::vector<Vector> cycles;
  if (d_out_.rows() == 0) {
    for (std::size_t i = 0; i < dim; ++i) cycles.push_back(unit_vector(field, dim, i));
  } else {
    cycles = d_out_.kernel_basis();
  }
  // Cycles whose columns are pivots after the boundary columns span a complement.
  Matrix z = Matrix::from_columns(field, dim, cycles);
  Matrix combined = hstack(d_in_, z);
  auto ech = combined.rref();
  for (auto p : ech.pivots) {
    if (p >= d_in_.cols()) reps_.push_back(cycles[p - d_in_.cols()]);
  }
  reps_and_boundaries_ = hstack(Matrix::from_columns(field, dim, reps_), d_in_);
}

std::optional<Vector> HomologyBasis::class_of(const Vector& z) const {
  if (z.size() != d_out_.cols()) fail(ErrorKind::ShapeMismatch, "class_of: vector has wrong length");
  if (!is_zero(d_out_ * z)) return std::nullopt;
  auto x = reps_and_boundaries_.solve(z);
  if (!x) fail(ErrorKind::InternalInvariant, "cycle outside span of representatives and boundaries");
  x->resize(reps_.size());
  return x;
}

std::optional<Vector> HomologyBasis::bounding_chain(const Vector& z) const {
  if (z.size() != d_out_.cols()) fail(ErrorKind::ShapeMismatch, "bounding_chain: vector has wrong length");
  return d_in_.solve(z);
}

HomologyReport homology(const ChainComplex& c) {
  HomologyReport report;
  for (int n = c.lo(); n <= c.hi(); ++n) {
    HomologyBasis basis(c, n);
    report.ranks[n] = basis.rank();
    report.representatives[n] = basis.representatives();
  }
  return report;
}

std::map<int, std::size_t> homology_ranks(const ChainComplex& c) {
  std::map<int, std::size_t> ranks;
  std::map<int, std::size_t> drank;
  for (int n = c.lo(); n <= c.hi() + 1; ++n) drank[n] = c.differential(n).rank();
  for (int n = c.lo(); n <= c.hi(); ++n) ranks[n] = c.dim(n) - drank[n] - drank[n + 1];
  return ranks;
}

bool is_acyclic(const ChainComplex& c) {
  auto ranks = homology_ranks(c);
  return std::all_of(ranks.begin(), ranks.end(), [](const auto& kv) { return kv.second == 0; });
}

// ---- constructions ----

ChainComplex cone(const ChainMap& f) {
  if (f.shift() != 0) fail(ErrorKind::ShiftNotZero, "cone needs a degree-0 chain map");
  const ChainComplex& s = f.source();
  const ChainComplex& t = f.target();
  const Field& field = s.field();
  int lo = std::min(t.lo(), s.lo() + 1);
  int hi = std::max(t.hi(), s.hi() + 1);
  if (t.empty_window()) lo = s.lo() + 1, hi = s.hi() + 1;
  if (s.empty_window()) lo = t.lo(), hi = t.hi();
  std::map<int, std::size_t> dims;
  for (int n = lo; n <= hi; ++n) dims[n] = t.dim(n) + s.dim(n - 1);
  std::map<int, Matrix> diffs;
  for (int n = lo + 1; n <= hi; ++n) {
    Matrix d(field, dims[n - 1], dims[n]);
    d.set_block(0, 0, t.differential(n));
    d.set_block(0, t.dim(n), f.component(n - 1));
    d.set_block(t.dim(n - 1), t.dim(n), -s.differential(n - 1));
    diffs[n] = d;
  }
  return ChainComplex::make(field, dims, diffs);
}

ChainComplex shift(const ChainComplex& c, int k) {
  std::map<int, std::size_t> dims;
  std::map<int, Matrix> diffs;
  Scalar sign = sign_scalar(c.field(), k);
  for (int n = c.lo(); n <= c.hi(); ++n) {
    dims[n + k] = c.dim(n);
    diffs[n + k] = sign * c.differential(n);
  }
  if (!dims.empty()) diffs.erase(dims.begin()->first);
  return ChainComplex::make(c.field(), dims, diffs);
}

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b) {
  if (!(a.field() == b.field())) fail(ErrorKind::FieldMismatch, "direct sum of complexes over different fields");
  if (a.empty_window()) return b;
  if (b.empty_window()) return a;
  int lo = std::min(a.lo(), b.lo());
  int hi = std::max(a.hi(), b.hi());
  std::map<int, std::size_t> dims;
  for (int n = lo; n <= hi; ++n) dims[n] = a.dim(n) + b.dim(n);
  std::map<int, Matrix> diffs;
  for (int n = lo + 1; n <= hi; ++n) {
    Matrix d(a.field(), dims[n - 1], dims[n]);
    d.set_block(0, 0, a.differential(n));
    d.set_block(a.dim(n - 1), a.dim(n), b.differential(n));
    diffs[n] = d;
  }
  return ChainComplex::make(a.field(), dims, diffs);
}

ChainComplex tensor(const ChainComplex& a, const ChainComplex& b) {
  if (!(a.field() == b.field())) fail(ErrorKind::FieldMismatch, "tensor of complexes over different fields");
  const Field& field = a.field();
  if (a.empty_window() || b.empty_window()) return ChainComplex::zero(field);
  int lo = a.lo() + b.lo();
  int hi = a.hi() + b.hi();
  // position of the (p, i, j) basis vector inside degree p + q
  auto local = [&](int n, int p) {
    std::size_t pos = 0;
    for (int pp = a.lo(); pp < p; ++pp) pos += a.dim(pp) * b.dim(n - pp);
    return pos;
  };
  std::map<int, std::size_t> dims;
  for (int n = lo; n <= hi; ++n) dims[n] = local(n, a.hi() + 1);
  std::map<int, Matrix> diffs;
  for (int n = lo + 1; n <= hi; ++n) {
    Matrix d(field, dims[n - 1], dims[n]);
    for (int p = a.lo(); p <= a.hi(); ++p) {
      int q = n - p;
      std::size_t da = a.dim(p), db = b.dim(q);
      if (da == 0 || db == 0) continue;
      std::size_t src = local(n, p);
      Matrix dA = a.differential(p);
      Matrix dB = b.differential(q);
      Scalar sign = sign_scalar(field, p);
      for (std::size_t i = 0; i < da; ++i) {
        for (std::size_t j = 0; j < db; ++j) {
          std::size_t col = src + i * db + j;
          // d_a x_i ⊗ y_j lands in (p-1, q)
          if (a.dim(p - 1) != 0) {
            std::size_t tgt = local(n - 1, p - 1);
            for (std::size_t r = 0; r < a.dim(p - 1); ++r) {
              if (!dA(r, i).is_zero()) d(tgt + r * db + j, col) += dA(r, i);
            }
          }
          // (-1)^p x_i ⊗ d_b y_j lands in (p, q-1)
          if (b.dim(q - 1) != 0) {
            std::size_t tgt = local(n - 1, p);
            std::size_t dbq1 = b.dim(q - 1);
            for (std::size_t r = 0; r < dbq1; ++r) {
              if (!dB(r, j).is_zero()) d(tgt + i * dbq1 + r, col) += sign * dB(r, j);
            }
          }
        }
      }
    }
    diffs[n] = d;
  }
  return ChainComplex::make(field, dims, diffs);
}

bool is_quasi_iso(const ChainMap& f) {
  if (f.shift() != 0) fail(ErrorKind::ShiftNotZero, "quasi-isomorphism test needs a degree-0 chain map");
  return is_acyclic(cone(f));
}

bool is_homogeneous(const ChainComplex& c, const Vector& total, int n) {
  if (total.size() != c.total_dim()) fail(ErrorKind::ShapeMismatch, "vector length does not match complex");
  std::size_t begin = c.offset(n), end = begin + c.dim(n);
  for (std::size_t i = 0; i < total.size(); ++i) {
    if ((i < begin || i >= end) && !total[i].is_zero()) return false;
  }
  return true;
}

std::string format_ranks(const std::map<int, std::size_t>& ranks) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [n, r] : ranks) {
    if (!first) os << ", ";
    first = false;
    os << n << ':' << r;
  }
  os << '}';
  return os.str();
}

}  // namespace dgres
