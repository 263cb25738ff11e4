#include "dgres/pushout.hpp"

#include <algorithm>

#include "dgres/error.hpp"

namespace dgres {

void AdjunctionData::validate() const {
  if (!base) fail(ErrorKind::ShapeError, "adjunction data needs a base category");
  if (x >= base->num_objects() || y >= base->num_objects()) fail(ErrorKind::UnknownObject, "adjunction endpoints out of range");
  if (truncation < 1) fail(ErrorKind::ShapeError, "truncation must be at least 1");
  const ChainComplex& h = base->hom(x, y);
  if (g_img.size() != h.total_dim()) fail(ErrorKind::ShapeError, "attaching cycle has wrong length");
  if (!is_homogeneous(h, g_img, n - 1)) fail(ErrorKind::WrongDegree, "attaching cycle must have degree " + std::to_string(n - 1));
  if (!is_zero(base->d(x, y, g_img))) fail(ErrorKind::NotClosed, "attaching cycle is not closed");
}

std::pair<std::size_t, std::size_t> letter_hom(const AdjunctionData& data, const BarWord& w, std::size_t i) {
  const std::size_t r = w.f_count();
  if (r == 0) return {w.source, w.target};
  const std::size_t src = (i == r) ? w.source : data.y;
  const std::size_t tgt = (i == 0) ? w.target : data.x;
  return {src, tgt};
}

int word_degree(const AdjunctionData& data, const BarWord& w) {
  int deg = static_cast<int>(w.f_count()) * data.n;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    auto [s, t] = letter_hom(data, w, i);
    deg += data.base->hom(s, t).degree_of(w.letters[i]);
  }
  return deg;
}

std::string describe_word(const AdjunctionData& data, const BarWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    auto [s, t] = letter_hom(data, w, i);
    if (i > 0) out += "·f·";
    out += data.base->basis_names(s, t).at(w.letters[i]);
  }
  return out;
}

std::size_t TruncatedDgCategory::index_of(const BarWord& w) const {
  const auto& list = hom_words(w.source, w.target);
  auto it = std::find(list.begin(), list.end(), w);
  if (it == list.end()) fail(ErrorKind::ShapeError, "word is not a basis element");
  return static_cast<std::size_t>(it - list.begin());
}

namespace {

using WordCombination = std::map<BarWord, Scalar>;

void add_term(WordCombination& out, BarWord w, const Scalar& s) {
  if (s.is_zero()) return;
  auto [it, inserted] = out.try_emplace(std::move(w), s);
  if (!inserted) {
    it->second += s;
    if (it->second.is_zero()) out.erase(it);
  }
}

std::vector<BarWord> enumerate_words(const AdjunctionData& data, std::size_t c, std::size_t d) {
  const DgCategory& base = *data.base;
  std::vector<BarWord> out;
  for (std::size_t b = 0; b < base.hom(c, d).total_dim(); ++b) out.push_back({c, d, {b}});
  const std::size_t na = base.hom(c, data.x).total_dim();
  const std::size_t nb = base.hom(data.y, d).total_dim();
  const std::size_t nc = base.hom(data.y, data.x).total_dim();
  if (na == 0 || nb == 0) return out;
  for (std::size_t r = 1; r <= data.truncation; ++r) {
    if (r >= 2 && nc == 0) break;
    // mixed-radix counter over (β, c_{r-1}, ..., c_1, α)
    std::vector<std::size_t> radix(r + 1, nc);
    radix.front() = nb;
    radix.back() = na;
    std::vector<std::size_t> letters(r + 1, 0);
    bool done = false;
    while (!done) {
      out.push_back({c, d, letters});
      std::size_t pos = r + 1;
      done = true;
      while (pos-- > 0) {
        if (++letters[pos] < radix[pos]) {
          done = false;
          break;
        }
        letters[pos] = 0;
      }
    }
  }
  return out;
}

class WordAlgebra {
 public:
  explicit WordAlgebra(const AdjunctionData& data) : data_(data), base_(*data.base), field_(base_.field()) {}

  WordCombination differential(const BarWord& w) const {
    WordCombination out;
    const std::size_t r = w.f_count();
    std::vector<int> degs(w.letters.size());
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
      auto [s, t] = letter_hom(data_, w, i);
      degs[i] = base_.hom(s, t).degree_of(w.letters[i]);
    }
    // degree of everything strictly right of letter i
    std::vector<long> right(w.letters.size() + 1, 0);
    for (std::size_t i = w.letters.size(); i-- > 0;) {
      right[i] = right[i + 1] + (i + 1 < w.letters.size() ? degs[i + 1] + data_.n : 0);
    }
    // vertical: d on one letter
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
      auto [s, t] = letter_hom(data_, w, i);
      const ChainComplex& h = base_.hom(s, t);
      Vector dl = h.apply_differential(unit_vector(field_, h.total_dim(), w.letters[i]));
      Scalar sign = sign_scalar(field_, right[i]);
      for (std::size_t b = 0; b < dl.size(); ++b) {
        if (dl[b].is_zero()) continue;
        BarWord v = w;
        v.letters[i] = b;
        add_term(out, std::move(v), sign * dl[b]);
      }
    }
    // horizontal: the f between letters i and i+1 becomes g_img
    if (!is_zero(data_.g_img)) {
      for (std::size_t i = 0; i < r; ++i) {
        auto [s1, t1] = letter_hom(data_, w, i + 1);
        auto [s0, t0] = letter_hom(data_, w, i);
        const ChainComplex& h1 = base_.hom(s1, t1);
        const ChainComplex& h0 = base_.hom(s0, t0);
        Vector tmp = base_.compose(s1, data_.x, data_.y, data_.g_img, unit_vector(field_, h1.total_dim(), w.letters[i + 1]));
        if (is_zero(tmp)) continue;
        Vector merged = base_.compose(s1, data_.y, t0, unit_vector(field_, h0.total_dim(), w.letters[i]), tmp);
        long exponent = right[i + 1] + degs[i + 1];
        Scalar sign = sign_scalar(field_, exponent);
        for (std::size_t b = 0; b < merged.size(); ++b) {
          if (merged[b].is_zero()) continue;
          BarWord v{w.source, w.target, {}};
          for (std::size_t j = 0; j < i; ++j) v.letters.push_back(w.letters[j]);
          v.letters.push_back(b);
          for (std::size_t j = i + 2; j < w.letters.size(); ++j) v.letters.push_back(w.letters[j]);
          add_term(out, std::move(v), sign * merged[b]);
        }
      }
    }
    return out;
  }

  /// outer∘inner with inner : C -> D, outer : D -> E.
  WordCombination product(const BarWord& outer, const BarWord& inner) const {
    WordCombination out;
    auto [si, ti] = letter_hom(data_, inner, 0);
    auto [so, to] = letter_hom(data_, outer, outer.letters.size() - 1);
    const SparseVector& merged = base_.product(si, ti, to, outer.letters.back(), inner.letters.front());
    if (merged.empty()) return out;
    const std::size_t r = outer.f_count() + inner.f_count();
    if (r > data_.truncation) {
      if (is_zero(data_.g_img)) return out;
      fail(ErrorKind::TruncationUnsound, "product " + describe_word(data_, outer) + " ∘ " + describe_word(data_, inner) +
                                             " needs " + std::to_string(r) + " letters f (truncation " +
                                             std::to_string(data_.truncation) + ")");
    }
    (void)so;
    for (const auto& [b, s] : merged) {
      BarWord v{inner.source, outer.target, {}};
      v.letters.assign(outer.letters.begin(), outer.letters.end() - 1);
      v.letters.push_back(b);
      v.letters.insert(v.letters.end(), inner.letters.begin() + 1, inner.letters.end());
      add_term(out, std::move(v), s);
    }
    return out;
  }

 private:
  const AdjunctionData& data_;
  const DgCategory& base_;
  Field field_;
};

}  // namespace

TruncatedDgCategory free_adjoin(const AdjunctionData& data) {
  data.validate();
  const DgCategory& base = *data.base;
  const Field& field = base.field();
  const std::size_t k = base.num_objects();

  TruncatedDgCategory out;
  out.data = data;
  out.truncation = data.truncation;
  out.exact = base.hom(data.y, data.x).total_dim() == 0;
  out.words.resize(k * k);
  std::vector<std::map<BarWord, std::size_t>> index(k * k);
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t d = 0; d < k; ++d) {
      auto words = enumerate_words(data, c, d);
      std::vector<std::pair<int, std::size_t>> order;
      for (std::size_t i = 0; i < words.size(); ++i) order.push_back({word_degree(data, words[i]), i});
      std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      auto& list = out.words[c * k + d];
      for (const auto& [deg, i] : order) {
        index[c * k + d][words[i]] = list.size();
        list.push_back(words[i]);
      }
    }
  }

  WordAlgebra algebra(data);
  DgCategoryBuilder builder(field);
  for (std::size_t c = 0; c < k; ++c) builder.add_object(base.label(c));
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t d = 0; d < k; ++d) {
      const auto& list = out.words[c * k + d];
      const auto& idx = index[c * k + d];
      std::map<int, std::size_t> dims;
      std::vector<int> degs;
      std::vector<std::string> names;
      for (const auto& w : list) {
        degs.push_back(word_degree(data, w));
        ++dims[degs.back()];
        names.push_back(describe_word(data, w));
      }
      if (!dims.empty()) {
        for (int q = dims.begin()->first; q <= dims.rbegin()->first; ++q) dims.try_emplace(q, 0);
      }
      std::map<int, std::size_t> offset;
      {
        std::size_t run = 0;
        for (const auto& [q, n] : dims) {
          offset[q] = run;
          run += n;
        }
      }
      std::map<int, Matrix> diffs;
      for (const auto& [q, n] : dims) {
        if (!dims.count(q - 1)) continue;
        diffs.emplace(q, Matrix(field, dims[q - 1], n));
      }
      for (std::size_t col = 0; col < list.size(); ++col) {
        const int q = degs[col];
        for (const auto& [v, s] : algebra.differential(list[col])) {
          std::size_t row = idx.at(v);
          diffs.at(q)(row - offset[q - 1], col - offset[q]) += s;
        }
      }
      builder.set_hom(c, d, dims.empty() ? ChainComplex::zero(field) : ChainComplex::make(field, dims, diffs), std::move(names));
    }
  }
  for (std::size_t c = 0; c < k; ++c) {
    const auto& idx = index[c * k + c];
    Vector unit = zero_vector(field, out.words[c * k + c].size());
    const Vector& u = base.unit(c);
    for (std::size_t b = 0; b < u.size(); ++b) {
      if (!u[b].is_zero()) unit[idx.at(BarWord{c, c, {b}})] = u[b];
    }
    builder.set_unit(c, unit);
  }
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t d = 0; d < k; ++d) {
      for (std::size_t e = 0; e < k; ++e) {
        const auto& inner = out.words[c * k + d];
        const auto& outer = out.words[d * k + e];
        const auto& idx = index[c * k + e];
        for (std::size_t a = 0; a < inner.size(); ++a) {
          for (std::size_t b = 0; b < outer.size(); ++b) {
            WordCombination p = algebra.product(outer[b], inner[a]);
            if (p.empty()) continue;
            SparseVector sv;
            for (const auto& [w, s] : p) sv.emplace_back(idx.at(w), s);
            std::sort(sv.begin(), sv.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
            builder.set_product(c, d, e, b, a, std::move(sv));
          }
        }
      }
    }
  }
  out.category = builder.build(true);
  return out;
}

DgFunctor induced_functor(const DgFunctor& functor, const TruncatedDgCategory& source, const TruncatedDgCategory& target) {
  const AdjunctionData& ds = source.data;
  const AdjunctionData& dt = target.data;
  if (functor.source() != ds.base || functor.target() != dt.base) {
    fail(ErrorKind::IncompatibleData, "functor does not connect the two base categories");
  }
  if (dt.x != functor.object(ds.x) || dt.y != functor.object(ds.y)) fail(ErrorKind::IncompatibleData, "endpoints of f are not transported by the functor");
  if (dt.n != ds.n || dt.truncation != ds.truncation) fail(ErrorKind::IncompatibleData, "degree or truncation differ");
  if (!(functor.apply(ds.x, ds.y, ds.g_img) == dt.g_img)) fail(ErrorKind::IncompatibleData, "attaching cycle is not transported by the functor");

  const DgCategory& sb = *ds.base;
  const Field& field = sb.field();
  const std::size_t k = sb.num_objects();
  std::vector<Matrix> maps;
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t d = 0; d < k; ++d) {
      const auto& src_words = source.hom_words(c, d);
      const std::size_t fc = functor.object(c), fd = functor.object(d);
      const auto& tgt_words = target.hom_words(fc, fd);
      std::map<BarWord, std::size_t> tidx;
      for (std::size_t i = 0; i < tgt_words.size(); ++i) tidx[tgt_words[i]] = i;
      Matrix m(field, tgt_words.size(), src_words.size());
      for (std::size_t col = 0; col < src_words.size(); ++col) {
        const BarWord& w = src_words[col];
        // expand the letterwise images
        std::vector<std::pair<std::vector<std::size_t>, Scalar>> partial{{{}, field.one()}};
        for (std::size_t i = 0; i < w.letters.size(); ++i) {
          auto [s, t] = letter_hom(ds, w, i);
          Vector img = functor.apply(s, t, unit_vector(field, sb.hom(s, t).total_dim(), w.letters[i]));
          std::vector<std::pair<std::vector<std::size_t>, Scalar>> next;
          for (const auto& [letters, coef] : partial) {
            for (std::size_t b = 0; b < img.size(); ++b) {
              if (img[b].is_zero()) continue;
              auto l = letters;
              l.push_back(b);
              next.emplace_back(std::move(l), coef * img[b]);
            }
          }
          partial = std::move(next);
        }
        for (const auto& [letters, coef] : partial) {
          BarWord v{fc, fd, letters};
          auto it = tidx.find(v);
          if (it == tidx.end()) fail(ErrorKind::IncompatibleData, "image word is missing from the target");
          m(it->second, col) += coef;
        }
      }
      maps.push_back(std::move(m));
    }
  }
  return DgFunctor::make(source.category, target.category, functor.object_map(), std::move(maps));
}

}  // namespace dgres
