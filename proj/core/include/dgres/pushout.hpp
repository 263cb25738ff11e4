#pragma once

/**
 * @file pushout.hpp
 * @brief Freely adjoining a morphism f : x -> y of degree n with df = g_img,
 * i.e. the pushout of a dg-category along S(n-1) -> D(n).
 *
 * Hom(C, D) of the result has the plain letters of Hom(C, D) plus the words
 *
 *     β · f · c_m · f · ... · c_1 · f · α,   α ∈ Hom(C,x), c_i ∈ Hom(y,x), β ∈ Hom(y,D),
 *
 * with at most N letters f. A word is read as the composite β∘f∘c_m∘...∘f∘α.
 * d hits a letter with the Koszul sign of everything to its right (f counted
 * in degree n); d f = g_img merges the neighbours of that f.
 */

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "dgres/dgcat.hpp"

namespace dgres {

struct AdjunctionData {
  DgCategoryPtr base;
  std::size_t x = 0;  // source of f
  std::size_t y = 0;  // target of f
  int n = 0;          // degree of f
  Vector g_img;       // closed element of Hom(x,y) in degree n-1
  std::size_t truncation = 1;

  /// Throws NotClosed / WrongDegree / ShapeError.
  void validate() const;
};

/// letters[0] is the leftmost letter (β, or the plain letter), letters.back() the rightmost (α).
struct BarWord {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> letters;  // base basis indices

  std::size_t f_count() const noexcept { return letters.empty() ? 0 : letters.size() - 1; }
  friend bool operator==(const BarWord&, const BarWord&) = default;
  friend auto operator<=>(const BarWord&, const BarWord&) = default;
};

struct TruncatedDgCategory {
  DgCategoryPtr category;
  AdjunctionData data;
  std::size_t truncation = 1;
  /// No word with more than `truncation` letters f exists (Hom(y,x) = 0).
  bool exact = false;
  /// words[C * |objects| + D] in the basis order of Hom(C, D).
  std::vector<std::vector<BarWord>> words;

  const std::vector<BarWord>& hom_words(std::size_t c, std::size_t d) const {
    return words.at(c * category->num_objects() + d);
  }
  /// Index of a word in its hom basis; throws ShapeError if absent.
  std::size_t index_of(const BarWord& w) const;
};

/// Internal degree of a word.
int word_degree(const AdjunctionData& data, const BarWord& w);
/// Hom(C,D) of the source of a letter at position i of a word with r letters f.
std::pair<std::size_t, std::size_t> letter_hom(const AdjunctionData& data, const BarWord& w, std::size_t i);
/// "β·f·c·f·α" with base basis names.
std::string describe_word(const AdjunctionData& data, const BarWord& w);

/// Throws TruncationUnsound when a product needs more than N letters f and g_img != 0.
TruncatedDgCategory free_adjoin(const AdjunctionData& data);

/// Letterwise application of F : base -> data_e.base, with f ↦ f. Throws IncompatibleData unless
/// data_e carries F(x), F(y), F(g_img), the same degree and truncation.
DgFunctor induced_functor(const DgFunctor& functor, const TruncatedDgCategory& source, const TruncatedDgCategory& target);

}  // namespace dgres
