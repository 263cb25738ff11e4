#pragma once

/**
 * @file conventions.hpp
 * @brief Frozen sign conventions and the tag that reports carry.
 *
 * Summary of the frozen choices:
 *  - base Leibniz: d(g∘f) = (-1)^{|f|} dg∘f + g∘df
 *  - a k-simplex component of a total-degree-t cochain sits in internal degree t + k
 *  - δα(I) = d α(I) + (-1)^{|α|} Σ_{0<j<k} (-1)^j α(I \ i_j), |α| = -t
 *  - (φ∘η)(I) = Σ_j (-1)^{|φ| j} φ(i_j..i_k) ∘ η(i_0..i_j)
 *  - d_{η,φ}(a) = δa + a∘η - (-1)^{|a|} φ∘a
 *  - gauge transport: η̃ = (g∘η + δg)∘g⁻¹
 *  - strictification: see kFrozenStrictificationSigns
 *  - bar words: Koszul sign from the degrees to the right (f has degree n)
 */

#include <string_view>

namespace dgres {

inline constexpr std::string_view kConventionsTag = "dgres-signs/1";

/// The three global sign choices of the strictification homotopy H.
struct StrictificationSigns {
  bool h_sign_k_minus_1 = true;     // H(i_0..i_{k-1}, n) = (-1)^{k-1} η(..., n-1, n), else (-1)^k
  bool inverse_negates = true;      // H⁻ = H on vertices and -H above, else H⁻ = H
  bool chain_order_forward = true;  // φ(i,j) = η(j-1,j)∘...∘η(i,i+1), else the reversed product

  friend constexpr bool operator==(const StrictificationSigns&, const StrictificationSigns&) = default;
};

/// The unique choice passing the sign search (see tests/test_strictify.cpp).
inline constexpr StrictificationSigns kFrozenStrictificationSigns{true, true, true};

}  // namespace dgres
