#pragma once

/**
 * @file field.hpp
 * @brief Exact scalar fields: prime fields F_p and the rationals.
 *
 * A Field is a small value describing which field we compute over; a Scalar
 * is an element that remembers its field. Mixing scalars of different fields
 * throws FieldMismatch instead of silently coercing.
 */

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace dgres {

class Scalar;

class Field {
 public:
  /// The rationals Q (arbitrary precision).
  static Field rationals() noexcept { return Field(0); }
  /// F_p; p must be a prime below 2^63.
  static Field prime(std::uint64_t p);
  /// Parses "q" or "fp:<p>".
  static Field from_name(std::string_view name);

  bool is_rational() const noexcept { return p_ == 0; }
  std::uint64_t characteristic() const noexcept { return p_; }
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t value) const;
  /// Accepts "n", "-n", "p/q"; over F_p fractions are reduced mod p.
  Scalar parse(std::string_view text) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  explicit Field(std::uint64_t p) noexcept : p_(p) {}
  std::uint64_t p_ = 0;
};

class Scalar {
 public:
  /// Rational zero.
  Scalar() : value_(mpq_class(0)) {}

  Field field() const;
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  Scalar operator-() const;
  Scalar inverse() const;  // throws InternalInvariant on zero

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Canonical text: residue for F_p, "n" or "p/q" (lowest terms) for Q.
  std::string to_string() const;

  /// Residue in [0, p); only meaningful over F_p.
  std::uint64_t residue() const noexcept { return std::holds_alternative<std::uint64_t>(value_) ? std::get<std::uint64_t>(value_) : 0; }
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }

 private:
  friend class Field;
  Scalar(std::uint64_t p, std::uint64_t residue) : p_(p), value_(residue) {}
  explicit Scalar(mpq_class q) : p_(0), value_(std::move(q)) {}

  void check_same_field(const Scalar& other) const;

  std::uint64_t p_ = 0;
  std::variant<std::uint64_t, mpq_class> value_;
};

/// (-1)^e as a scalar of the given field.
Scalar sign_scalar(const Field& field, long exponent);

inline bool is_odd(long e) noexcept { return (e % 2) != 0; }

/// (-1)^e as an int.
inline int koszul_sign(long e) noexcept { return is_odd(e) ? -1 : 1; }

using Vector = std::vector<Scalar>;

Vector zero_vector(const Field& field, std::size_t size);
Vector unit_vector(const Field& field, std::size_t size, std::size_t index);
bool is_zero(const Vector& v) noexcept;
/// y += a * x
void axpy(Vector& y, const Scalar& a, const Vector& x);
Vector scaled(const Vector& x, const Scalar& a);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);

}  // namespace dgres
