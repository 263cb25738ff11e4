#include "dgres/field.hpp"

#include <charconv>

#include "dgres/error.hpp"

namespace dgres {

namespace {

__extension__ typedef unsigned __int128 u128;

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  auto powmod = [n](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    b %= n;
    while (e) {
      if (e & 1) r = static_cast<std::uint64_t>(static_cast<u128>(r) * b % n);
      b = static_cast<std::uint64_t>(static_cast<u128>(b) * b % n);
      e >>= 1;
    }
    return r;
  };
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic Miller-Rabin bases for 64-bit inputs.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = static_cast<std::uint64_t>(static_cast<u128>(x) * x % n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t reduce_mod(const mpz_class& z, std::uint64_t p) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(p));
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  // p prime: a^(p-2)
  std::uint64_t r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = static_cast<std::uint64_t>(static_cast<u128>(r) * b % p);
    b = static_cast<std::uint64_t>(static_cast<u128>(b) * b % p);
    e >>= 1;
  }
  return r;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (1ULL << 63) || !is_prime(p)) fail(ErrorKind::InvalidField, std::to_string(p) + " is not a supported prime");
  return Field(p);
}

Field Field::from_name(std::string_view name) {
  if (name == "q" || name == "Q") return rationals();
  if (name.starts_with("fp:")) {
    auto digits = name.substr(3);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      fail(ErrorKind::InvalidField, "bad field name '" + std::string(name) + "'");
    }
    return prime(p);
  }
  fail(ErrorKind::InvalidField, "bad field name '" + std::string(name) + "' (expected q or fp:<p>)");
}

std::string Field::name() const { return is_rational() ? "q" : "fp:" + std::to_string(p_); }

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t value) const {
  if (is_rational()) return Scalar(mpq_class(static_cast<long>(value)));
  auto m = static_cast<std::int64_t>(p_);
  std::int64_t r = value % m;
  if (r < 0) r += m;
  return Scalar(p_, static_cast<std::uint64_t>(r));
}

Scalar Field::parse(std::string_view text) const {
  std::string s(text);
  auto valid_integer = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') return false;
    }
    return true;
  };
  auto slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den)) fail(ErrorKind::ParseError, "bad scalar '" + s + "'");
  if (num[0] == '+') num = num.substr(1);
  if (den[0] == '+') den = den.substr(1);
  mpz_class n(num), d(den);
  if (d == 0) fail(ErrorKind::ParseError, "zero denominator in '" + s + "'");
  if (is_rational()) {
    mpq_class q(n, d);
    q.canonicalize();
    return Scalar(std::move(q));
  }
  std::uint64_t dn = reduce_mod(d, p_);
  if (dn == 0) fail(ErrorKind::ParseError, "denominator of '" + s + "' vanishes mod " + std::to_string(p_));
  std::uint64_t r = static_cast<std::uint64_t>(static_cast<u128>(reduce_mod(n, p_)) * inverse_mod(dn, p_) % p_);
  return Scalar(p_, r);
}

Field Scalar::field() const { return Field(p_); }

bool Scalar::is_zero() const noexcept {
  if (p_ != 0) return std::get<std::uint64_t>(value_) == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const noexcept {
  if (p_ != 0) return std::get<std::uint64_t>(value_) == 1;
  return std::get<mpq_class>(value_) == 1;
}

void Scalar::check_same_field(const Scalar& other) const {
  if (p_ != other.p_) {
    fail(ErrorKind::FieldMismatch, "scalars over " + field().name() + " and " + other.field().name());
  }
}

Scalar Scalar::operator-() const {
  if (p_ != 0) {
    auto r = std::get<std::uint64_t>(value_);
    return Scalar(p_, r == 0 ? 0 : p_ - r);
  }
  return Scalar(mpq_class(-std::get<mpq_class>(value_)));
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(ErrorKind::InternalInvariant, "inverse of zero");
  if (p_ != 0) return Scalar(p_, inverse_mod(std::get<std::uint64_t>(value_), p_));
  return Scalar(mpq_class(1 / std::get<mpq_class>(value_)));
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same_field(rhs);
  if (p_ != 0) {
    auto& a = std::get<std::uint64_t>(value_);
    auto b = std::get<std::uint64_t>(rhs.value_);
    a = (a >= p_ - b) ? a - (p_ - b) : a + b;
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same_field(rhs);
  if (p_ != 0) {
    auto& a = std::get<std::uint64_t>(value_);
    a = static_cast<std::uint64_t>(static_cast<u128>(a) * std::get<std::uint64_t>(rhs.value_) % p_);
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) return false;
  if (a.p_ != 0) return std::get<std::uint64_t>(a.value_) == std::get<std::uint64_t>(b.value_);
  return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

std::string Scalar::to_string() const {
  if (p_ != 0) return std::to_string(std::get<std::uint64_t>(value_));
  return std::get<mpq_class>(value_).get_str();
}

Scalar sign_scalar(const Field& field, long exponent) { return field.from_int(koszul_sign(exponent)); }

Vector zero_vector(const Field& field, std::size_t size) { return Vector(size, field.zero()); }

Vector unit_vector(const Field& field, std::size_t size, std::size_t index) {
  Vector v = zero_vector(field, size);
  v.at(index) = field.one();
  return v;
}

bool is_zero(const Vector& v) noexcept {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

void axpy(Vector& y, const Scalar& a, const Vector& x) {
  if (y.size() != x.size()) fail(ErrorKind::ShapeMismatch, "axpy on vectors of different length");
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) y[i] += a * x[i];
  }
}

Vector scaled(const Vector& x, const Scalar& a) {
  Vector out = x;
  for (auto& v : out) v *= a;
  return out;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) fail(ErrorKind::ShapeMismatch, "adding vectors of different length");
  Vector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) fail(ErrorKind::ShapeMismatch, "subtracting vectors of different length");
  Vector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

}  // namespace dgres
