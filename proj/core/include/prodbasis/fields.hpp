#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace prodbasis {

/// Seeded PRNG used by every randomized routine.
using Rng = std::mt19937_64;

/// Either a prime field GF(p) or the rationals.
class FieldSpec {
 public:
  /// Throws std::invalid_argument unless p is prime.
  static FieldSpec prime(std::uint64_t p);
  static FieldSpec rational() { return FieldSpec{}; }
  /// Accepts "Q", "GF(p)" and "GFp".
  static FieldSpec parse(std::string_view text);

  bool is_prime() const noexcept { return p_ != 0; }
  bool is_rational() const noexcept { return p_ == 0; }
  /// p for GF(p); 0 for the rationals.
  std::uint64_t characteristic() const noexcept { return p_; }
  /// Number of elements, or nullopt for an infinite field.
  std::optional<std::uint64_t> order() const noexcept {
    return is_prime() ? std::optional<std::uint64_t>(p_) : std::nullopt;
  }

  std::string to_string() const;
  /// Compact form used on the command line: "GFp" or "Q".
  std::string to_flag() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec() = default;
  explicit FieldSpec(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// An exact field element in canonical form: a residue in [0, p) or a reduced fraction.
class Scalar {
 public:
  explicit Scalar(FieldSpec field);
  Scalar(FieldSpec field, std::int64_t value);
  Scalar(FieldSpec field, const mpq_class& value);

  static Scalar zero(FieldSpec f) { return Scalar(f); }
  static Scalar one(FieldSpec f) { return Scalar(f, 1); }
  /// GF(p) element with the given residue (reduced mod p).
  static Scalar from_residue(FieldSpec field, std::uint64_t residue);
  /// Parses a decimal residue (GF(p)) or "num/den" (Q).
  static Scalar parse(FieldSpec field, std::string_view token);

  const FieldSpec& field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const;
  /// Residue for GF(p). Undefined for rationals.
  std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }
  /// Value for Q. Undefined for prime fields.
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  /// Sign of a rational value; GF(p) elements report 0 or 1.
  int sign() const;

  Scalar inv() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  void require_same_field(const Scalar& other) const;

  FieldSpec field_;
  std::variant<std::uint64_t, mpq_class> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);
std::ostream& operator<<(std::ostream& os, const FieldSpec& f);

enum class ArithOp { add, sub, mul };

/// Binary field arithmetic; throws FieldMismatch if the operands disagree on the field.
Scalar arith(const Scalar& a, const Scalar& b, ArithOp op);

/// 0, 1, ..., p-1. Throws NotEnumerable for Q.
std::vector<Scalar> enumerate_elements(const FieldSpec& f);

/// Uniform over GF(p) (bound ignored) or a uniform integer in [0, bound] for Q.
Scalar sample(const FieldSpec& f, Rng& rng, std::uint64_t bound);

}  // namespace prodbasis
