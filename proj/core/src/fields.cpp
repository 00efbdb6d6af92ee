#include "prodbasis/fields.hpp"

#include <charconv>
#include <ostream>

#include "prodbasis/errors.hpp"

namespace prodbasis {

namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t parse_u64(std::string_view text) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("expected an unsigned integer, got '" + std::string(text) + "'");
  }
  return value;
}

std::uint64_t reduce_signed(std::int64_t v, std::uint64_t p) {
  if (v >= 0) return static_cast<std::uint64_t>(v) % p;
  // -(v+1) avoids overflow at INT64_MIN
  std::uint64_t mag = static_cast<std::uint64_t>(-(v + 1)) + 1;
  std::uint64_t r = mag % p;
  return r == 0 ? 0 : p - r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These witnesses are deterministic for all n < 2^64.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (!prodbasis::is_prime(p)) {
    throw std::invalid_argument("GF(" + std::to_string(p) + "): order is not prime");
  }
  return FieldSpec(p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q") return rational();
  if (text.starts_with("GF")) {
    std::string_view rest = text.substr(2);
    if (rest.starts_with("(") && rest.ends_with(")")) rest = rest.substr(1, rest.size() - 2);
    std::uint64_t p = parse_u64(rest);
    if (!prodbasis::is_prime(p)) throw ParseError("field order " + std::string(rest) + " is not prime");
    return FieldSpec(p);
  }
  throw ParseError("unknown field '" + std::string(text) + "' (expected Q, GFp or GF(p))");
}

std::string FieldSpec::to_string() const {
  return is_prime() ? "GF(" + std::to_string(p_) + ")" : "Q";
}

std::string FieldSpec::to_flag() const { return is_prime() ? "GF" + std::to_string(p_) : "Q"; }

Scalar::Scalar(FieldSpec field) : field_(field) {
  if (field_.is_prime()) {
    value_ = std::uint64_t{0};
  } else {
    value_ = mpq_class(0);
  }
}

Scalar::Scalar(FieldSpec field, std::int64_t value) : field_(field) {
  if (field_.is_prime()) {
    value_ = reduce_signed(value, field_.characteristic());
  } else {
    value_ = mpq_class(static_cast<long>(value));
  }
}

Scalar::Scalar(FieldSpec field, const mpq_class& value) : field_(field) {
  if (field_.is_prime()) {
    const mpz_class p(static_cast<unsigned long>(field_.characteristic()));
    mpz_class num = value.get_num() % p;
    if (num < 0) num += p;
    const mpz_class den = value.get_den() % p;
    if (den == 0) throw DivisionByZero();
    value_ = (from_residue(field_, num.get_ui()) / from_residue(field_, den.get_ui())).value_;
  } else {
    mpq_class q = value;
    q.canonicalize();
    value_ = std::move(q);
  }
}

Scalar Scalar::from_residue(FieldSpec field, std::uint64_t residue) {
  Scalar s(field);
  s.value_ = residue % field.characteristic();
  return s;
}

Scalar Scalar::parse(FieldSpec field, std::string_view token) {
  if (token.empty()) throw ParseError("empty scalar token");
  if (field.is_prime()) {
    bool negative = token.front() == '-';
    std::uint64_t mag = parse_u64(negative ? token.substr(1) : token);
    Scalar s(field);
    std::uint64_t r = mag % field.characteristic();
    s.value_ = negative && r != 0 ? field.characteristic() - r : r;
    return s;
  }
  mpq_class q;
  if (q.set_str(std::string(token), 10) != 0) {
    throw ParseError("invalid rational '" + std::string(token) + "'");
  }
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + std::string(token) + "'");
  q.canonicalize();
  Scalar s(field);
  s.value_ = std::move(q);
  return s;
}

bool Scalar::is_zero() const {
  if (field_.is_prime()) return std::get<std::uint64_t>(value_) == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_prime()) return std::get<std::uint64_t>(value_) == 1 % field_.characteristic();
  return std::get<mpq_class>(value_) == 1;
}

int Scalar::sign() const {
  if (field_.is_prime()) return is_zero() ? 0 : 1;
  return sgn(std::get<mpq_class>(value_));
}

void Scalar::require_same_field(const Scalar& other) const {
  if (field_ != other.field_) {
    throw FieldMismatch("field mismatch: " + field_.to_string() + " vs " + other.field_.to_string());
  }
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZero();
  Scalar result(field_);
  if (field_.is_prime()) {
    const std::uint64_t p = field_.characteristic();
    result.value_ = pow_mod(std::get<std::uint64_t>(value_), p - 2, p);
  } else {
    result.value_ = mpq_class(1) / std::get<mpq_class>(value_);
  }
  return result;
}

Scalar Scalar::operator-() const {
  Scalar result(*this);
  if (field_.is_prime()) {
    auto& r = std::get<std::uint64_t>(result.value_);
    if (r != 0) r = field_.characteristic() - r;
  } else {
    auto& q = std::get<mpq_class>(result.value_);
    q = -q;
  }
  return result;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  require_same_field(other);
  if (field_.is_prime()) {
    const std::uint64_t p = field_.characteristic();
    auto& a = std::get<std::uint64_t>(value_);
    const std::uint64_t b = std::get<std::uint64_t>(other.value_);
    a = a >= p - b ? a - (p - b) : a + b;
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(other.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  require_same_field(other);
  if (field_.is_prime()) {
    const std::uint64_t p = field_.characteristic();
    auto& a = std::get<std::uint64_t>(value_);
    const std::uint64_t b = std::get<std::uint64_t>(other.value_);
    a = a >= b ? a - b : p - (b - a);
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(other.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  require_same_field(other);
  if (field_.is_prime()) {
    auto& a = std::get<std::uint64_t>(value_);
    a = mul_mod(a, std::get<std::uint64_t>(other.value_), field_.characteristic());
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(other.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  require_same_field(other);
  return *this *= other.inv();
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::string Scalar::to_string() const {
  if (field_.is_prime()) return std::to_string(std::get<std::uint64_t>(value_));
  return std::get<mpq_class>(value_).get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }
std::ostream& operator<<(std::ostream& os, const FieldSpec& f) { return os << f.to_string(); }

Scalar arith(const Scalar& a, const Scalar& b, ArithOp op) {
  switch (op) {
    case ArithOp::add:
      return a + b;
    case ArithOp::sub:
      return a - b;
    case ArithOp::mul:
      return a * b;
  }
  throw std::invalid_argument("unknown arithmetic operation");
}

std::vector<Scalar> enumerate_elements(const FieldSpec& f) {
  if (!f.is_prime()) throw NotEnumerable(f.to_string());
  std::vector<Scalar> out;
  out.reserve(f.characteristic());
  for (std::uint64_t v = 0; v < f.characteristic(); ++v) {
    out.push_back(Scalar::from_residue(f, v));
  }
  return out;
}

Scalar sample(const FieldSpec& f, Rng& rng, std::uint64_t bound) {
  if (f.is_prime()) {
    std::uniform_int_distribution<std::uint64_t> dist(0, f.characteristic() - 1);
    return Scalar::from_residue(f, dist(rng));
  }
  std::uniform_int_distribution<std::uint64_t> dist(0, bound);
  return Scalar(f, static_cast<std::int64_t>(dist(rng)));
}

}  // namespace prodbasis
