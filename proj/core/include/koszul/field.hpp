#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace koszul {

class Scalar;

// The ground field: the rationals or a prime field GF(p), p < 2^31.
class FieldSpec {
 public:
  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec(); }
  static FieldSpec prime(std::int64_t p);

  bool is_rational() const { return p_ == 0; }
  std::int64_t characteristic() const { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  // Accepts "3", "-2", "2/3"; over GF(p) fractions are reduced mod p.
  Scalar parse(std::string_view text) const;

  std::string name() const;  // "Q" or "GF(5)"

  bool operator==(const FieldSpec&) const = default;

 private:
  explicit FieldSpec(std::int64_t p) : p_(p) {}
  std::int64_t p_ = 0;
};

bool is_prime(std::int64_t n);

// A field element. Small integer literals that have not yet met a field
// are kept "neutral" and adopt the field of the other operand.
class Scalar {
 public:
  struct Neutral {
    std::int64_t v;
  };
  struct Mod {
    std::int64_t v;
    std::int64_t p;
  };

  Scalar() : rep_(Neutral{0}) {}
  Scalar(int v) : rep_(Neutral{v}) {}  // NOLINT: literals are convenient
  Scalar(std::int64_t v) : rep_(Neutral{v}) {}
  explicit Scalar(mpq_class q);
  static Scalar modular(std::int64_t v, std::int64_t p);

  bool is_zero() const;
  bool is_one() const;
  bool is_neutral() const { return std::holds_alternative<Neutral>(rep_); }

  Scalar in_field(const FieldSpec& f) const;

  Scalar operator-() const;
  Scalar inverse() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string str() const;
  // Canonical representative as a rational number (residues in [0,p)).
  mpq_class to_rational() const;

 private:
  using Rep = std::variant<Neutral, Mod, mpq_class>;
  std::int64_t residue(std::int64_t p) const;
  explicit Scalar(Rep r) : rep_(std::move(r)) {}
  Rep rep_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace koszul
