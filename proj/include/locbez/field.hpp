#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace locbez {

/// Coefficient field descriptor: the rationals, or Z/p for a prime p < 2^31.
class Field {
 public:
  constexpr Field() = default;
  static constexpr Field rationals() { return Field(); }
  /// Throws InvalidInput unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);
  /// Accepts "q" or "fp:<prime>".
  static Field parse(const std::string& text);

  constexpr bool is_rational() const { return prime_ == 0; }
  constexpr std::uint32_t characteristic() const { return prime_; }
  std::string to_string() const;

  friend constexpr bool operator==(Field, Field) = default;

 private:
  friend class FieldElem;
  explicit constexpr Field(std::uint32_t p) : prime_(p) {}
  std::uint32_t prime_ = 0;
};

/// An element of a Field: a reduced rational, or a residue in [0, p).
class FieldElem {
 public:
  FieldElem() = default;  // rational zero
  FieldElem(long value, Field field);
  /// Throws DomainError when the denominator is not invertible mod p.
  FieldElem(const mpq_class& value, Field field);

  static FieldElem zero(Field field) { return FieldElem(0, field); }
  static FieldElem one(Field field) { return FieldElem(1, field); }

  Field field() const { return Field(prime_); }
  bool is_zero() const { return prime_ == 0 ? sgn(q_) == 0 : r_ == 0; }
  bool is_one() const { return prime_ == 0 ? q_ == 1 : r_ == 1; }
  /// True for rationals with negative sign; residues are never negative.
  bool is_negative() const { return prime_ == 0 && sgn(q_) < 0; }

  const mpq_class& rational() const { return q_; }
  std::uint32_t residue() const { return r_; }

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  /// Throws DomainError on division by zero.
  FieldElem& operator/=(const FieldElem& o);
  FieldElem inverse() const;

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.prime_ == b.prime_ && (a.prime_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_);
  }

  /// "3", "-3/2", or the residue in decimal.
  std::string to_string() const;

 private:
  void check_same(const FieldElem& o) const;

  mpq_class q_;
  std::uint32_t r_ = 0;
  std::uint32_t prime_ = 0;
};

}  // namespace locbez
