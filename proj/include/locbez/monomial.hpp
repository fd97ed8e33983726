#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>

namespace locbez {

/// Rings in this library have at most this many variables.
inline constexpr std::size_t kMaxVars = 4;

/// Exponent vector packed as four 16-bit fields; unused fields are zero.
class Monomial {
 public:
  static constexpr unsigned kMaxExponent = 0xffff;

  constexpr Monomial() = default;
  /// Throws DomainError when an exponent exceeds kMaxExponent or too many entries are given.
  static Monomial from_exponents(std::span<const unsigned> exps);
  static Monomial variable(std::size_t index, unsigned power = 1);

  constexpr unsigned operator[](std::size_t i) const {
    return static_cast<unsigned>((bits_ >> (16 * i)) & 0xffff);
  }
  unsigned degree() const {
    unsigned d = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i) d += (*this)[i];
    return d;
  }
  constexpr bool is_one() const { return bits_ == 0; }
  constexpr std::uint64_t bits() const { return bits_; }

  constexpr bool divides(Monomial o) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if ((*this)[i] > o[i]) return false;
    return true;
  }
  constexpr bool coprime(Monomial o) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if ((*this)[i] != 0 && o[i] != 0) return false;
    return true;
  }
  /// Throws DomainError on exponent overflow.
  Monomial operator*(Monomial o) const;
  /// Precondition: o divides *this.
  constexpr Monomial operator/(Monomial o) const { return Monomial(bits_ - o.bits_); }
  Monomial lcm(Monomial o) const;
  Monomial with_exponent(std::size_t index, unsigned e) const;

  friend constexpr bool operator==(Monomial, Monomial) = default;

 private:
  explicit constexpr Monomial(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

/// Global monomial orders. `elimination(nvars, k)` makes the last k variables
/// (the appended auxiliary ones) dominate: monomials are compared first by their
/// degree in that block, ties broken by grevlex.
class MonomialOrder {
 public:
  enum class Kind { grevlex, lex, grlex, elimination };

  static constexpr MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
  static constexpr MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
  static constexpr MonomialOrder grlex() { return MonomialOrder(Kind::grlex, 0); }
  static MonomialOrder elimination(std::size_t nvars, std::size_t block_size);

  constexpr Kind kind() const { return kind_; }
  constexpr unsigned block_mask() const { return block_mask_; }

  std::strong_ordering compare(Monomial a, Monomial b) const;
  bool greater(Monomial a, Monomial b) const { return compare(a, b) == std::strong_ordering::greater; }

  friend constexpr bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  constexpr MonomialOrder(Kind k, unsigned mask) : kind_(k), block_mask_(mask) {}
  Kind kind_;
  unsigned block_mask_;
};

}  // namespace locbez
