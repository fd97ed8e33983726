#include "locbez/monomial.hpp"

#include <algorithm>

#include "locbez/errors.hpp"

namespace locbez {

Monomial Monomial::from_exponents(std::span<const unsigned> exps) {
  if (exps.size() > kMaxVars) throw DomainError("too many variables in exponent vector");
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] > kMaxExponent) throw DomainError("exponent overflow");
    bits |= std::uint64_t{exps[i]} << (16 * i);
  }
  return Monomial(bits);
}

Monomial Monomial::variable(std::size_t index, unsigned power) {
  if (index >= kMaxVars) throw DomainError("variable index out of range");
  if (power > kMaxExponent) throw DomainError("exponent overflow");
  return Monomial(std::uint64_t{power} << (16 * index));
}

Monomial Monomial::operator*(Monomial o) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if ((*this)[i] + o[i] > kMaxExponent) throw DomainError("exponent overflow");
  return Monomial(bits_ + o.bits_);
}

Monomial Monomial::lcm(Monomial o) const {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    bits |= std::uint64_t{std::max((*this)[i], o[i])} << (16 * i);
  return Monomial(bits);
}

Monomial Monomial::with_exponent(std::size_t index, unsigned e) const {
  if (e > kMaxExponent) throw DomainError("exponent overflow");
  const std::uint64_t mask = std::uint64_t{0xffff} << (16 * index);
  return Monomial((bits_ & ~mask) | (std::uint64_t{e} << (16 * index)));
}

MonomialOrder MonomialOrder::elimination(std::size_t nvars, std::size_t block_size) {
  if (nvars > kMaxVars || block_size == 0 || block_size > nvars)
    throw DomainError("invalid elimination block");
  unsigned mask = 0;
  for (std::size_t i = nvars - block_size; i < nvars; ++i) mask |= 1u << i;
  return MonomialOrder(Kind::elimination, mask);
}

namespace {

std::strong_ordering grevlex_cmp(Monomial a, Monomial b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = kMaxVars; i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering lex_cmp(Monomial a, Monomial b) {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering MonomialOrder::compare(Monomial a, Monomial b) const {
  switch (kind_) {
    case Kind::grevlex:
      return grevlex_cmp(a, b);
    case Kind::lex:
      return lex_cmp(a, b);
    case Kind::grlex:
      if (auto c = a.degree() <=> b.degree(); c != 0) return c;
      return lex_cmp(a, b);
    case Kind::elimination: {
      unsigned wa = 0, wb = 0;
      for (std::size_t i = 0; i < kMaxVars; ++i) {
        if (block_mask_ & (1u << i)) {
          wa += a[i];
          wb += b[i];
        }
      }
      if (auto c = wa <=> wb; c != 0) return c;
      return grevlex_cmp(a, b);
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace locbez
