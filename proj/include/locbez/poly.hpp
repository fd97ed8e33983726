#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "locbez/field.hpp"
#include "locbez/monomial.hpp"

namespace locbez {

/// Polynomial ring k[v_1, ..., v_n], n <= kMaxVars.
class Ring {
 public:
  /// Throws InvalidInput on duplicate or malformed names, or too many variables.
  Ring(std::vector<std::string> variables, Field field);

  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t nvars() const { return variables_.size(); }
  Field field() const { return field_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  std::vector<std::string> variables_;
  Field field_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> variables, Field field = Field::rationals());

struct Term {
  Monomial monomial;
  FieldElem coeff;
};

/// Sparse polynomial with nonzero coefficients, terms kept in descending
/// graded-lex order. Values are immutable once built; arithmetic returns new values.
class MultiPoly {
 public:
  explicit MultiPoly(RingPtr ring);

  static MultiPoly constant(RingPtr ring, const FieldElem& c);
  static MultiPoly constant(RingPtr ring, long c);
  static MultiPoly variable(RingPtr ring, std::size_t index);
  static MultiPoly variable(RingPtr ring, std::string_view name);
  static MultiPoly monomial(RingPtr ring, Monomial m, const FieldElem& c);
  /// Combines like terms and drops zeros; input order is irrelevant.
  static MultiPoly from_terms(RingPtr ring, std::vector<Term> terms);

  const Ring& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  bool is_homogeneous() const;
  /// Largest total degree; 0 for the zero polynomial.
  unsigned total_degree() const;
  unsigned degree_in(std::size_t var) const;
  FieldElem coefficient(Monomial m) const;
  FieldElem constant_term() const { return coefficient(Monomial()); }

  MultiPoly operator-() const;
  MultiPoly scaled(const FieldElem& c) const;
  MultiPoly times_monomial(Monomial m) const;

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  /// Same grammar as parse(); round-trips exactly.
  std::string to_string() const;

 private:
  MultiPoly(RingPtr ring, std::vector<Term> sorted_terms);

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Throws RingMismatch unless both polynomials live in equal rings.
void require_same_ring(const MultiPoly& a, const MultiPoly& b);

MultiPoly pow(const MultiPoly& f, unsigned n);

/// Replace one variable by `replacement` (same ring).
MultiPoly substitute(const MultiPoly& f, std::size_t var, const MultiPoly& replacement);

/// Ring homomorphism sending variable i of f's ring to images[i]; all images
/// must share one target ring.
MultiPoly compose(const MultiPoly& f, std::span<const MultiPoly> images);

/// Keep exponent vectors and move f into `target`. Throws RingMismatch if the
/// fields differ or f uses a variable index the target lacks.
MultiPoly reinterpret(const MultiPoly& f, RingPtr target);

/// Grammar: sums and differences of products of factors; factors are integer or
/// p/q literals, variables, or parenthesized expressions, each with an optional
/// ^<integer>. Juxtaposition before a variable or '(' multiplies. Whitespace ignored.
MultiPoly parse(std::string_view text, RingPtr ring);

/// Minimal total degree of a term. Throws DomainError on zero.
unsigned ord(const MultiPoly& f);

/// Sum of the terms of total degree `degree`.
MultiPoly homogeneous_component(const MultiPoly& f, unsigned degree);

/// Lowest-degree homogeneous component. Throws DomainError on zero.
MultiPoly initial_form(const MultiPoly& f);

/// Quotient when g divides f; nullopt otherwise. Throws DomainError when g = 0.
std::optional<MultiPoly> try_divide(const MultiPoly& f, const MultiPoly& g);

/// Throws DomainError unless g divides f.
MultiPoly exact_divide(const MultiPoly& f, const MultiPoly& g);

/// Gcd of two nonzero binary forms in a two-variable ring. The result is
/// homogeneous, with coefficient 1 on its term of highest power in the first
/// variable (gcds are only defined up to a unit; this fixes one).
MultiPoly binary_form_gcd(const MultiPoly& F, const MultiPoly& G);

/// Sylvester resultant of f and g with respect to variable `var`.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, std::size_t var);

/// True when f and g share a nonconstant factor (resultant test).
bool share_common_factor(const MultiPoly& f, const MultiPoly& g);

}  // namespace locbez
