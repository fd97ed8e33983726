#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "locbez/monomial.hpp"
#include "locbez/poly.hpp"

namespace locbez {

/// Length of a quotient module; nullopt means infinite.
using FiniteLength = std::optional<std::size_t>;

/// Safety caps for Buchberger runs. Exceeding one raises ResourceExhausted.
struct GroebnerLimits {
  std::size_t max_pairs = 500'000;
  std::size_t max_basis = 20'000;
  unsigned max_degree = 4'000;
  std::size_t max_saturation_steps = 256;
};

/// An ideal given by generators, optionally carrying its reduced Groebner basis.
class GroebnerIdeal;

namespace detail {
/// Wraps a list that is already a reduced basis (sorted ascending) without rerunning Buchberger.
GroebnerIdeal adopt_reduced_basis(RingPtr ring, std::vector<MultiPoly> basis, MonomialOrder order);
}  // namespace detail

class GroebnerIdeal {
 public:
  GroebnerIdeal(RingPtr ring, std::vector<MultiPoly> generators);

  const Ring& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  const std::vector<MultiPoly>& generators() const { return generators_; }

  bool has_basis() const { return cached_.has_value(); }
  /// Throws InvalidInput when no basis has been computed.
  const std::vector<MultiPoly>& basis() const;
  const std::vector<Monomial>& leading_monomials() const;
  MonomialOrder order() const;
  /// Basis is {1}.
  bool is_unit() const;

 private:
  struct Cached {
    MonomialOrder order;
    std::vector<MultiPoly> basis;  // sorted by ascending leading monomial
    std::vector<Monomial> leads;
  };
  const Cached& cached() const;

  friend GroebnerIdeal groebner_basis(const GroebnerIdeal&, MonomialOrder, const GroebnerLimits&);
  friend GroebnerIdeal intersect_by_elimination(const GroebnerIdeal&, const GroebnerIdeal&, const GroebnerLimits&);
  friend GroebnerIdeal detail::adopt_reduced_basis(RingPtr, std::vector<MultiPoly>, MonomialOrder);

  RingPtr ring_;
  std::vector<MultiPoly> generators_;
  std::optional<Cached> cached_;
};

/// Reduced Groebner basis (monic, sorted by ascending leading monomial).
/// Zero generators are dropped.
GroebnerIdeal groebner_basis(const GroebnerIdeal& ideal, MonomialOrder order = MonomialOrder::grevlex(),
                             const GroebnerLimits& limits = {});

/// Remainder of full multivariate division by the cached basis.
MultiPoly normal_form(const MultiPoly& f, const GroebnerIdeal& ideal);

bool contains(const GroebnerIdeal& ideal, const MultiPoly& f);

/// Both ideals must carry bases under the same order.
bool same_ideal(const GroebnerIdeal& a, const GroebnerIdeal& b);

/// Number of standard monomials, or nullopt if some variable has no pure
/// power among the leading monomials.
FiniteLength quotient_dim(const GroebnerIdeal& ideal);

/// I : g. Zero-dimensional I is handled by linear algebra on k[x]/I, anything
/// else by colon_by_elimination. Throws DomainError when g = 0.
GroebnerIdeal colon(const GroebnerIdeal& ideal, const MultiPoly& g, const GroebnerLimits& limits = {});

/// I : g as (I ∩ (g)) / g with the intersection taken by elimination.
GroebnerIdeal colon_by_elimination(const GroebnerIdeal& ideal, const MultiPoly& g, const GroebnerLimits& limits = {});

/// I ∩ J, with a grevlex basis. Two zero-dimensional ideals are intersected by
/// linear algebra on k[x]/I × k[x]/J, anything else by intersect_by_elimination.
GroebnerIdeal intersect(const GroebnerIdeal& a, const GroebnerIdeal& b, const GroebnerLimits& limits = {});

/// I ∩ J via t*I + (1 - t)*J with t eliminated.
GroebnerIdeal intersect_by_elimination(const GroebnerIdeal& a, const GroebnerIdeal& b, const GroebnerLimits& limits = {});

/// I : g^∞ by iterated colon until the basis stops changing.
GroebnerIdeal saturate(const GroebnerIdeal& ideal, const MultiPoly& g, const GroebnerLimits& limits = {});

/// Ideal generated by the union of both generator lists (no basis attached).
GroebnerIdeal ideal_sum(const GroebnerIdeal& a, const GroebnerIdeal& b);

/// Generators of (v_1, ..., v_k)^n for the listed variable indices; n = 0 gives {1}.
std::vector<MultiPoly> power_of_variables(const RingPtr& ring, std::span<const std::size_t> vars, unsigned n);

/// Buchberger's criterion on the cached basis: every S-polynomial reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerIdeal& ideal);

}  // namespace locbez
