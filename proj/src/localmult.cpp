#include "locbez/localmult.hpp"

#include <string>

#include "locbez/errors.hpp"

namespace locbez {

StabilizedLength stabilize(const LengthProbe& probe, const StabilizationPolicy& policy, std::string_view what) {
  const unsigned plateau = policy.plateau == 0 ? 1 : policy.plateau;
  StabilizedLength out;
  unsigned run = 0;
  for (unsigned n = policy.start; n <= policy.cap; ++n) {
    const FiniteLength v = probe(n);
    if (!v) throw NotStabilized(std::string(what) + ": infinite length at N = " + std::to_string(n));
    run = (!out.probes.empty() && out.probes.back().second == *v) ? run + 1 : 1;
    out.probes.emplace_back(n, *v);
    if (run < plateau) continue;

    out.value = *v;
    out.n_stop = n;
    for (unsigned k = 1; k <= policy.extra_probes; ++k) {
      const FiniteLength extra = probe(n + k);
      const std::size_t got = extra ? *extra : static_cast<std::size_t>(-1);
      out.probes.emplace_back(n + k, got);
      out.extra_agree = out.extra_agree && extra && got == out.value;
      ++out.extra_probes;
    }
    return out;
  }
  throw NotStabilized(std::string(what) + ": no plateau up to N = " + std::to_string(policy.cap));
}

std::vector<MultiPoly> maximal_ideal_power(const RingPtr& ring, unsigned n) {
  if (ring->nvars() != 2) throw InvalidInput("expected a two-variable ring");
  const std::size_t vars[] = {0, 1};
  return power_of_variables(ring, vars, n);
}

StabilizedLength local_length(const GroebnerIdeal& ideal, const StabilizationPolicy& policy,
                              const GroebnerLimits& limits) {
  const RingPtr& ring = ideal.ring_ptr();
  if (ring->nvars() != 2) throw InvalidInput("local_length needs an ideal of k[x,y]");
  const GroebnerIdeal base = groebner_basis(ideal, MonomialOrder::grevlex(), limits);
  const auto probe = [&](unsigned n) -> FiniteLength {
    if (base.is_unit()) return 0;
    const GroebnerIdeal truncated = ideal_sum(base, GroebnerIdeal(ring, maximal_ideal_power(ring, n)));
    return quotient_dim(groebner_basis(truncated, MonomialOrder::grevlex(), limits));
  };
  return stabilize(probe, policy, "local length");
}

namespace {

// f(x, 0) as (degree, leading coefficient, order).
struct AxisRestriction {
  bool vanishes = true;
  unsigned degree = 0;
  FieldElem lead;
  unsigned order = 0;
};

AxisRestriction restrict_to_x_axis(const MultiPoly& f) {
  AxisRestriction r;
  for (const auto& t : f.terms()) {
    if (t.monomial[1] != 0) continue;
    const unsigned e = t.monomial[0];
    if (r.vanishes) {
      r = AxisRestriction{false, e, t.coeff, e};
    } else {
      if (e > r.degree) {
        r.degree = e;
        r.lead = t.coeff;
      }
      if (e < r.order) r.order = e;
    }
  }
  return r;
}

bool vanishes_at_origin(const MultiPoly& f) { return f.constant_term().is_zero(); }

// Unit multiple with coprime integer coefficients (over Q) or leading coefficient 1 (over Z/p).
MultiPoly primitive(const MultiPoly& f) {
  if (f.is_zero()) return f;
  const Field field = f.ring().field();
  if (!field.is_rational()) return f.scaled(f.terms().front().coeff.inverse());
  mpz_class num = 0, den = 1;
  for (const auto& t : f.terms()) {
    const mpq_class& q = t.coeff.rational();
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), q.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  }
  return f.scaled(FieldElem(mpq_class(den, num), field));
}

}  // namespace

FiniteLength fulton_oracle(const MultiPoly& f_in, const MultiPoly& g_in, std::size_t max_steps) {
  require_same_ring(f_in, g_in);
  if (f_in.ring().nvars() != 2) throw InvalidInput("fulton_oracle needs polynomials in k[x,y]");
  const RingPtr ring = f_in.ring_ptr();
  const MultiPoly x = MultiPoly::variable(ring, 0);
  const MultiPoly y = MultiPoly::variable(ring, 1);

  MultiPoly f = primitive(f_in), g = primitive(g_in);
  std::size_t acc = 0;
  for (std::size_t step = 0; step < max_steps; ++step) {
    if (f.is_zero() || g.is_zero()) {
      const MultiPoly& other = f.is_zero() ? g : f;
      // i(0, h) is infinite when h passes through the origin and 0 otherwise.
      if (other.is_zero() || vanishes_at_origin(other)) return std::nullopt;
      return acc;
    }
    if (!vanishes_at_origin(f) || !vanishes_at_origin(g)) return acc;

    auto fr = restrict_to_x_axis(f);
    auto gr = restrict_to_x_axis(g);
    if (fr.vanishes && gr.vanishes) return std::nullopt;  // y divides both
    if (fr.vanishes) {
      std::swap(f, g);
      std::swap(fr, gr);
    }
    if (gr.vanishes) {
      // g = y * g': i(f, g) = i(f, y) + i(f, g') and i(f, y) = ord_x f(x, 0).
      acc += fr.order;
      g = primitive(exact_divide(g, y));
      continue;
    }
    if (fr.degree > gr.degree) {
      std::swap(f, g);
      std::swap(fr, gr);
    }
    // deg f(x,0) <= deg g(x,0): cancel the top x-power of g(x,0).
    const MultiPoly shift = pow(x, gr.degree - fr.degree);
    g = primitive(g.scaled(fr.lead) - (shift * f).scaled(gr.lead));
  }
  throw ResourceExhausted("fulton_oracle: step limit exceeded");
}

std::size_t hilbert_samuel(unsigned n) {
  return static_cast<std::size_t>(n) * (n + 1) / 2;
}

std::size_t hilbert_samuel_checked(unsigned n) {
  static const RingPtr ring = make_ring({"x", "y"});
  const FiniteLength dim = quotient_dim(groebner_basis(GroebnerIdeal(ring, maximal_ideal_power(ring, n))));
  const std::size_t expected = hilbert_samuel(n);
  if (!dim || *dim != expected)
    throw EngineDisagreement("Hilbert-Samuel self-test failed at n = " + std::to_string(n));
  return expected;
}

long weighted_difference(long n, long c, long d) {
  const auto hs = [](long k) -> long { return k <= 0 ? 0 : k * (k + 1) / 2; };
  return hs(n) - hs(n - c) - hs(n - d) + hs(n - c - d);
}

}  // namespace locbez
