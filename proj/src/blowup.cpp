#include "locbez/blowup.hpp"

#include <string>

#include "locbez/errors.hpp"

namespace locbez {

std::string_view chart_name(ChartId chart) { return chart == ChartId::xy ? "A[x/y]" : "A[y/x]"; }

RingPtr chart_ring(ChartId chart, Field field) {
  return chart == ChartId::xy ? make_ring({"y", "S"}, field) : make_ring({"x", "T"}, field);
}

MultiPoly total_transform(const MultiPoly& f, ChartId chart) {
  if (f.ring().nvars() != 2) throw InvalidInput("total_transform needs a polynomial in k[x,y]");
  const RingPtr ring = chart_ring(chart, f.ring().field());
  const MultiPoly exc = MultiPoly::variable(ring, 0);
  const MultiPoly dir = MultiPoly::variable(ring, 1);
  if (chart == ChartId::xy) {
    const MultiPoly images[] = {exc * dir, exc};
    return compose(f, images);
  }
  const MultiPoly images[] = {exc, exc * dir};
  return compose(f, images);
}

ChartData strict_transform(const CurvePair& pair, ChartId chart) {
  ChartData out{chart, total_transform(pair.f(), chart), total_transform(pair.g(), chart), ord(pair.f()),
                ord(pair.g())};
  const MultiPoly exc = MultiPoly::variable(out.f_strict.ring_ptr(), 0);
  // Every term of degree k pulls back to exc^k times a polynomial in the
  // direction variable, so division by exc^ord is exact.
  out.f_strict = exact_divide(out.f_strict, pow(exc, out.exc_exponent_f));
  out.g_strict = exact_divide(out.g_strict, pow(exc, out.exc_exponent_g));
  return out;
}

MultiPoly blow_down(const MultiPoly& strict, unsigned exc_exponent, ChartId chart, const RingPtr& target) {
  if (target->nvars() != 2) throw InvalidInput("blow_down needs a two-variable target ring");
  std::vector<Term> terms;
  for (const auto& t : strict.terms()) {
    const unsigned exc = t.monomial[0] + exc_exponent;
    const unsigned dir = t.monomial[1];
    if (dir > exc) throw DomainError("blow_down leaves a negative power of the exceptional variable");
    // xy chart: y^a S^b = x^b y^(a-b); yx chart: x^a T^b = x^(a-b) y^b.
    const unsigned e[2] = {chart == ChartId::xy ? dir : exc - dir, chart == ChartId::xy ? exc - dir : dir};
    terms.push_back({Monomial::from_exponents(e), t.coeff});
  }
  return MultiPoly::from_terms(target, std::move(terms));
}

namespace {

GroebnerIdeal fiber_ideal(const ChartData& data, unsigned n) {
  const RingPtr& ring = data.f_strict.ring_ptr();
  const MultiPoly exc_power = pow(MultiPoly::variable(ring, 0), n);
  return GroebnerIdeal(ring, {data.f_strict, data.g_strict, exc_power});
}

}  // namespace

StabilizedLength chart_multiplicity(const ChartData& data, const StabilizationPolicy& policy,
                                    const GroebnerLimits& limits) {
  const auto probe = [&](unsigned n) {
    return quotient_dim(groebner_basis(fiber_ideal(data, n), MonomialOrder::grevlex(), limits));
  };
  return stabilize(probe, policy, std::string("chart multiplicity on ") + std::string(chart_name(data.chart)));
}

StabilizedLength overlap_multiplicity(const ChartData& data, const StabilizationPolicy& policy,
                                      const GroebnerLimits& limits) {
  const MultiPoly dir = MultiPoly::variable(data.f_strict.ring_ptr(), 1);
  const auto probe = [&](unsigned n) { return quotient_dim(saturate(fiber_ideal(data, n), dir, limits)); };
  return stabilize(probe, policy, "overlap multiplicity");
}

ChartMultiplicities chart_multiplicities(const CurvePair& pair, const StabilizationPolicy& policy,
                                         const GroebnerLimits& limits) {
  const ChartData xy = strict_transform(pair, ChartId::xy);
  const ChartData yx = strict_transform(pair, ChartId::yx);
  return {chart_multiplicity(xy, policy, limits), chart_multiplicity(yx, policy, limits),
          overlap_multiplicity(xy, policy, limits)};
}

}  // namespace locbez
