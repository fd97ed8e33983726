#include "locbez/bezout.hpp"

#include <map>
#include <string>

#include "locbez/errors.hpp"

namespace locbez {

namespace {

// (f) + m^k, with m^k the unit ideal for k <= 0.
GroebnerIdeal f_plus_power(const CurvePair& pair, long k) {
  std::vector<MultiPoly> gens = maximal_ideal_power(pair.ring(), k <= 0 ? 0 : static_cast<unsigned>(k));
  gens.push_back(pair.f());
  return GroebnerIdeal(pair.ring(), std::move(gens));
}

std::size_t finite(const FiniteLength& v, const char* what) {
  if (!v) throw EngineDisagreement(std::string(what) + ": quotient unexpectedly infinite");
  return *v;
}

// Shared per-n colon ideals C_n = ((f) + m^n) : g.
class ColonLengths {
 public:
  ColonLengths(const CurvePair& pair, const GroebnerLimits& limits)
      : pair_(pair), limits_(limits), d_(ord(pair.g())) {}

  const GroebnerIdeal& colon_ideal(unsigned n) {
    auto it = cache_.find(n);
    if (it == cache_.end()) {
      const GroebnerIdeal I = groebner_basis(f_plus_power(pair_, n), MonomialOrder::grevlex(), limits_);
      it = cache_.emplace(n, colon(I, pair_.g(), limits_)).first;
    }
    return it->second;
  }

  // g m^(n-d) ⊆ m^n, so J_n = (f) + m^(n-d) already lies inside C_n and
  // intersecting with C_n leaves it unchanged.
  std::size_t lambda(unsigned n) {
    const GroebnerIdeal& C = colon_ideal(n);
    const GroebnerIdeal J = groebner_basis(f_plus_power(pair_, static_cast<long>(n) - d_), MonomialOrder::grevlex(), limits_);
    for (const auto& b : J.basis())
      if (!contains(C, b)) throw EngineDisagreement("(f) + m^(n-d) is not contained in the colon ideal");
    return finite(quotient_dim(J), "koszul_h1_length") - finite(quotient_dim(C), "koszul_h1_length");
  }

  std::size_t ell(unsigned n) {
    const GroebnerIdeal& C = colon_ideal(n);
    const GroebnerIdeal D = intersect(C, f_plus_power(pair_, static_cast<long>(n) - d_ - 1), limits_);
    return finite(quotient_dim(D), "ell_invariant") - finite(quotient_dim(C), "ell_invariant");
  }

 private:
  const CurvePair& pair_;
  GroebnerLimits limits_;
  long d_;
  std::map<unsigned, GroebnerIdeal> cache_;
};

Verdict equality(long left, long right) { return {left == right, left, right}; }

}  // namespace

bool BezoutReport::all_verdicts_hold() const {
  for (const auto& [name, v] : verdicts)
    if (!v.holds) return false;
  return !verdicts.empty();
}

bool BezoutReport::all_stable() const {
  for (const auto& [name, s] : stabilization)
    if (!s.extra_agree) return false;
  return true;
}

const Verdict& BezoutReport::verdict(const std::string& name) const {
  for (const auto& [n, v] : verdicts)
    if (n == name) return v;
  throw InvalidInput("no verdict named " + name);
}

std::size_t koszul_h1_length(const CurvePair& pair, unsigned n, const GroebnerLimits& limits) {
  if (n <= ord(pair.f()) + ord(pair.g())) throw InvalidInput("koszul_h1_length needs n > c + d");
  return ColonLengths(pair, limits).lambda(n);
}

std::size_t ell_invariant(const CurvePair& pair, unsigned n, const GroebnerLimits& limits) {
  if (n <= ord(pair.f()) + ord(pair.g()) + 1) throw InvalidInput("ell_invariant needs n > c + d + 1");
  return ColonLengths(pair, limits).ell(n);
}

BezoutReport full_report(const CurvePair& pair, const ReportOptions& options) {
  BezoutReport r;
  r.field = pair.field();
  r.f = pair.f().to_string();
  r.g = pair.g().to_string();

  const FiniteLength oracle = fulton_oracle(pair.f(), pair.g());
  if (!oracle) throw InvalidInput("curves share a component");

  const TangentData td = tangent_data(pair);
  r.c = td.c;
  r.d = td.d;
  r.t = td.t;
  r.transversal = is_transversal(td);
  r.axis_tangent = axis_is_common_tangent(td);
  r.tangents_on_axes = tangents_on_axes(td);

  StabilizationPolicy length_policy{td.c + td.d + 1, 2, options.max_n, options.extra_probes};
  const StabilizedLength e = local_length(GroebnerIdeal(pair.ring(), {pair.f(), pair.g()}), length_policy, options.limits);
  r.e = static_cast<long>(e.value);
  r.e_oracle = static_cast<long>(*oracle);
  if (r.e != r.e_oracle)
    throw EngineDisagreement("local_length = " + std::to_string(r.e) + " but fulton_oracle = " +
                             std::to_string(r.e_oracle) + " for (" + r.f + ", " + r.g + ")");

  // G(m) = k[X,Y] is a domain, so f* is automatically a regular element of the form ring.
  ColonLengths colons(pair, options.limits);
  StabilizationPolicy colon_policy{td.c + td.d + 2, 3, options.max_n, options.extra_probes};
  const StabilizedLength lambda =
      stabilize([&](unsigned n) -> FiniteLength { return colons.lambda(n); }, colon_policy, "koszul H1 length");
  const StabilizedLength ell =
      stabilize([&](unsigned n) -> FiniteLength { return colons.ell(n); }, colon_policy, "ell invariant");
  r.lambda = static_cast<long>(lambda.value);
  r.ell = static_cast<long>(ell.value);

  StabilizationPolicy chart_policy{1, 2, options.max_n, options.extra_probes};
  const ChartMultiplicities charts = chart_multiplicities(pair, chart_policy, options.limits);
  r.e1 = static_cast<long>(charts.e1.value);
  r.e2 = static_cast<long>(charts.e2.value);
  r.e3 = static_cast<long>(charts.e3.value);

  r.stabilization = {{"e", e}, {"lambda", lambda}, {"ell", ell}, {"e1", charts.e1}, {"e2", charts.e2}, {"e3", charts.e3}};
  for (const auto& [name, s] : r.stabilization)
    if (!s.extra_agree) r.diagnostics.push_back("UNSTABLE_" + name);

  const long cd = r.c * r.d * r.e_maximal;
  if (r.ell != r.e - cd - r.t) r.diagnostics.push_back("ELL_CLOSED_FORM_MISMATCH");
  if (r.lambda != r.e - cd) r.diagnostics.push_back("LAMBDA_CLOSED_FORM_MISMATCH");

  const bool e_is_cd = r.e == cd;
  const bool charts_vanish = r.e1 == 0 && r.e2 == 0;
  Verdict thm74b{true, r.e, cd + r.e1 + r.e2};
  if (!r.transversal) {
    thm74b.holds = r.e <= cd + r.e1 + r.e2 && ((r.e == cd + r.e1 + r.e2) == r.tangents_on_axes);
  }
  r.verdicts = {
      {"THM61", equality(r.e, cd + r.t + r.ell)},
      {"THM51", equality(r.e, cd + r.lambda)},
      {"PROP52", equality(r.lambda, r.t + r.ell)},
      {"THM72", equality(r.e, cd + r.e1 + r.e2 - r.e3)},
      {"THM74A", Verdict{e_is_cd == r.transversal && r.transversal == charts_vanish, r.e, cd}},
      {"THM74B", thm74b},
      {"LEM21", Verdict{r.e >= cd, r.e, cd}},
  };
  return r;
}

}  // namespace locbez
