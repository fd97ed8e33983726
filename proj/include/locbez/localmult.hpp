#pragma once

#include <cstddef>
#include <functional>
#include <string_view>
#include <utility>
#include <vector>

#include "locbez/groebner.hpp"

namespace locbez {

/// Probe schedule for quantities that become constant for large N: probe
/// N = start, start+1, ... until `plateau` consecutive values agree, then run
/// `extra_probes` confirmation probes past the plateau.
struct StabilizationPolicy {
  unsigned start = 2;
  unsigned plateau = 2;
  unsigned cap = 64;
  unsigned extra_probes = 0;
};

struct StabilizedLength {
  std::size_t value = 0;
  /// N at which the plateau was completed.
  unsigned n_stop = 0;
  /// Every (N, value) pair probed, confirmation probes included.
  std::vector<std::pair<unsigned, std::size_t>> probes;
  unsigned extra_probes = 0;
  /// All confirmation probes returned `value`.
  bool extra_agree = true;
};

using LengthProbe = std::function<FiniteLength(unsigned)>;

/// Runs the schedule. Throws NotStabilized when the cap is reached first or a
/// probe reports an infinite length; `what` names the quantity in messages.
StabilizedLength stabilize(const LengthProbe& probe, const StabilizationPolicy& policy, std::string_view what);

/// Length of k[x,y]_(x,y) / I, read off as the stable value of
/// dim k[x,y] / (I + m^N). I must live in a two-variable ring.
StabilizedLength local_length(const GroebnerIdeal& ideal, const StabilizationPolicy& policy,
                              const GroebnerLimits& limits = {});

/// Intersection number of f and g at the origin from the classical axioms
/// (units give 0, i(f, g) = i(f, g + h f), i(f, y g') = i(f, y) + i(f, g'),
/// i(f, y) = ord_x f(x, 0)). nullopt when f and g share a branch through the
/// origin. Works directly on the polynomials; no Groebner bases involved.
/// Throws ResourceExhausted after `max_steps` reduction steps.
FiniteLength fulton_oracle(const MultiPoly& f, const MultiPoly& g, std::size_t max_steps = 1'000'000);

/// dim k[x,y] / m^n = n(n+1)/2.
std::size_t hilbert_samuel(unsigned n);

/// hilbert_samuel(n), after confirming it against quotient_dim(m^n).
/// Throws EngineDisagreement on mismatch.
std::size_t hilbert_samuel_checked(unsigned n);

/// HS(n) - HS(n-c) - HS(n-d) + HS(n-c-d) where HS(k) = 0 for k <= 0, i.e.
/// m^k is the unit ideal for k <= 0.
long weighted_difference(long n, long c, long d);

/// Generators of (x, y)^n in a two-variable ring.
std::vector<MultiPoly> maximal_ideal_power(const RingPtr& ring, unsigned n);

}  // namespace locbez
