#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "locbez/blowup.hpp"
#include "locbez/groebner.hpp"
#include "locbez/localmult.hpp"
#include "locbez/tangentcone.hpp"

namespace locbez {

/// One checked identity: `holds` plus the two sides that were compared.
struct Verdict {
  bool holds = false;
  long left = 0;
  long right = 0;
};

struct ReportOptions {
  /// Cap on N (for m^N and exc^N truncations) and on n (colon lengths).
  unsigned max_n = 64;
  /// Confirmation probes past every plateau.
  unsigned extra_probes = 3;
  GroebnerLimits limits;
};

/// Local Bezout decomposition of a curve pair at the origin.
struct BezoutReport {
  Field field;
  std::string f;
  std::string g;

  long e = 0;  ///< intersection multiplicity
  long c = 0;  ///< ord f
  long d = 0;  ///< ord g
  long t = 0;  ///< common tangents with multiplicity
  long ell = 0;
  long lambda = 0;  ///< length of the first Koszul-type homology
  long e1 = 0;
  long e2 = 0;
  long e3 = 0;
  /// Multiplicity of the maximal ideal of the regular local ring k[x,y]_(x,y).
  long e_maximal = 1;

  bool transversal = false;
  bool axis_tangent = false;
  bool tangents_on_axes = false;

  /// THM61, THM51, PROP52, THM72, THM74A, THM74B, LEM21, in that order.
  std::vector<std::pair<std::string, Verdict>> verdicts;
  /// Keys e, lambda, ell, e1, e2, e3.
  std::vector<std::pair<std::string, StabilizedLength>> stabilization;
  /// Value of the Fulton oracle for e (equal to e whenever a report is produced).
  long e_oracle = 0;
  /// Named notes, e.g. a stabilized value disagreeing with its closed form.
  std::vector<std::string> diagnostics;

  bool all_verdicts_hold() const;
  /// Every confirmation probe agreed with its plateau value.
  bool all_stable() const;
  const Verdict& verdict(const std::string& name) const;
};

/// Length of ((f) + m^n) : g modulo (f) + m^(n-d), for n > c + d.
std::size_t koszul_h1_length(const CurvePair& pair, unsigned n, const GroebnerLimits& limits = {});

/// Length of C_n / (C_n ∩ ((f) + m^(n-d-1))) with C_n = ((f) + m^n) : g, for n > c + d + 1.
std::size_t ell_invariant(const CurvePair& pair, unsigned n, const GroebnerLimits& limits = {});

/// Throws InvalidInput when the curves share a component through the origin,
/// EngineDisagreement when the two multiplicity engines differ, and
/// NotStabilized / ResourceExhausted from the underlying computations.
BezoutReport full_report(const CurvePair& pair, const ReportOptions& options = {});

}  // namespace locbez
