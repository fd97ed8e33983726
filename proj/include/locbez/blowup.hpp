#pragma once

#include <string_view>

#include "locbez/groebner.hpp"
#include "locbez/localmult.hpp"
#include "locbez/tangentcone.hpp"

namespace locbez {

/// The two standard affine charts of the blow-up of the origin. In both
/// chart rings variable 0 is the exceptional coordinate and variable 1 the
/// direction coordinate.
enum class ChartId {
  xy,  ///< A[x/y]: variables (y, S), x = y S
  yx,  ///< A[y/x]: variables (x, T), y = x T
};

std::string_view chart_name(ChartId chart);

RingPtr chart_ring(ChartId chart, Field field);

struct ChartData {
  ChartId chart;
  MultiPoly f_strict;
  MultiPoly g_strict;
  unsigned exc_exponent_f = 0;
  unsigned exc_exponent_g = 0;
};

/// Pulls f back along the chart map without dividing out the exceptional factor.
MultiPoly total_transform(const MultiPoly& f, ChartId chart);

/// Strict transforms: total transform divided by exc^ord.
ChartData strict_transform(const CurvePair& pair, ChartId chart);

/// Maps exc^e * strict back to k[x,y] (direction = x/y or y/x). Inverse of
/// strict_transform for the matching exponent; throws DomainError if a
/// negative power of the exceptional variable would remain.
MultiPoly blow_down(const MultiPoly& strict, unsigned exc_exponent, ChartId chart, const RingPtr& target);

/// Total intersection multiplicity of the strict transforms along the
/// exceptional line of the chart: the stable dim of (f~, g~, exc^N).
StabilizedLength chart_multiplicity(const ChartData& data, const StabilizationPolicy& policy,
                                    const GroebnerLimits& limits = {});

/// Same, restricted to the points where the direction coordinate is a unit:
/// stable dim of saturate((f~, g~, exc^N), direction).
StabilizedLength overlap_multiplicity(const ChartData& data, const StabilizationPolicy& policy,
                                      const GroebnerLimits& limits = {});

struct ChartMultiplicities {
  StabilizedLength e1;  ///< chart xy
  StabilizedLength e2;  ///< chart yx
  StabilizedLength e3;  ///< overlap, from chart xy
};

ChartMultiplicities chart_multiplicities(const CurvePair& pair, const StabilizationPolicy& policy,
                                         const GroebnerLimits& limits = {});

}  // namespace locbez
