#pragma once

#include <array>
#include <string_view>

#include "locbez/poly.hpp"

namespace locbez {

/// Two plane curves f = 0, g = 0 through the origin, in k[x,y].
class CurvePair {
 public:
  /// Throws InvalidInput unless both are nonzero polynomials of one
  /// two-variable ring vanishing at the origin. Absence of a common
  /// component is checked lazily by the computations that need it.
  CurvePair(MultiPoly f, MultiPoly g);

  /// Parses both texts in k[x,y] over `field`.
  static CurvePair parse(std::string_view f_text, std::string_view g_text, Field field = Field::rationals());

  const MultiPoly& f() const { return f_; }
  const MultiPoly& g() const { return g_; }
  const RingPtr& ring() const { return f_.ring_ptr(); }
  Field field() const { return f_.ring().field(); }

 private:
  MultiPoly f_;
  MultiPoly g_;
};

/// Tangent cones of a pair: f* = h r, g* = h s with gcd(r, s) = 1.
struct TangentData {
  unsigned c = 0;
  unsigned d = 0;
  MultiPoly f_star;
  MultiPoly g_star;
  MultiPoly h;
  /// Common tangents counted with multiplicity: deg h.
  unsigned t = 0;
};

TangentData tangent_data(const CurvePair& pair);

/// No common tangent.
bool is_transversal(const CurvePair& pair);
bool is_transversal(const TangentData& td);

/// x or y divides h: a coordinate axis is among the common tangents.
bool axis_is_common_tangent(const CurvePair& pair);
bool axis_is_common_tangent(const TangentData& td);

/// h is a monomial of positive degree: every common tangent is a coordinate axis.
/// This is the condition under which no intersection of the strict transforms
/// lies off both axes of the exceptional line.
bool tangents_on_axes(const TangentData& td);

/// (x, y) -> (m[0] x + m[1] y, m[2] x + m[3] y). Throws InvalidInput when the
/// matrix is singular.
CurvePair linear_change(const CurvePair& pair, const std::array<FieldElem, 4>& m);

}  // namespace locbez
