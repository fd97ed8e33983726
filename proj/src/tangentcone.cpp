#include "locbez/tangentcone.hpp"

#include "locbez/errors.hpp"

namespace locbez {

CurvePair::CurvePair(MultiPoly f, MultiPoly g) : f_(std::move(f)), g_(std::move(g)) {
  if (f_.ring() != g_.ring()) throw RingMismatch("curves must live in the same ring");
  if (f_.ring().nvars() != 2) throw InvalidInput("curves must be polynomials in two variables");
  if (f_.is_zero() || g_.is_zero()) throw InvalidInput("curve equations must be nonzero");
  if (!f_.constant_term().is_zero()) throw InvalidInput("origin is not on the first curve");
  if (!g_.constant_term().is_zero()) throw InvalidInput("origin is not on the second curve");
}

CurvePair CurvePair::parse(std::string_view f_text, std::string_view g_text, Field field) {
  const RingPtr ring = make_ring({"x", "y"}, field);
  return CurvePair(locbez::parse(f_text, ring), locbez::parse(g_text, ring));
}

TangentData tangent_data(const CurvePair& pair) {
  TangentData td{ord(pair.f()), ord(pair.g()), initial_form(pair.f()), initial_form(pair.g()),
                 MultiPoly(pair.ring()), 0};
  td.h = binary_form_gcd(td.f_star, td.g_star);
  td.t = td.h.total_degree();
  return td;
}

bool is_transversal(const TangentData& td) { return td.t == 0; }
bool is_transversal(const CurvePair& pair) { return is_transversal(tangent_data(pair)); }

bool axis_is_common_tangent(const TangentData& td) {
  if (td.t == 0) return false;
  const RingPtr& ring = td.h.ring_ptr();
  return try_divide(td.h, MultiPoly::variable(ring, 0)).has_value() ||
         try_divide(td.h, MultiPoly::variable(ring, 1)).has_value();
}

bool axis_is_common_tangent(const CurvePair& pair) { return axis_is_common_tangent(tangent_data(pair)); }

bool tangents_on_axes(const TangentData& td) { return td.t > 0 && td.h.size() == 1; }

CurvePair linear_change(const CurvePair& pair, const std::array<FieldElem, 4>& m) {
  if ((m[0] * m[3] - m[1] * m[2]).is_zero()) throw InvalidInput("linear change of coordinates is singular");
  const RingPtr& ring = pair.ring();
  const MultiPoly x = MultiPoly::variable(ring, 0), y = MultiPoly::variable(ring, 1);
  const MultiPoly images[] = {x.scaled(m[0]) + y.scaled(m[1]), x.scaled(m[2]) + y.scaled(m[3])};
  return CurvePair(compose(pair.f(), images), compose(pair.g(), images));
}

}  // namespace locbez
