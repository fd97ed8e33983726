#include "locbez/groebner.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>

#include "locbez/errors.hpp"

namespace locbez {

namespace {

// Terms sorted descending under the active order.
using Poly = std::vector<Term>;

Poly to_ordered(const MultiPoly& f, const MonomialOrder& ord) {
  Poly p(f.terms().begin(), f.terms().end());
  std::sort(p.begin(), p.end(), [&](const Term& a, const Term& b) { return ord.greater(a.monomial, b.monomial); });
  return p;
}

MultiPoly from_ordered(const RingPtr& ring, Poly p) {
  return MultiPoly::from_terms(ring, std::move(p));
}

void make_monic(Poly& p) {
  if (p.empty() || p.front().coeff.is_one()) return;
  const FieldElem inv = p.front().coeff.inverse();
  for (auto& t : p) t.coeff *= inv;
}

// Returns f[from..] - c * m * g[1..] (the leading terms are assumed to cancel).
Poly cancel_lead(const Poly& f, std::size_t from, const FieldElem& c, Monomial m, const Poly& g,
                 const MonomialOrder& ord) {
  Poly out;
  out.reserve(f.size() - from + g.size());
  std::size_t i = from, j = 1;
  while (i < f.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(f[i++]);
      continue;
    }
    const Monomial gm = g[j].monomial * m;
    if (i == f.size()) {
      out.push_back({gm, -(c * g[j].coeff)});
      ++j;
      continue;
    }
    const auto cmp = ord.compare(f[i].monomial, gm);
    if (cmp == std::strong_ordering::greater) {
      out.push_back(f[i++]);
    } else if (cmp == std::strong_ordering::less) {
      out.push_back({gm, -(c * g[j].coeff)});
      ++j;
    } else {
      FieldElem v = f[i].coeff - c * g[j].coeff;
      if (!v.is_zero()) out.push_back({gm, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

// Reducers must be monic.
struct Reducers {
  const std::vector<Poly>* polys;
  const std::vector<Monomial>* leads;
  std::size_t skip = static_cast<std::size_t>(-1);

  std::size_t find(Monomial m) const {
    for (std::size_t k = 0; k < leads->size(); ++k) {
      if (k != skip && (*leads)[k].divides(m)) return k;
    }
    return leads->size();
  }
};

// Full reduction: no term of the result is divisible by a reducer's leading monomial.
Poly reduce(Poly f, const Reducers& red, const MonomialOrder& ord) {
  Poly rem;
  std::size_t start = 0;
  while (start < f.size()) {
    const Term& lt = f[start];
    const std::size_t k = red.find(lt.monomial);
    if (k == red.leads->size()) {
      rem.push_back(lt);
      ++start;
      continue;
    }
    const Poly& g = (*red.polys)[k];
    f = cancel_lead(f, start + 1, lt.coeff, lt.monomial / (*red.leads)[k], g, ord);
    start = 0;
  }
  return rem;
}

Poly s_polynomial(const Poly& a, const Poly& b, const MonomialOrder& ord) {
  const Monomial l = a.front().monomial.lcm(b.front().monomial);
  // Both monic: S = (l/la) a - (l/lb) b.
  Poly left;
  left.reserve(a.size());
  const Monomial ma = l / a.front().monomial;
  for (const auto& t : a) left.push_back({t.monomial * ma, t.coeff});
  return cancel_lead(left, 1, FieldElem::one(a.front().coeff.field()), l / b.front().monomial, b, ord);
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

class Buchberger {
 public:
  Buchberger(const MonomialOrder& ord, const GroebnerLimits& limits) : ord_(ord), limits_(limits) {}

  std::vector<Poly> run(std::vector<Poly> input) {
    for (auto& p : input) {
      if (p.empty()) continue;
      make_monic(p);
      if (p.front().monomial.is_one()) return {std::move(p)};
      add(std::move(p));
    }
    std::size_t steps = 0;
    while (!pending_.empty()) {
      if (++steps > limits_.max_pairs) throw ResourceExhausted("Groebner basis: pair limit exceeded");
      const Pair pr = pop_pair();
      if (chain_criterion(pr)) continue;
      Poly h = reduce(s_polynomial(basis_[pr.i], basis_[pr.j], ord_), Reducers{&basis_, &leads_}, ord_);
      if (h.empty()) continue;
      make_monic(h);
      if (h.front().monomial.is_one()) return {std::move(h)};
      if (h.front().monomial.degree() > limits_.max_degree)
        throw ResourceExhausted("Groebner basis: degree limit exceeded");
      add(std::move(h));
    }
    return interreduce();
  }

 private:
  void add(Poly p) {
    if (basis_.size() >= limits_.max_basis) throw ResourceExhausted("Groebner basis: basis size limit exceeded");
    const std::size_t k = basis_.size();
    const Monomial lk = p.front().monomial;
    basis_.push_back(std::move(p));
    leads_.push_back(lk);
    for (auto& row : in_queue_) row.push_back(0);
    in_queue_.emplace_back(k + 1, 0);
    for (std::size_t i = 0; i < k; ++i) {
      // Product criterion; S-polynomials of two monomials vanish as well.
      if (leads_[i].coprime(lk) || (basis_[i].size() == 1 && basis_[k].size() == 1)) continue;
      pending_.push_back({i, k, leads_[i].lcm(lk)});
      in_queue_[i][k] = in_queue_[k][i] = 1;
    }
  }

  Pair pop_pair() {
    std::size_t best = 0;
    for (std::size_t n = 1; n < pending_.size(); ++n) {
      const auto c = ord_.compare(pending_[n].lcm, pending_[best].lcm);
      if (c == std::strong_ordering::less ||
          (c == std::strong_ordering::equal &&
           std::pair(pending_[n].j, pending_[n].i) < std::pair(pending_[best].j, pending_[best].i)))
        best = n;
    }
    const Pair pr = pending_[best];
    pending_[best] = pending_.back();
    pending_.pop_back();
    in_queue_[pr.i][pr.j] = in_queue_[pr.j][pr.i] = 0;
    return pr;
  }

  // Chain criterion: some third leading monomial divides the lcm and both
  // companion pairs have already been treated.
  bool chain_criterion(const Pair& pr) const {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!leads_[k].divides(pr.lcm)) continue;
      if (!in_queue_[pr.i][k] && !in_queue_[pr.j][k]) return true;
    }
    return false;
  }

  std::vector<Poly> interreduce() {
    std::vector<std::size_t> keep;
    for (std::size_t a = 0; a < basis_.size(); ++a) {
      bool redundant = false;
      for (std::size_t b = 0; b < basis_.size() && !redundant; ++b) {
        if (a == b || !leads_[b].divides(leads_[a])) continue;
        redundant = leads_[a] != leads_[b] || b < a;
      }
      if (!redundant) keep.push_back(a);
    }
    std::vector<Poly> minimal;
    std::vector<Monomial> mleads;
    for (auto a : keep) {
      minimal.push_back(basis_[a]);
      mleads.push_back(leads_[a]);
    }
    std::vector<Poly> out;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      Poly tail(minimal[k].begin() + 1, minimal[k].end());
      Poly reduced = reduce(std::move(tail), Reducers{&minimal, &mleads, k}, ord_);
      Poly full;
      full.reserve(reduced.size() + 1);
      full.push_back(minimal[k].front());
      full.insert(full.end(), std::make_move_iterator(reduced.begin()), std::make_move_iterator(reduced.end()));
      out.push_back(std::move(full));
    }
    std::sort(out.begin(), out.end(),
              [&](const Poly& a, const Poly& b) { return ord_.greater(b.front().monomial, a.front().monomial); });
    return out;
  }

  MonomialOrder ord_;
  GroebnerLimits limits_;
  std::vector<Poly> basis_;
  std::vector<Monomial> leads_;
  std::vector<Pair> pending_;
  std::vector<std::vector<char>> in_queue_;
};

std::vector<Poly> ordered_basis(const GroebnerIdeal& ideal) {
  std::vector<Poly> out;
  for (const auto& b : ideal.basis()) out.push_back(to_ordered(b, ideal.order()));
  return out;
}

}  // namespace

GroebnerIdeal::GroebnerIdeal(RingPtr ring, std::vector<MultiPoly> generators)
    : ring_(std::move(ring)), generators_(std::move(generators)) {
  for (const auto& g : generators_)
    if (g.ring() != *ring_) throw RingMismatch("ideal generator from a different ring");
}

const GroebnerIdeal::Cached& GroebnerIdeal::cached() const {
  if (!cached_) throw InvalidInput("ideal has no cached Groebner basis");
  return *cached_;
}

const std::vector<MultiPoly>& GroebnerIdeal::basis() const { return cached().basis; }
const std::vector<Monomial>& GroebnerIdeal::leading_monomials() const { return cached().leads; }
MonomialOrder GroebnerIdeal::order() const { return cached().order; }

bool GroebnerIdeal::is_unit() const {
  const auto& l = cached().leads;
  return l.size() == 1 && l.front().is_one();
}

GroebnerIdeal groebner_basis(const GroebnerIdeal& ideal, MonomialOrder order, const GroebnerLimits& limits) {
  if (ideal.cached_ && ideal.cached_->order == order) return ideal;
  std::vector<Poly> input;
  const auto& source = ideal.cached_ ? ideal.cached_->basis : ideal.generators_;
  for (const auto& g : source)
    if (!g.is_zero()) input.push_back(to_ordered(g, order));
  std::vector<Poly> basis = Buchberger(order, limits).run(std::move(input));

  GroebnerIdeal out(ideal.ring_, ideal.generators_);
  GroebnerIdeal::Cached c{order, {}, {}};
  for (auto& p : basis) {
    c.leads.push_back(p.front().monomial);
    c.basis.push_back(from_ordered(ideal.ring_, std::move(p)));
  }
  out.cached_ = std::move(c);
  return out;
}

MultiPoly normal_form(const MultiPoly& f, const GroebnerIdeal& ideal) {
  if (f.ring() != ideal.ring()) throw RingMismatch("normal form across different rings");
  const MonomialOrder ord = ideal.order();
  const std::vector<Poly> polys = ordered_basis(ideal);
  return from_ordered(ideal.ring_ptr(),
                      reduce(to_ordered(f, ord), Reducers{&polys, &ideal.leading_monomials()}, ord));
}

bool contains(const GroebnerIdeal& ideal, const MultiPoly& f) {
  return normal_form(f, ideal).is_zero();
}

bool same_ideal(const GroebnerIdeal& a, const GroebnerIdeal& b) {
  if (a.ring() != b.ring()) return false;
  if (!(a.order() == b.order())) throw InvalidInput("same_ideal needs bases under the same order");
  return a.basis() == b.basis();
}

FiniteLength quotient_dim(const GroebnerIdeal& ideal) {
  const auto& leads = ideal.leading_monomials();
  if (ideal.is_unit()) return 0;
  const std::size_t n = ideal.ring().nvars();
  std::vector<unsigned> bound(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (const auto& m : leads) {
      if (m[v] > 0 && m.degree() == m[v]) bound[v] = bound[v] == 0 ? m[v] : std::min(bound[v], m[v]);
    }
    if (bound[v] == 0) return std::nullopt;
  }
  std::size_t count = 0;
  std::vector<unsigned> exps(n, 0);
  std::function<void(std::size_t)> walk = [&](std::size_t v) {
    if (v == n) {
      const Monomial m = Monomial::from_exponents(exps);
      for (const auto& l : leads)
        if (l.divides(m)) return;
      ++count;
      return;
    }
    for (unsigned e = 0; e < bound[v]; ++e) {
      exps[v] = e;
      walk(v + 1);
    }
    exps[v] = 0;
  };
  walk(0);
  return count;
}

GroebnerIdeal intersect_by_elimination(const GroebnerIdeal& a, const GroebnerIdeal& b, const GroebnerLimits& limits) {
  if (a.ring() != b.ring()) throw RingMismatch("intersect across different rings");
  const Ring& base = a.ring();
  const std::size_t n = base.nvars();
  if (n + 1 > kMaxVars) throw InvalidInput("intersection needs a free auxiliary variable slot");

  std::string aux = "t_aux";
  while (base.index_of(aux)) aux += "_";
  std::vector<std::string> names = base.variables();
  names.push_back(aux);
  const RingPtr ext = make_ring(std::move(names), base.field());
  const MultiPoly t = MultiPoly::variable(ext, n);
  const MultiPoly one_minus_t = MultiPoly::constant(ext, 1) - t;

  std::vector<MultiPoly> gens;
  const auto& ga = a.has_basis() ? a.basis() : a.generators();
  const auto& gb = b.has_basis() ? b.basis() : b.generators();
  for (const auto& g : ga) gens.push_back(t * reinterpret(g, ext));
  for (const auto& g : gb) gens.push_back(one_minus_t * reinterpret(g, ext));

  const GroebnerIdeal big = groebner_basis(GroebnerIdeal(ext, std::move(gens)), MonomialOrder::elimination(n + 1, 1), limits);

  // Elimination order restricted to t-free monomials is grevlex, and a t-free
  // subset of a reduced basis is again reduced.
  GroebnerIdeal out(a.ring_ptr(), {});
  GroebnerIdeal::Cached c{MonomialOrder::grevlex(), {}, {}};
  std::vector<Poly> kept;
  for (const auto& g : big.basis()) {
    if (g.degree_in(n) != 0) continue;
    kept.push_back(to_ordered(reinterpret(g, a.ring_ptr()), MonomialOrder::grevlex()));
  }
  std::sort(kept.begin(), kept.end(), [](const Poly& x, const Poly& y) {
    return MonomialOrder::grevlex().greater(y.front().monomial, x.front().monomial);
  });
  for (auto& p : kept) {
    c.leads.push_back(p.front().monomial);
    c.basis.push_back(from_ordered(a.ring_ptr(), std::move(p)));
  }
  out.generators_ = c.basis;
  out.cached_ = std::move(c);
  return out;
}

namespace detail {

GroebnerIdeal adopt_reduced_basis(RingPtr ring, std::vector<MultiPoly> basis, MonomialOrder order) {
  GroebnerIdeal out(ring, basis);
  GroebnerIdeal::Cached c{order, {}, {}};
  for (auto& b : basis) {
    c.leads.push_back(to_ordered(b, order).front().monomial);
    c.basis.push_back(std::move(b));
  }
  out.cached_ = std::move(c);
  return out;
}

}  // namespace detail

namespace {

// Coordinates of k[x]/I in the basis of standard monomials of a grevlex basis.
class QuotientCoordinates {
 public:
  explicit QuotientCoordinates(const GroebnerIdeal& ideal)
      : ideal_(ideal), polys_(ordered_basis(ideal)) {
    const auto& leads = ideal.leading_monomials();
    const std::size_t n = ideal.ring().nvars();
    std::vector<unsigned> bound(n, 0);
    for (std::size_t v = 0; v < n; ++v)
      for (const auto& m : leads)
        if (m[v] > 0 && m.degree() == m[v]) bound[v] = bound[v] == 0 ? m[v] : std::min(bound[v], m[v]);
    std::vector<unsigned> exps(n, 0);
    std::function<void(std::size_t)> walk = [&](std::size_t v) {
      if (v == n) {
        const Monomial m = Monomial::from_exponents(exps);
        for (const auto& l : leads)
          if (l.divides(m)) return;
        index_.emplace(m.bits(), index_.size());
        return;
      }
      for (unsigned e = 0; e < bound[v]; ++e) {
        exps[v] = e;
        walk(v + 1);
      }
      exps[v] = 0;
    };
    if (!ideal.is_unit()) walk(0);
  }

  std::size_t dim() const { return index_.size(); }

  void write(const MultiPoly& f, std::vector<FieldElem>& out, std::size_t offset) const {
    const MonomialOrder ord = ideal_.order();
    const Poly r = reduce(to_ordered(f, ord), Reducers{&polys_, &ideal_.leading_monomials()}, ord);
    for (const auto& t : r) out[offset + index_.at(t.monomial.bits())] = t.coeff;
  }

 private:
  const GroebnerIdeal& ideal_;
  std::vector<Poly> polys_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

bool zero_dimensional(const GroebnerIdeal& ideal) { return quotient_dim(ideal).has_value(); }

// Reduced grevlex basis of the kernel of a linear map k[x] -> k^dim whose
// kernel is an ideal, found by walking monomials in increasing order.
GroebnerIdeal kernel_ideal(const RingPtr& ring, std::size_t dim,
                           const std::function<void(Monomial, std::vector<FieldElem>&)>& image) {
  const MonomialOrder ord = MonomialOrder::grevlex();
  const Field field = ring->field();
  const auto increasing = [&](Monomial a, Monomial b) { return ord.greater(b, a); };
  std::set<Monomial, decltype(increasing)> candidates(increasing);
  candidates.insert(Monomial{});

  struct Row {
    std::size_t pivot;
    std::vector<FieldElem> vec;
    std::vector<FieldElem> comb;  // over `standard`
  };
  std::vector<Row> rows;
  std::vector<Monomial> standard;
  std::vector<Monomial> leads;
  std::vector<MultiPoly> basis;
  const FieldElem zero = FieldElem::zero(field);

  while (!candidates.empty()) {
    const Monomial m = *candidates.begin();
    candidates.erase(candidates.begin());
    if (std::any_of(leads.begin(), leads.end(), [&](Monomial l) { return l.divides(m); })) continue;

    std::vector<FieldElem> vec(dim, zero);
    image(m, vec);
    std::vector<FieldElem> comb(standard.size() + 1, zero);
    comb.back() = FieldElem::one(field);
    for (const Row& row : rows) {
      if (vec[row.pivot].is_zero()) continue;
      const FieldElem c = vec[row.pivot];
      for (std::size_t i = row.pivot; i < dim; ++i)
        if (!row.vec[i].is_zero()) vec[i] -= c * row.vec[i];
      for (std::size_t i = 0; i < row.comb.size(); ++i)
        if (!row.comb[i].is_zero()) comb[i] -= c * row.comb[i];
    }
    const auto pivot = std::find_if(vec.begin(), vec.end(), [](const FieldElem& v) { return !v.is_zero(); });
    if (pivot == vec.end()) {
      std::vector<Term> terms{{m, comb.back()}};
      for (std::size_t i = 0; i < standard.size(); ++i)
        if (!comb[i].is_zero()) terms.push_back({standard[i], comb[i]});
      leads.push_back(m);
      basis.push_back(MultiPoly::from_terms(ring, std::move(terms)));
      continue;
    }
    const FieldElem inv = pivot->inverse();
    for (auto& v : vec) v *= inv;
    for (auto& v : comb) v *= inv;
    rows.push_back({static_cast<std::size_t>(pivot - vec.begin()), std::move(vec), std::move(comb)});
    standard.push_back(m);
    for (std::size_t v = 0; v < ring->nvars(); ++v) candidates.insert(m * Monomial::variable(v));
  }
  return detail::adopt_reduced_basis(ring, std::move(basis), ord);
}

}  // namespace

GroebnerIdeal intersect(const GroebnerIdeal& a, const GroebnerIdeal& b, const GroebnerLimits& limits) {
  if (a.ring() != b.ring()) throw RingMismatch("intersect across different rings");
  const GroebnerIdeal ga = groebner_basis(a, MonomialOrder::grevlex(), limits);
  const GroebnerIdeal gb = groebner_basis(b, MonomialOrder::grevlex(), limits);
  if (!zero_dimensional(ga) || !zero_dimensional(gb)) return intersect_by_elimination(ga, gb, limits);
  const QuotientCoordinates qa(ga), qb(gb);
  const FieldElem one = FieldElem::one(a.ring().field());
  return kernel_ideal(a.ring_ptr(), qa.dim() + qb.dim(), [&](Monomial m, std::vector<FieldElem>& out) {
    const MultiPoly p = MultiPoly::monomial(a.ring_ptr(), m, one);
    qa.write(p, out, 0);
    qb.write(p, out, qa.dim());
  });
}

GroebnerIdeal colon(const GroebnerIdeal& ideal, const MultiPoly& g, const GroebnerLimits& limits) {
  if (g.ring() != ideal.ring()) throw RingMismatch("colon across different rings");
  if (g.is_zero()) throw DomainError("colon by the zero polynomial");
  const GroebnerIdeal gi = groebner_basis(ideal, MonomialOrder::grevlex(), limits);
  if (g.is_constant()) return gi;
  if (!zero_dimensional(gi)) return colon_by_elimination(gi, g, limits);
  const QuotientCoordinates q(gi);
  return kernel_ideal(ideal.ring_ptr(), q.dim(), [&](Monomial m, std::vector<FieldElem>& out) {
    q.write(g.times_monomial(m), out, 0);
  });
}

GroebnerIdeal colon_by_elimination(const GroebnerIdeal& ideal, const MultiPoly& g, const GroebnerLimits& limits) {
  if (g.ring() != ideal.ring()) throw RingMismatch("colon across different rings");
  if (g.is_zero()) throw DomainError("colon by the zero polynomial");
  if (g.is_constant()) return groebner_basis(ideal, MonomialOrder::grevlex(), limits);
  const GroebnerIdeal meet = intersect_by_elimination(ideal, GroebnerIdeal(ideal.ring_ptr(), {g}), limits);
  std::vector<MultiPoly> quotients;
  for (const auto& b : meet.basis()) quotients.push_back(exact_divide(b, g));
  return groebner_basis(GroebnerIdeal(ideal.ring_ptr(), std::move(quotients)), MonomialOrder::grevlex(), limits);
}

GroebnerIdeal saturate(const GroebnerIdeal& ideal, const MultiPoly& g, const GroebnerLimits& limits) {
  GroebnerIdeal current = groebner_basis(ideal, MonomialOrder::grevlex(), limits);
  for (std::size_t step = 0; step < limits.max_saturation_steps; ++step) {
    GroebnerIdeal next = colon(current, g, limits);
    if (same_ideal(next, current)) return next;
    current = std::move(next);
  }
  throw ResourceExhausted("saturation did not stabilize");
}

GroebnerIdeal ideal_sum(const GroebnerIdeal& a, const GroebnerIdeal& b) {
  if (a.ring() != b.ring()) throw RingMismatch("ideal sum across different rings");
  std::vector<MultiPoly> gens = a.has_basis() ? a.basis() : a.generators();
  const auto& more = b.has_basis() ? b.basis() : b.generators();
  gens.insert(gens.end(), more.begin(), more.end());
  return GroebnerIdeal(a.ring_ptr(), std::move(gens));
}

std::vector<MultiPoly> power_of_variables(const RingPtr& ring, std::span<const std::size_t> vars, unsigned n) {
  std::vector<MultiPoly> out;
  const FieldElem one = FieldElem::one(ring->field());
  std::vector<unsigned> exps(ring->nvars(), 0);
  std::function<void(std::size_t, unsigned)> walk = [&](std::size_t k, unsigned left) {
    if (k + 1 == vars.size()) {
      exps[vars[k]] = left;
      out.push_back(MultiPoly::monomial(ring, Monomial::from_exponents(exps), one));
      exps[vars[k]] = 0;
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      exps[vars[k]] = e;
      walk(k + 1, left - e);
    }
    exps[vars[k]] = 0;
  };
  if (vars.empty()) {
    if (n == 0) out.push_back(MultiPoly::constant(ring, 1));
    return out;
  }
  walk(0, n);
  return out;
}

bool satisfies_buchberger_criterion(const GroebnerIdeal& ideal) {
  const MonomialOrder ord = ideal.order();
  const std::vector<Poly> polys = ordered_basis(ideal);
  const Reducers red{&polys, &ideal.leading_monomials()};
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (std::size_t j = i + 1; j < polys.size(); ++j)
      if (!reduce(s_polynomial(polys[i], polys[j], ord), red, ord).empty()) return false;
  return true;
}

}  // namespace locbez
