#pragma once

#include <random>
#include <vector>

#include "locbez/poly.hpp"

namespace locbez::testing {

inline RingPtr qxy() {
  static const RingPtr ring = make_ring({"x", "y"});
  return ring;
}

inline MultiPoly P(const char* text, const RingPtr& ring = qxy()) { return parse(text, ring); }

/// Random sparse polynomial with coefficients in [-bound, bound] and total
/// degrees in [min_degree, max_degree].
inline MultiPoly random_poly(std::mt19937_64& rng, const RingPtr& ring, unsigned min_degree, unsigned max_degree,
                             unsigned max_terms, long bound = 4) {
  std::uniform_int_distribution<unsigned> nterms(1, max_terms);
  std::uniform_int_distribution<unsigned> deg(min_degree, max_degree);
  std::uniform_int_distribution<long> coeff(-bound, bound);
  for (;;) {
    std::vector<Term> terms;
    const unsigned count = nterms(rng);
    for (unsigned k = 0; k < count; ++k) {
      std::vector<unsigned> exps(ring->nvars(), 0);
      unsigned left = deg(rng);
      for (std::size_t v = 0; v + 1 < exps.size(); ++v) {
        std::uniform_int_distribution<unsigned> part(0, left);
        exps[v] = part(rng);
        left -= exps[v];
      }
      exps.back() = left;
      long c = 0;
      while (c == 0) c = coeff(rng);
      terms.push_back({Monomial::from_exponents(exps), FieldElem(c, ring->field())});
    }
    MultiPoly p = MultiPoly::from_terms(ring, std::move(terms));
    if (!p.is_zero()) return p;
  }
}

}  // namespace locbez::testing

namespace locbez::testing {

/// Dense linear algebra over the monomials of degree < B in two variables:
/// the image of (gens) in k[x,y]/m^B is spanned by m*g truncated at degree B.
class TruncatedSpan {
 public:
  TruncatedSpan(const std::vector<MultiPoly>& gens, unsigned B) : B_(B) {
    for (unsigned d = 0; d < B; ++d)
      for (unsigned i = 0; i <= d; ++i) index_.push_back({d - i, i});
    for (const auto& g : gens) {
      for (const auto& [a, b] : index_) {
        std::vector<FieldElem> row = vectorize(g, a, b);
        insert(std::move(row));
      }
    }
  }

  std::size_t rank() const { return rows_.size(); }
  std::size_t quotient_dim() const { return index_.size() - rows_.size(); }

  bool contains(const MultiPoly& f) const {
    std::vector<FieldElem> v = vectorize(f, 0, 0);
    reduce(v);
    for (const auto& c : v)
      if (!c.is_zero()) return false;
    return true;
  }

 private:
  std::vector<FieldElem> vectorize(const MultiPoly& g, unsigned a, unsigned b) const {
    std::vector<FieldElem> row(index_.size(), FieldElem::zero(g.ring().field()));
    for (const auto& t : g.terms()) {
      const unsigned ex = t.monomial[0] + a, ey = t.monomial[1] + b;
      if (ex + ey >= B_) continue;
      const unsigned d = ex + ey;
      row[d * (d + 1) / 2 + ey] = t.coeff;
    }
    return row;
  }
  void reduce(std::vector<FieldElem>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t p = pivots_[r];
      if (v[p].is_zero()) continue;
      const FieldElem c = v[p];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= c * rows_[r][j];
    }
  }
  void insert(std::vector<FieldElem> v) {
    reduce(v);
    std::size_t p = 0;
    while (p < v.size() && v[p].is_zero()) ++p;
    if (p == v.size()) return;
    const FieldElem inv = v[p].inverse();
    for (auto& c : v) c *= inv;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (rows_[r][p].is_zero()) continue;
      const FieldElem c = rows_[r][p];
      for (std::size_t j = 0; j < v.size(); ++j) rows_[r][j] -= c * v[j];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
  }

  unsigned B_;
  std::vector<std::pair<unsigned, unsigned>> index_;
  std::vector<std::vector<FieldElem>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace locbez::testing
