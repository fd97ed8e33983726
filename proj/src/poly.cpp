#include "locbez/poly.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "locbez/errors.hpp"

namespace locbez {

namespace {

constexpr MonomialOrder kStorageOrder = MonomialOrder::grlex();

bool storage_greater(const Term& a, const Term& b) {
  return kStorageOrder.greater(a.monomial, b.monomial);
}

bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; });
}

// Sorted merge of a + sign * b.
std::vector<Term> merge_terms(std::span<const Term> a, std::span<const Term> b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && kStorageOrder.greater(a[i].monomial, b[j].monomial))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || kStorageOrder.greater(b[j].monomial, a[i].monomial)) {
      out.push_back(negate_b ? Term{b[j].monomial, -b[j].coeff} : b[j]);
      ++j;
    } else {
      FieldElem c = negate_b ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!c.is_zero()) out.push_back({a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

std::string monomial_text(Monomial m, const Ring& ring) {
  std::string out;
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.variables()[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

using Univariate = std::vector<FieldElem>;  // coefficient of x^i at index i

void trim(Univariate& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

void make_monic(Univariate& u) {
  if (u.empty()) return;
  const FieldElem inv = u.back().inverse();
  for (auto& c : u) c *= inv;
}

Univariate univariate_remainder(Univariate a, const Univariate& b) {
  const FieldElem lead_inv = b.back().inverse();
  while (a.size() >= b.size()) {
    const FieldElem q = a.back() * lead_inv;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

Univariate univariate_gcd(Univariate a, Univariate b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Univariate r = univariate_remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  make_monic(a);
  return a;
}

// Strip the largest monomial x^a y^b dividing F and dehomogenize at y = 1.
struct SplitForm {
  unsigned x_power;
  unsigned y_power;
  Univariate dehomogenized;
};

SplitForm split_binary_form(const MultiPoly& F) {
  unsigned a = Monomial::kMaxExponent, b = Monomial::kMaxExponent;
  for (const auto& t : F.terms()) {
    a = std::min(a, t.monomial[0]);
    b = std::min(b, t.monomial[1]);
  }
  SplitForm s{a, b, {}};
  const unsigned deg = F.total_degree() - a - b;
  s.dehomogenized.assign(deg + 1, FieldElem::zero(F.ring().field()));
  for (const auto& t : F.terms()) s.dehomogenized[t.monomial[0] - a] = t.coeff;
  return s;
}

}  // namespace

Ring::Ring(std::vector<std::string> variables, Field field)
    : variables_(std::move(variables)), field_(field) {
  if (variables_.size() > kMaxVars) throw InvalidInput("at most 4 variables are supported");
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (!valid_identifier(variables_[i])) throw InvalidInput("bad variable name '" + variables_[i] + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (variables_[i] == variables_[j]) throw InvalidInput("duplicate variable '" + variables_[i] + "'");
  }
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i] == name) return i;
  return std::nullopt;
}

RingPtr make_ring(std::vector<std::string> variables, Field field) {
  return std::make_shared<const Ring>(std::move(variables), field);
}

MultiPoly::MultiPoly(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw InvalidInput("polynomial needs a ring");
}

MultiPoly::MultiPoly(RingPtr ring, std::vector<Term> sorted_terms)
    : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

MultiPoly MultiPoly::constant(RingPtr ring, const FieldElem& c) {
  if (c.field() != ring->field()) throw RingMismatch("constant from a different field");
  std::vector<Term> t;
  if (!c.is_zero()) t.push_back({Monomial(), c});
  return MultiPoly(std::move(ring), std::move(t));
}

MultiPoly MultiPoly::constant(RingPtr ring, long c) {
  const Field k = ring->field();
  return constant(std::move(ring), FieldElem(c, k));
}

MultiPoly MultiPoly::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw InvalidInput("variable index out of range");
  const Field k = ring->field();
  return MultiPoly(std::move(ring), {Term{Monomial::variable(index), FieldElem::one(k)}});
}

MultiPoly MultiPoly::variable(RingPtr ring, std::string_view name) {
  const auto idx = ring->index_of(name);
  if (!idx) throw InvalidInput("unknown variable '" + std::string(name) + "'");
  return variable(std::move(ring), *idx);
}

MultiPoly MultiPoly::monomial(RingPtr ring, Monomial m, const FieldElem& c) {
  return from_terms(std::move(ring), {Term{m, c}});
}

MultiPoly MultiPoly::from_terms(RingPtr ring, std::vector<Term> terms) {
  const std::size_t n = ring->nvars();
  for (const auto& t : terms) {
    if (t.coeff.field() != ring->field()) throw RingMismatch("coefficient from a different field");
    for (std::size_t i = n; i < kMaxVars; ++i)
      if (t.monomial[i] != 0) throw RingMismatch("exponent vector longer than the variable list");
  }
  std::sort(terms.begin(), terms.end(), storage_greater);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  return MultiPoly(std::move(ring), std::move(out));
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = terms_.front().monomial.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.monomial.degree() == d; });
}

unsigned MultiPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().monomial.degree();
}

unsigned MultiPoly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial[var]);
  return d;
}

FieldElem MultiPoly::coefficient(Monomial m) const {
  for (const auto& t : terms_)
    if (t.monomial == m) return t.coeff;
  return FieldElem::zero(ring_->field());
}

MultiPoly MultiPoly::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = -t.coeff;
  return MultiPoly(ring_, std::move(out));
}

MultiPoly MultiPoly::scaled(const FieldElem& c) const {
  if (c.is_zero()) return MultiPoly(ring_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff *= c;
  return MultiPoly(ring_, std::move(out));
}

MultiPoly MultiPoly::times_monomial(Monomial m) const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.monomial = t.monomial * m;
  // grlex is multiplicative, so the order is preserved.
  return MultiPoly(ring_, std::move(out));
}

void require_same_ring(const MultiPoly& a, const MultiPoly& b) {
  if (a.ring_ptr() != b.ring_ptr() && a.ring() != b.ring())
    throw RingMismatch("operands live in different polynomial rings");
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  require_same_ring(a, b);
  return MultiPoly(a.ring_, merge_terms(a.terms_, b.terms_, false));
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  require_same_ring(a, b);
  return MultiPoly(a.ring_, merge_terms(a.terms_, b.terms_, true));
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  require_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return MultiPoly(a.ring_);
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.push_back({s.monomial * t.monomial, s.coeff * t.coeff});
  return MultiPoly::from_terms(a.ring_, std::move(prod));
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.ring() != b.ring() || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].monomial != b.terms_[i].monomial || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  }
  return true;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    std::string piece;
    const std::string mono = monomial_text(t.monomial, *ring_);
    if (mono.empty()) {
      piece = t.coeff.to_string();
    } else if (t.coeff.is_one()) {
      piece = mono;
    } else if ((-t.coeff).is_one() && t.coeff.is_negative()) {
      piece = "-" + mono;
    } else {
      piece = t.coeff.to_string() + "*" + mono;
    }
    if (!out.empty() && piece.front() != '-') out += '+';
    out += piece;
  }
  return out;
}

MultiPoly pow(const MultiPoly& f, unsigned n) {
  MultiPoly result = MultiPoly::constant(f.ring_ptr(), 1);
  MultiPoly base = f;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

MultiPoly compose(const MultiPoly& f, std::span<const MultiPoly> images) {
  if (images.size() != f.ring().nvars()) throw RingMismatch("compose needs one image per variable");
  if (images.empty()) throw RingMismatch("compose needs a target ring");
  const RingPtr target = images.front().ring_ptr();
  for (const auto& im : images) require_same_ring(im, images.front());
  if (target->field() != f.ring().field()) throw RingMismatch("compose across different fields");

  // Cache powers of each image as they are requested.
  std::vector<std::vector<MultiPoly>> powers(images.size());
  auto power_of = [&](std::size_t var, unsigned e) -> const MultiPoly& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(MultiPoly::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[var]);
    return cache[e];
  };

  MultiPoly out(target);
  for (const auto& t : f.terms()) {
    MultiPoly piece = MultiPoly::constant(target, t.coeff);
    for (std::size_t i = 0; i < images.size(); ++i)
      if (t.monomial[i] != 0) piece *= power_of(i, t.monomial[i]);
    out += piece;
  }
  return out;
}

MultiPoly substitute(const MultiPoly& f, std::size_t var, const MultiPoly& replacement) {
  require_same_ring(f, replacement);
  if (var >= f.ring().nvars()) throw InvalidInput("variable index out of range");
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < f.ring().nvars(); ++i)
    images.push_back(i == var ? replacement : MultiPoly::variable(f.ring_ptr(), i));
  return compose(f, images);
}

MultiPoly reinterpret(const MultiPoly& f, RingPtr target) {
  if (target->field() != f.ring().field()) throw RingMismatch("reinterpret across different fields");
  std::vector<Term> terms(f.terms().begin(), f.terms().end());
  return MultiPoly::from_terms(std::move(target), std::move(terms));
}

unsigned ord(const MultiPoly& f) {
  if (f.is_zero()) throw DomainError("ord of the zero polynomial is undefined");
  unsigned m = Monomial::kMaxExponent * kMaxVars;
  for (const auto& t : f.terms()) m = std::min(m, t.monomial.degree());
  return m;
}

MultiPoly homogeneous_component(const MultiPoly& f, unsigned degree) {
  std::vector<Term> out;
  for (const auto& t : f.terms())
    if (t.monomial.degree() == degree) out.push_back(t);
  return MultiPoly::from_terms(f.ring_ptr(), std::move(out));
}

MultiPoly initial_form(const MultiPoly& f) {
  return homogeneous_component(f, ord(f));
}

std::optional<MultiPoly> try_divide(const MultiPoly& f, const MultiPoly& g) {
  require_same_ring(f, g);
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  const Term& lead = g.terms().front();
  const FieldElem lead_inv = lead.coeff.inverse();
  std::vector<Term> quotient;
  MultiPoly rem = f;
  while (!rem.is_zero()) {
    const Term& r = rem.terms().front();
    if (!lead.monomial.divides(r.monomial)) return std::nullopt;
    Term q{r.monomial / lead.monomial, r.coeff * lead_inv};
    rem -= g.times_monomial(q.monomial).scaled(q.coeff);
    quotient.push_back(std::move(q));
  }
  return MultiPoly::from_terms(f.ring_ptr(), std::move(quotient));
}

MultiPoly exact_divide(const MultiPoly& f, const MultiPoly& g) {
  auto q = try_divide(f, g);
  if (!q) throw DomainError("division not exact: (" + f.to_string() + ") / (" + g.to_string() + ")");
  return std::move(*q);
}

MultiPoly binary_form_gcd(const MultiPoly& F, const MultiPoly& G) {
  require_same_ring(F, G);
  if (F.ring().nvars() != 2) throw InvalidInput("binary forms need a two-variable ring");
  if (F.is_zero() || G.is_zero()) throw DomainError("gcd of a zero form");
  if (!F.is_homogeneous() || !G.is_homogeneous()) throw DomainError("binary_form_gcd needs homogeneous input");

  const SplitForm a = split_binary_form(F);
  const SplitForm b = split_binary_form(G);
  const Univariate u = univariate_gcd(a.dehomogenized, b.dehomogenized);
  const unsigned deg = static_cast<unsigned>(u.size() - 1);
  const unsigned xs = std::min(a.x_power, b.x_power);
  const unsigned ys = std::min(a.y_power, b.y_power);

  std::vector<Term> terms;
  for (unsigned i = 0; i <= deg; ++i) {
    if (u[i].is_zero()) continue;
    const unsigned e[2] = {i + xs, deg - i + ys};
    terms.push_back({Monomial::from_exponents(e), u[i]});
  }
  return MultiPoly::from_terms(F.ring_ptr(), std::move(terms));
}

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, std::size_t var) {
  require_same_ring(f, g);
  if (var >= f.ring().nvars()) throw InvalidInput("variable index out of range");
  if (f.is_zero() || g.is_zero()) return MultiPoly(f.ring_ptr());

  const RingPtr ring = f.ring_ptr();
  auto coefficients = [&](const MultiPoly& p) {
    std::vector<std::vector<Term>> parts(p.degree_in(var) + 1);
    for (const auto& t : p.terms()) parts[t.monomial[var]].push_back({t.monomial.with_exponent(var, 0), t.coeff});
    std::vector<MultiPoly> out;
    for (auto& part : parts) out.push_back(MultiPoly::from_terms(ring, std::move(part)));
    return out;
  };
  const auto fc = coefficients(f);
  const auto gc = coefficients(g);
  const std::size_t m = fc.size() - 1, n = gc.size() - 1;
  if (m == 0) return pow(f, static_cast<unsigned>(n));
  if (n == 0) return pow(g, static_cast<unsigned>(m));

  const std::size_t size = m + n;
  std::vector<std::vector<MultiPoly>> M(size, std::vector<MultiPoly>(size, MultiPoly(ring)));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) M[r][r + k] = fc[m - k];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) M[n + r][r + k] = gc[n - k];

  // Fraction-free Bareiss elimination.
  bool negate = false;
  MultiPoly prev = MultiPoly::constant(ring, 1);
  for (std::size_t k = 0; k + 1 < size; ++k) {
    std::size_t pivot = k;
    while (pivot < size && M[pivot][k].is_zero()) ++pivot;
    if (pivot == size) return MultiPoly(ring);
    if (pivot != k) {
      std::swap(M[pivot], M[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j)
        M[i][j] = exact_divide(M[i][j] * M[k][k] - M[i][k] * M[k][j], prev);
      M[i][k] = MultiPoly(ring);
    }
    prev = M[k][k];
  }
  return negate ? -M[size - 1][size - 1] : M[size - 1][size - 1];
}

bool share_common_factor(const MultiPoly& f, const MultiPoly& g) {
  require_same_ring(f, g);
  if (f.is_zero() || g.is_zero()) throw DomainError("common-factor test on the zero polynomial");
  for (std::size_t v = 0; v < f.ring().nvars(); ++v) {
    if (f.degree_in(v) > 0 && g.degree_in(v) > 0 && resultant(f, g, v).is_zero()) return true;
  }
  return false;
}

}  // namespace locbez
