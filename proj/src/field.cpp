#include "locbez/field.hpp"

#include "locbez/errors.hpp"

namespace locbez {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t mod_reduce(const mpz_class& v, std::uint32_t p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
    throw InvalidInput("field characteristic must be a prime below 2^31, got " + std::to_string(p));
  return Field(static_cast<std::uint32_t>(p));
}

Field Field::parse(const std::string& text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.rfind("fp:", 0) == 0) {
    const std::string digits = text.substr(3);
    if (digits.empty() || digits.size() > 12 || digits.find_first_not_of("0123456789") != std::string::npos)
      throw InvalidInput("bad prime in field descriptor '" + text + "'");
    return prime(std::stoull(digits));
  }
  throw InvalidInput("unknown field descriptor '" + text + "' (expected q or fp:<prime>)");
}

std::string Field::to_string() const {
  return prime_ == 0 ? "q" : "fp:" + std::to_string(prime_);
}

FieldElem::FieldElem(long value, Field field) : prime_(field.characteristic()) {
  if (prime_ == 0) {
    q_ = value;
  } else {
    r_ = mod_reduce(mpz_class(value), prime_);
  }
}

FieldElem::FieldElem(const mpq_class& value, Field field) : prime_(field.characteristic()) {
  if (prime_ == 0) {
    q_ = value;
    q_.canonicalize();
    return;
  }
  const std::uint32_t den = mod_reduce(value.get_den(), prime_);
  if (den == 0)
    throw DomainError("coefficient " + value.get_str() + " is not representable in " + field.to_string());
  const std::uint64_t num = mod_reduce(value.get_num(), prime_);
  r_ = static_cast<std::uint32_t>(num * mod_pow(den, prime_ - 2, prime_) % prime_);
}

void FieldElem::check_same(const FieldElem& o) const {
  if (prime_ != o.prime_) throw RingMismatch("coefficients from different fields");
}

FieldElem FieldElem::operator-() const {
  FieldElem r = *this;
  if (prime_ == 0) {
    r.q_ = -q_;
  } else if (r_ != 0) {
    r.r_ = prime_ - r_;
  }
  return r;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  check_same(o);
  if (prime_ == 0) {
    q_ += o.q_;
  } else {
    r_ = static_cast<std::uint32_t>((std::uint64_t{r_} + o.r_) % prime_);
  }
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
  check_same(o);
  if (prime_ == 0) {
    q_ -= o.q_;
  } else {
    r_ = static_cast<std::uint32_t>((std::uint64_t{r_} + prime_ - o.r_) % prime_);
  }
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  check_same(o);
  if (prime_ == 0) {
    q_ *= o.q_;
  } else {
    r_ = static_cast<std::uint32_t>(std::uint64_t{r_} * o.r_ % prime_);
  }
  return *this;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  FieldElem r = *this;
  if (prime_ == 0) {
    r.q_ = 1 / q_;
  } else {
    r.r_ = mod_pow(r_, prime_ - 2, prime_);
  }
  return r;
}

FieldElem& FieldElem::operator/=(const FieldElem& o) {
  check_same(o);
  if (prime_ == 0) {
    if (sgn(o.q_) == 0) throw DomainError("division by zero");
    q_ /= o.q_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string FieldElem::to_string() const {
  return prime_ == 0 ? q_.get_str() : std::to_string(r_);
}

}  // namespace locbez
