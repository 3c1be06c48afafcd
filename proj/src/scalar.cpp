#include "gdq/scalar.hpp"

#include <numeric>

namespace gdq {

namespace {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("scalar arithmetic overflow");
  return r;
}

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("scalar arithmetic overflow");
  return r;
}

long long mod_p(long long v, long long p) {
  long long r = v % p;
  return r < 0 ? r + p : r;
}

Scalar reduce_rational(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("scalar with zero denominator");
  if (den < 0) { num = -num; den = -den; }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) { num /= g; den /= g; }
  if (num == 0) den = 1;
  return Scalar{num, den};
}

}  // namespace

Field::Field(unsigned p) : p_(p) {
  if (p != 0 && !is_prime(p))
    throw std::invalid_argument("field characteristic must be 0 or a prime, got " +
                                std::to_string(p));
}

std::string Field::describe() const {
  return p_ == 0 ? "Q" : "F_" + std::to_string(p_);
}

Scalar make_scalar(const Field& f, long long num, long long den) {
  if (f.is_rational()) return reduce_rational(num, den);
  long long p = f.characteristic();
  long long d = mod_p(den, p);
  if (d == 0) throw std::invalid_argument("denominator vanishes in " + f.describe());
  Scalar inv = scalar_inv(f, Scalar{d, 1});
  return Scalar{mod_p(mod_p(num, p) * inv.num % p, p), 1};
}

Scalar scalar_add(const Field& f, const Scalar& a, const Scalar& b) {
  if (f.is_rational())
    return reduce_rational(checked_add(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
                           checked_mul(a.den, b.den));
  return Scalar{mod_p(a.num + b.num, f.characteristic()), 1};
}

Scalar scalar_sub(const Field& f, const Scalar& a, const Scalar& b) {
  return scalar_add(f, a, scalar_neg(f, b));
}

Scalar scalar_mul(const Field& f, const Scalar& a, const Scalar& b) {
  if (f.is_rational())
    return reduce_rational(checked_mul(a.num, b.num), checked_mul(a.den, b.den));
  return Scalar{mod_p(a.num * b.num, f.characteristic()), 1};
}

Scalar scalar_neg(const Field& f, const Scalar& a) {
  if (f.is_rational()) return Scalar{-a.num, a.den};
  return Scalar{mod_p(-a.num, f.characteristic()), 1};
}

Scalar scalar_inv(const Field& f, const Scalar& a) {
  if (a.is_zero()) throw std::invalid_argument("inverting zero scalar");
  if (f.is_rational()) return reduce_rational(a.den, a.num);
  // extended Euclid mod p
  long long p = f.characteristic();
  long long t = 0, newt = 1, r = p, newr = a.num;
  while (newr != 0) {
    long long q = r / newr;
    long long tmp = t - q * newt; t = newt; newt = tmp;
    tmp = r - q * newr; r = newr; newr = tmp;
  }
  return Scalar{mod_p(t, p), 1};
}

Scalar scalar_div(const Field& f, const Scalar& a, const Scalar& b) {
  return scalar_mul(f, a, scalar_inv(f, b));
}

std::string scalar_to_string(const Scalar& a) {
  if (a.den == 1) return std::to_string(a.num);
  return std::to_string(a.num) + "/" + std::to_string(a.den);
}

Scalar parse_scalar(const Field& f, const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos)
      return make_scalar(f, std::stoll(text));
    return make_scalar(f, std::stoll(text.substr(0, slash)),
                       std::stoll(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad scalar literal '" + text + "'");
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("scalar literal out of range '" + text + "'");
  }
}

}  // namespace gdq
