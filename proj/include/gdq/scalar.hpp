#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gdq {

/// Coefficient field: exact rationals (p == 0) or the prime field F_p.
class Field {
 public:
  Field() : p_(0) {}
  explicit Field(unsigned p);

  unsigned characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

  std::string describe() const;

 private:
  unsigned p_;
};

/// Exact field scalar. Over the rationals: reduced num/den with den > 0.
/// Over F_p: den == 1 and 0 <= num < p. All arithmetic goes through Field
/// context so the same value type serves both modes.
struct Scalar {
  long long num = 0;
  long long den = 1;

  bool is_zero() const { return num == 0; }
  bool operator==(const Scalar& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  bool operator<(const Scalar& o) const {
    return num != o.num ? num < o.num : den < o.den;
  }
};

Scalar make_scalar(const Field& f, long long num, long long den = 1);
Scalar scalar_add(const Field& f, const Scalar& a, const Scalar& b);
Scalar scalar_sub(const Field& f, const Scalar& a, const Scalar& b);
Scalar scalar_mul(const Field& f, const Scalar& a, const Scalar& b);
Scalar scalar_neg(const Field& f, const Scalar& a);
Scalar scalar_inv(const Field& f, const Scalar& a);
Scalar scalar_div(const Field& f, const Scalar& a, const Scalar& b);

std::string scalar_to_string(const Scalar& a);
/// Parses "n" or "n/d" and normalizes into the field.
Scalar parse_scalar(const Field& f, const std::string& text);

}  // namespace gdq
