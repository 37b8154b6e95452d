#pragma once

#include <map>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace symknot {

using Int = boost::multiprecision::cpp_int;

// Variable tags. `x` is the half-integer Jones variable with x^2 = t.
enum class Var { A, t, x };

const char* var_name(Var v);

// Exact integer-coefficient Laurent polynomial. Zero coefficients are never
// stored, so coefficient-wise equality is structural equality.
class LaurentPoly {
 public:
  explicit LaurentPoly(Var v = Var::t) : var_(v) {}

  static LaurentPoly zero(Var v) { return LaurentPoly(v); }
  static LaurentPoly constant(Var v, Int c);
  static LaurentPoly monomial(Var v, int exponent, Int coeff);

  Var var() const noexcept { return var_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const;

  const std::map<int, Int>& coeffs() const noexcept { return coeffs_; }
  Int coeff(int exponent) const;
  void set_coeff(int exponent, Int value);

  int min_exponent() const;  // requires nonzero
  int max_exponent() const;  // requires nonzero
  int breadth() const { return is_zero() ? 0 : max_exponent() - min_exponent(); }

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly operator+(const LaurentPoly& other) const;
  LaurentPoly operator-(const LaurentPoly& other) const;
  LaurentPoly operator*(const LaurentPoly& other) const;
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& other) const {
    return var_ == other.var_ && coeffs_ == other.coeffs_;
  }
  bool operator!=(const LaurentPoly& other) const { return !(*this == other); }

  LaurentPoly scaled(const Int& c) const;
  LaurentPoly shifted(int dexp) const;          // multiply by var^dexp
  LaurentPoly inverted_variable() const;        // v -> 1/v
  LaurentPoly pow(unsigned n) const;

  // Exact division; nullopt if the divisor does not divide exactly.
  std::optional<LaurentPoly> divided_exact(const LaurentPoly& divisor) const;

  // Evaluate at an integer point (negative exponents require value = ±1).
  Int evaluate(const Int& value) const;

  // Reinterpret an x-polynomial with even exponents as a t-polynomial.
  LaurentPoly as_t() const;
  // Reinterpret a t-polynomial as an x-polynomial (exponents doubled).
  LaurentPoly as_x() const;

  // Total order used for canonicalization: compares variable tag, then the
  // coefficient sequences from the lowest exponent up.
  static int compare(const LaurentPoly& a, const LaurentPoly& b);

  std::string to_string() const;
  std::string serialize_compact() const;  // "e:c;e:c" pairs, exponent ascending
  static LaurentPoly parse_compact(Var v, const std::string& text);

 private:
  Var var_;
  std::map<int, Int> coeffs_;
};

}  // namespace symknot
