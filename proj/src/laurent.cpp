#include "symknot/laurent.hpp"

#include <cassert>
#include <sstream>

#include "symknot/errors.hpp"

namespace symknot {

const char* var_name(Var v) {
  switch (v) {
    case Var::A: return "A";
    case Var::t: return "t";
    case Var::x: return "x";
  }
  return "?";
}

LaurentPoly LaurentPoly::constant(Var v, Int c) {
  LaurentPoly p(v);
  if (c != 0) p.coeffs_[0] = std::move(c);
  return p;
}

LaurentPoly LaurentPoly::monomial(Var v, int exponent, Int coeff) {
  LaurentPoly p(v);
  if (coeff != 0) p.coeffs_[exponent] = std::move(coeff);
  return p;
}

bool LaurentPoly::is_one() const {
  return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
}

Int LaurentPoly::coeff(int exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? Int(0) : it->second;
}

void LaurentPoly::set_coeff(int exponent, Int value) {
  if (value == 0)
    coeffs_.erase(exponent);
  else
    coeffs_[exponent] = std::move(value);
}

int LaurentPoly::min_exponent() const {
  assert(!coeffs_.empty());
  return coeffs_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  assert(!coeffs_.empty());
  return coeffs_.rbegin()->first;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  assert(var_ == other.var_);
  for (const auto& [e, c] : other.coeffs_) {
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
      coeffs_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  assert(var_ == other.var_);
  for (const auto& [e, c] : other.coeffs_) {
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
      coeffs_.emplace(e, -c);
    } else {
      it->second -= c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
  LaurentPoly r = *this;
  r += other;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& other) const {
  LaurentPoly r = *this;
  r -= other;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
  assert(var_ == other.var_);
  LaurentPoly r(var_);
  for (const auto& [ea, ca] : coeffs_)
    for (const auto& [eb, cb] : other.coeffs_) {
      Int& slot = r.coeffs_[ea + eb];
      slot += ca * cb;
    }
  for (auto it = r.coeffs_.begin(); it != r.coeffs_.end();)
    it = (it->second == 0) ? r.coeffs_.erase(it) : std::next(it);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(var_);
  for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
  return r;
}

LaurentPoly LaurentPoly::scaled(const Int& c) const {
  LaurentPoly r(var_);
  if (c == 0) return r;
  for (const auto& [e, k] : coeffs_) r.coeffs_[e] = k * c;
  return r;
}

LaurentPoly LaurentPoly::shifted(int dexp) const {
  LaurentPoly r(var_);
  for (const auto& [e, c] : coeffs_) r.coeffs_[e + dexp] = c;
  return r;
}

LaurentPoly LaurentPoly::inverted_variable() const {
  LaurentPoly r(var_);
  for (const auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result = constant(var_, 1);
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    base = base * base;
    n >>= 1u;
  }
  return result;
}

std::optional<LaurentPoly> LaurentPoly::divided_exact(const LaurentPoly& divisor) const {
  assert(var_ == divisor.var_);
  if (divisor.is_zero()) return std::nullopt;
  if (is_zero()) return zero(var_);
  // Shift both to ordinary polynomials; division then terminates when the
  // remainder degree drops below the divisor degree.
  const int shift_n = min_exponent(), shift_d = divisor.min_exponent();
  LaurentPoly rem = shifted(-shift_n);
  LaurentPoly den = divisor.shifted(-shift_d);
  LaurentPoly quot(var_);
  const int dlead = den.max_exponent();
  const Int dcoeff = den.coeffs_.rbegin()->second;
  while (!rem.is_zero() && rem.max_exponent() >= dlead) {
    const int rlead = rem.max_exponent();
    const Int& rcoeff = rem.coeffs_.rbegin()->second;
    if (rcoeff % dcoeff != 0) return std::nullopt;
    LaurentPoly term = monomial(var_, rlead - dlead, rcoeff / dcoeff);
    quot += term;
    rem -= term * den;
  }
  if (!rem.is_zero()) return std::nullopt;
  return quot.shifted(shift_n - shift_d);
}

Int LaurentPoly::evaluate(const Int& value) const {
  Int total = 0;
  for (const auto& [e, c] : coeffs_) {
    if (e >= 0) {
      Int p = 1;
      for (int i = 0; i < e; ++i) p *= value;
      total += c * p;
    } else {
      if (value != 1 && value != -1)
        raise(ErrorKind::DegenerateDiagram, "negative exponent evaluation at non-unit");
      Int p = (value == 1 || (-e) % 2 == 0) ? Int(1) : Int(-1);
      total += c * p;
    }
  }
  return total;
}

LaurentPoly LaurentPoly::as_t() const {
  assert(var_ == Var::x);
  LaurentPoly r(Var::t);
  for (const auto& [e, c] : coeffs_) {
    if (e % 2 != 0)
      raise(ErrorKind::DegenerateDiagram, "x-polynomial with odd exponent has no t form");
    r.coeffs_[e / 2] = c;
  }
  return r;
}

LaurentPoly LaurentPoly::as_x() const {
  assert(var_ == Var::t);
  LaurentPoly r(Var::x);
  for (const auto& [e, c] : coeffs_) r.coeffs_[2 * e] = c;
  return r;
}

int LaurentPoly::compare(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.var_ != b.var_) return a.var_ < b.var_ ? -1 : 1;
  auto ia = a.coeffs_.begin(), ib = b.coeffs_.begin();
  while (ia != a.coeffs_.end() && ib != b.coeffs_.end()) {
    if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
    if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
    ++ia;
    ++ib;
  }
  if (ia != a.coeffs_.end()) return 1;
  if (ib != b.coeffs_.end()) return -1;
  return 0;
}

std::string LaurentPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    Int ac = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (e == 0) {
      out << ac.str();
    } else {
      if (ac != 1) out << ac.str() << "*";
      out << var_name(var_);
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

std::string LaurentPoly::serialize_compact() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    if (!first) out << ";";
    out << e << ":" << c.str();
    first = false;
  }
  return out.str();
}

LaurentPoly LaurentPoly::parse_compact(Var v, const std::string& text) {
  LaurentPoly p(v);
  if (text.empty()) return p;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(';', pos);
    if (end == std::string::npos) end = text.size();
    std::string item = text.substr(pos, end - pos);
    std::size_t colon = item.find(':');
    if (colon == std::string::npos)
      raise(ErrorKind::MalformedRow, "bad polynomial term '" + item + "'");
    try {
      int exponent = std::stoi(item.substr(0, colon));
      Int coeff(item.substr(colon + 1));
      if (coeff != 0) p.coeffs_[exponent] += coeff;
    } catch (const std::exception&) {
      raise(ErrorKind::MalformedRow, "bad polynomial term '" + item + "'");
    }
    pos = end + 1;
  }
  return p;
}

}  // namespace symknot
