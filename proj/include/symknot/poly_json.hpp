#pragma once

#include <json.hpp>

#include "symknot/errors.hpp"
#include "symknot/laurent.hpp"

namespace symknot {

// Polynomial JSON form: {"var": "t", "coeffs": {"-1": 1, "0": -1, ...}}.
// Coefficients outside int64 range are emitted as strings.
inline nlohmann::json poly_to_json(const LaurentPoly& p) {
  nlohmann::json coeffs = nlohmann::json::object();
  for (const auto& [e, c] : p.coeffs()) {
    if (c >= std::numeric_limits<std::int64_t>::min() &&
        c <= std::numeric_limits<std::int64_t>::max())
      coeffs[std::to_string(e)] = static_cast<std::int64_t>(c);
    else
      coeffs[std::to_string(e)] = c.str();
  }
  return nlohmann::json{{"var", var_name(p.var())}, {"coeffs", coeffs}};
}

inline LaurentPoly poly_from_json(const nlohmann::json& j) {
  std::string var = j.at("var").get<std::string>();
  Var v;
  if (var == "A")
    v = Var::A;
  else if (var == "t")
    v = Var::t;
  else if (var == "x")
    v = Var::x;
  else
    raise(ErrorKind::MalformedToken, "unknown polynomial variable " + var);
  LaurentPoly p(v);
  for (const auto& [key, value] : j.at("coeffs").items()) {
    Int c = value.is_string() ? Int(value.get<std::string>()) : Int(value.get<std::int64_t>());
    p.set_coeff(std::stoi(key), c);
  }
  return p;
}

}  // namespace symknot
