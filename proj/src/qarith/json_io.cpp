#include "qcactus/qarith/json_io.hpp"

#include <stdexcept>

namespace qcactus::qarith {

namespace {

std::string fraction_string(const Rational& c) {
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

}  // namespace

nlohmann::json to_json(const LaurentPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [k, c] : p.terms()) arr.push_back({k, fraction_string(c)});
  return arr;
}

nlohmann::json to_json(const RatFunc& f) {
  return {{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

LaurentPoly laurent_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("LaurentPoly json must be an array");
  std::vector<std::pair<int, Rational>> terms;
  for (const auto& t : j) {
    Rational c(t.at(1).get<std::string>());
    c.canonicalize();
    terms.emplace_back(t.at(0).get<int>(), c);
  }
  return LaurentPoly::from_terms(terms);
}

RatFunc ratfunc_from_json(const nlohmann::json& j) {
  return RatFunc::normalize(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
}

}  // namespace qcactus::qarith
