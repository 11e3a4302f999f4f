#pragma once

#include <string>
#include <vector>

#include "valred/freealg.hpp"
#include "valred/valued_field.hpp"

namespace valred::testing {

inline Presentation make(const ValuedField& field, std::vector<std::string> gens,
                         std::vector<std::string> relations,
                         FiltrationMode mode = FiltrationMode::Filtered,
                         std::vector<std::pair<std::string, std::string>> constants = {}) {
  PresentationSpec spec;
  spec.field = field;
  spec.generators = std::move(gens);
  spec.relations = std::move(relations);
  spec.mode = mode;
  spec.constants = std::move(constants);
  return parse_presentation(spec);
}

inline Presentation quadratic_ext() {
  return make(ValuedField::rational_functions(5, {"X"}), {"xi"}, {"xi*xi = (1-X)*xi - X"});
}

inline Presentation usl2() {
  return make(ValuedField::rationals(3), {"f", "h", "e"},
              {"e*f = f*e + h", "h*f = f*h - 2*f", "e*h = h*e - 2*e"});
}

inline Presentation weyl_a1() {
  return make(ValuedField::rationals(3), {"X", "D"}, {"D*X = X*D + 1"});
}

inline Presentation quantum_plane(const std::string& q = "2") {
  return make(ValuedField::rationals(3), {"Y", "X"}, {"X*Y = q*Y*X"}, FiltrationMode::Graded,
              {{"q", q}});
}

inline Presentation quantum_weyl() {
  return make(ValuedField::rationals(3), {"Y", "X"}, {"X*Y = q*Y*X + 1"}, FiltrationMode::Filtered,
              {{"q", "2"}});
}

}  // namespace valred::testing
