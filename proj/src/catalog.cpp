#include "poincare/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "poincare/errors.hpp"
#include "poincare/modification.hpp"

namespace poincare {

std::string_view to_string(ExampleName e) {
  switch (e) {
    case ExampleName::P3: return "P3";
    case ExampleName::P4: return "P4";
    case ExampleName::P5: return "P5";
    case ExampleName::R4: return "R4";
    case ExampleName::R5: return "R5";
  }
  return "P3";
}

std::optional<ExampleName> parse_example_name(std::string_view text) {
  std::string up(text);
  std::transform(up.begin(), up.end(), up.begin(), [](unsigned char ch) { return std::toupper(ch); });
  for (auto e : {ExampleName::P3, ExampleName::P4, ExampleName::P5, ExampleName::R4, ExampleName::R5}) {
    if (up == to_string(e)) return e;
  }
  return std::nullopt;
}

bool needs_parameter(ExampleName e) { return e == ExampleName::P5 || e == ExampleName::R5; }

PlanarPolySystem get_example(ExampleName name, const std::optional<Rational>& c) {
  switch (name) {
    case ExampleName::P3:
      return {parse_poly("x*(x^2+y^2-1) - y*(x^2+y^2+1)"), parse_poly("y*(x^2+y^2-1) + x*(x^2+y^2+1)")};
    case ExampleName::P4:
      return build_modified_system(ModificationSpec(BivariatePoly(1), Family::p4), std::nullopt);
    case ExampleName::R4:
      return build_modified_system(ModificationSpec(parse_poly("x^2+y^2+1"), Family::p4), std::nullopt);
    case ExampleName::P5:
      if (!c) throw MissingParameter("P5 requires the parameter c");
      return build_modified_system(ModificationSpec(BivariatePoly(1), Family::p5), c);
    case ExampleName::R5:
      if (!c) throw MissingParameter("R5 requires the parameter c");
      return build_modified_system(ModificationSpec(parse_poly("x^4+y^4+1"), Family::p5), c);
  }
  throw Error("unknown example");
}

std::vector<CircleOverlay> example_nullclines(ExampleName name) {
  if (name == ExampleName::P4 || name == ExampleName::R4) return {{1.0, 0.0, 3.0}};
  return {};
}

}  // namespace poincare
