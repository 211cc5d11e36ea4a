#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "poincare/portrait.hpp"
#include "poincare/poly.hpp"

namespace poincare {

enum class ExampleName { P3, P4, P5, R4, R5 };

std::string_view to_string(ExampleName e);
/// Case-insensitive "P3".."R5"; std::nullopt otherwise.
std::optional<ExampleName> parse_example_name(std::string_view text);
bool needs_parameter(ExampleName e);

/// Built-in systems. Throws MissingParameter for P5/R5 without c.
PlanarPolySystem get_example(ExampleName name, const std::optional<Rational>& c = std::nullopt);

/// Nullclines worth drawing for an example: the circle x²+y²−2x−8 = 0 for
/// P4 and R4, nothing otherwise.
std::vector<CircleOverlay> example_nullclines(ExampleName name);

}  // namespace poincare
