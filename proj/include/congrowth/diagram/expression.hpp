#pragma once

// Diagram expressions:
//   expr   := term ('+' term)*
//   term   := factor ('*' factor)*          (* is the unreduced product ∘)
//   factor := 'cell(' index ')' | 'eps(' word ')' | 'inv(' expr ')'
//           | 'reduce(' expr ')' | 'A(' n0, n1, ... ')' | name | '(' expr ')'
// A(...) builds the Z wr Z witness and needs the presentation {ab->a, b->b, bc->c}.

#include <map>
#include <string>
#include <string_view>

#include "congrowth/diagram/diagram.hpp"

namespace congrowth::diagram {

struct ExpressionContext {
  PresentationPtr presentation;
  std::map<std::string, Diagram, std::less<>> names;

  static ExpressionContext thompson();
  static ExpressionContext wreath();
};

/// Throws InputError with the failing column on a syntax error and
/// CompositionError when a product does not compose.
Diagram evaluate_expression(std::string_view text, const ExpressionContext& context);

}  // namespace congrowth::diagram
