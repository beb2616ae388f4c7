#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "congrowth/diagram/expression.hpp"
#include "congrowth/diagram/families.hpp"
#include "congrowth/diagram/presentation.hpp"
#include "congrowth/diagram/serialize.hpp"
#include "congrowth/errors.hpp"

using namespace congrowth;
using namespace congrowth::diagram;

TEST(Presentation, ParsesArrowsAndComments) {
  const auto p = Presentation::parse("# wreath\nab -> a\nb → b   # loop\n\nbc->c\n");
  EXPECT_EQ(p, *wreath_presentation());
  EXPECT_EQ(p.format_cell(0), "ab->a");
  EXPECT_EQ(p.find_cell(p.word("bc"), p.word("c")), 2u);
  EXPECT_FALSE(p.find_cell(p.word("c"), p.word("bc")).has_value());
}

TEST(Presentation, RejectsMalformedLines) {
  EXPECT_THROW(Presentation::parse("ab a"), InputError);
  EXPECT_THROW(Presentation::parse("ab -> "), InputError);
  EXPECT_THROW(Presentation::parse("-> a"), InputError);
  EXPECT_THROW(Presentation::parse(""), InputError);
  EXPECT_THROW(Presentation::load("/nonexistent/presentation.txt"), InputError);
}

TEST(Presentation, LoadsFromFile) {
  const auto path = std::filesystem::temp_directory_path() / "congrowth_presentation_test.txt";
  {
    std::ofstream out(path);
    out << "x -> xx\n";
  }
  EXPECT_EQ(Presentation::load(path), *thompson_presentation());
  std::filesystem::remove(path);
}

TEST(Expression, BuildsTheNamedGenerators) {
  const auto f = ExpressionContext::thompson();
  EXPECT_EQ(evaluate_expression("x0", f), thompson_x0());
  EXPECT_EQ(evaluate_expression("cell(0) * (eps(x) + cell(0)) * (inv(cell(0)) + eps(x)) * inv(cell(0))", f),
            thompson_x0());
  EXPECT_EQ(evaluate_expression("reduce(x0 * inv(x0))", f), Diagram::trivial(f.presentation, f.presentation->word("x")));
  const auto w = ExpressionContext::wreath();
  EXPECT_EQ(evaluate_expression("A(2, 1)", w), build_wrZZ_witness(std::vector<int>{2, 1}));
  EXPECT_EQ(evaluate_expression("p", w), wrzz_p());
}

TEST(Expression, ProductBindsTighterThanSum) {
  const auto f = ExpressionContext::thompson();
  const auto a = evaluate_expression("cell(0) * inv(cell(0)) + eps(x)", f);
  const auto b = evaluate_expression("(cell(0) * inv(cell(0))) + eps(x)", f);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.top(), f.presentation->word("xx"));
}

TEST(Expression, Errors) {
  const auto f = ExpressionContext::thompson();
  EXPECT_THROW(evaluate_expression("cell(0) * cell(0)", f), CompositionError);
  EXPECT_THROW(evaluate_expression("cell(3)", f), InputError);
  EXPECT_THROW(evaluate_expression("x0 +", f), InputError);
  EXPECT_THROW(evaluate_expression("nope", f), InputError);
  EXPECT_THROW(evaluate_expression("A(1)", f), InputError);
  EXPECT_THROW(evaluate_expression("eps()", f), InputError);
}

TEST(Serialize, RoundTrip) {
  for (const auto& d : {thompson_x1(), build_wrZZ_witness(std::vector<int>{1, 2})}) {
    const auto j = to_json(d);
    EXPECT_EQ(j["cells"], d.cell_count());
    EXPECT_EQ(diagram_from_json(j, d.presentation()), d);
  }
  const auto j = to_json(thompson_x0());
  EXPECT_EQ(j["top"], "x");
  EXPECT_EQ(j["steps"][0], nlohmann::json::array({0, 1, 0}));
  EXPECT_THROW(diagram_from_json(nlohmann::json{{"top", "x"}}, thompson_presentation()), InputError);
}
