#include "congrowth/diagram/expression.hpp"

#include <cctype>
#include <vector>

#include "congrowth/diagram/families.hpp"
#include "congrowth/errors.hpp"

namespace congrowth::diagram {

ExpressionContext ExpressionContext::thompson() {
  return {thompson_presentation(), {{"x0", thompson_x0()}, {"x1", thompson_x1()}}};
}

ExpressionContext ExpressionContext::wreath() { return {wreath_presentation(), {{"t", wrzz_t()}, {"p", wrzz_p()}}}; }

namespace {

class Parser {
 public:
  Parser(std::string_view text, const ExpressionContext& ctx) : text_(text), ctx_(ctx) {
    if (!ctx_.presentation) throw InputError("expression context has no presentation");
  }

  Diagram parse() {
    auto d = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return d;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("diagram expression, column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string identifier() {
    skip();
    const auto start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  int integer() {
    skip();
    const auto start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a nonnegative integer");
    const auto digits = text_.substr(start, pos_ - start);
    if (digits.size() > 9) fail("integer too large");
    return std::stoi(std::string(digits));
  }

  Diagram expr() {
    auto d = term();
    while (accept('+')) d = sum(d, term());
    return d;
  }

  Diagram term() {
    auto d = factor();
    while (accept('*')) d = multiply(d, factor());
    return d;
  }

  Diagram factor() {
    if (accept('(')) {
      auto d = expr();
      expect(')');
      return d;
    }
    const auto name = identifier();
    if (name.empty()) fail("expected a diagram");
    const auto& p = ctx_.presentation;
    if (name == "cell") {
      expect('(');
      const int i = integer();
      expect(')');
      if (static_cast<std::size_t>(i) >= p->size()) fail("cell index out of range");
      return Diagram::cell(p, static_cast<std::size_t>(i));
    }
    if (name == "eps") {
      expect('(');
      const auto close = text_.find(')', pos_);
      if (close == std::string_view::npos) fail("unterminated eps(");
      auto w = p->word(text_.substr(pos_, close - pos_));
      pos_ = close + 1;
      if (w.empty()) fail("eps() needs a nonempty word");
      return Diagram::trivial(p, std::move(w));
    }
    if (name == "inv" || name == "reduce") {
      expect('(');
      auto d = expr();
      expect(')');
      return name == "inv" ? inverse(d) : reduce(d);
    }
    if (name == "A") {
      if (*p != *wreath_presentation()) fail("A(...) needs the presentation {ab->a, b->b, bc->c}");
      expect('(');
      std::vector<int> parts{integer()};
      while (accept(',')) parts.push_back(integer());
      expect(')');
      return build_wrZZ_witness(parts);
    }
    if (auto it = ctx_.names.find(name); it != ctx_.names.end()) return it->second;
    fail("unknown name '" + name + "'");
  }

  std::string_view text_;
  const ExpressionContext& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

Diagram evaluate_expression(std::string_view text, const ExpressionContext& context) {
  return Parser(text, context).parse();
}

}  // namespace congrowth::diagram
