#include "congrowth/diagram/presentation.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "congrowth/errors.hpp"

namespace congrowth::diagram {

Presentation::Presentation(Alphabet alphabet, std::vector<Cell> cells)
    : alphabet_(std::move(alphabet)), cells_(std::move(cells)) {
  if (alphabet_.has_inverses()) throw InputError("a semigroup presentation has no inverse letters");
  if (cells_.empty()) throw InputError("presentation has no cells");
  for (const auto& c : cells_) {
    if (c.top.empty() || c.bottom.empty()) throw InputError("cell words must be nonempty");
    alphabet_.validate(c.top);
    alphabet_.validate(c.bottom);
  }
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

Presentation Presentation::parse(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> raw;
  std::string letters;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    std::string_view body = line;
    if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    body = trim(body);
    if (body.empty()) continue;
    std::size_t arrow = body.find("->"), arrow_len = 2;
    if (arrow == std::string_view::npos) {
      arrow = body.find("\xE2\x86\x92");
      arrow_len = 3;
    }
    if (arrow == std::string_view::npos)
      throw InputError("line " + std::to_string(line_no) + ": expected `u -> v`");
    raw.emplace_back(std::string(trim(body.substr(0, arrow))), std::string(trim(body.substr(arrow + arrow_len))));
  }
  // Alphabet in order of first appearance.
  std::vector<std::string> symbols;
  auto collect = [&](const std::string& w) {
    for (std::size_t i = 0; i < w.size();) {
      const auto lead = static_cast<unsigned char>(w[i]);
      const std::size_t len = lead < 0x80 ? 1 : (lead >> 5) == 0x6 ? 2 : (lead >> 4) == 0xE ? 3 : 4;
      std::string cp = w.substr(i, len);
      i += len;
      if (cp == " " || cp == "\t") continue;
      if (std::find(symbols.begin(), symbols.end(), cp) == symbols.end()) symbols.push_back(cp);
    }
  };
  for (const auto& [u, v] : raw) {
    collect(u);
    collect(v);
  }
  if (symbols.empty()) throw InputError("presentation has no cells");
  Alphabet alphabet(symbols, false);
  std::vector<Cell> cells;
  for (const auto& [u, v] : raw) cells.push_back({alphabet.parse(u), alphabet.parse(v)});
  return Presentation(std::move(alphabet), std::move(cells));
}

Presentation Presentation::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read presentation file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string Presentation::format_cell(std::size_t i) const {
  const auto& c = cell(i);
  return format(c.top) + "->" + format(c.bottom);
}

std::optional<std::size_t> Presentation::find_cell(const Word& top, const Word& bottom) const {
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (cells_[i].top == top && cells_[i].bottom == bottom) return i;
  return std::nullopt;
}

PresentationPtr thompson_presentation() {
  static const auto p = std::make_shared<const Presentation>(Presentation::parse("x -> xx\n"));
  return p;
}

PresentationPtr wreath_presentation() {
  static const auto p = std::make_shared<const Presentation>(Presentation::parse("ab -> a\nb -> b\nbc -> c\n"));
  return p;
}

}  // namespace congrowth::diagram
