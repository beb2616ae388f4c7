#include "congrowth/growth/series_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "congrowth/errors.hpp"

namespace congrowth::growth {

std::string artifact_version() { return CONGROWTH_VERSION; }

void write_series_csv(std::ostream& out, const GrowthSeries& series, const Metadata& metadata) {
  out << "# congrowth " << artifact_version() << "\n";
  for (const auto& [k, v] : metadata) out << "# " << k << "=" << v << "\n";
  out << "# truncated=" << (series.truncated ? "true" : "false") << "\n";
  out << "n,value,kind\n";
  for (std::size_t i = 0; i < series.values.size(); ++i)
    out << series.first_radius + static_cast<int>(i) << "," << series.values[i] << "," << kind_label(series.kind)
        << "\n";
}

namespace {

template <class T>
T parse_number(std::string_view s, std::size_t line) {
  T v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw InputError("line " + std::to_string(line) + ": bad number '" + std::string(s) + "'");
  return v;
}

}  // namespace

SeriesFile read_series_csv(std::istream& in) {
  SeriesFile f;
  bool header = false, first = true;
  std::size_t line_no = 0;
  int expected_n = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto start = line.find_first_not_of("# ");
      const auto body = start == std::string::npos ? std::string{} : line.substr(start);
      if (auto eq = body.find('='); eq != std::string::npos) {
        const auto key = body.substr(0, eq), value = body.substr(eq + 1);
        if (key == "truncated")
          f.series.truncated = value == "true";
        else
          f.metadata.emplace_back(key, value);
      }
      continue;
    }
    if (!header) {
      if (line != "n,value,kind") throw InputError("line " + std::to_string(line_no) + ": expected header n,value,kind");
      header = true;
      continue;
    }
    std::stringstream ss(line);
    std::string n, value, kind;
    if (!std::getline(ss, n, ',') || !std::getline(ss, value, ',') || !std::getline(ss, kind))
      throw InputError("line " + std::to_string(line_no) + ": expected n,value,kind");
    const int radius = parse_number<int>(n, line_no);
    const auto parsed_kind = parse_kind_label(kind);
    if (first) {
      f.series.first_radius = radius;
      f.series.kind = parsed_kind;
      expected_n = radius;
      first = false;
    }
    if (radius != expected_n) throw InputError("line " + std::to_string(line_no) + ": radii must be consecutive");
    if (parsed_kind != f.series.kind) throw InputError("line " + std::to_string(line_no) + ": mixed series kinds");
    f.series.values.push_back(parse_number<std::uint64_t>(value, line_no));
    ++expected_n;
  }
  if (!header) throw InputError("missing n,value,kind header");
  return f;
}

}  // namespace congrowth::growth
