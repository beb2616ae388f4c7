#pragma once

// CSV form of a growth series:
//   # congrowth <version>
//   # key=value        (one line per configuration field)
//   n,value,kind
//   1,5,exact
//   ...

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "congrowth/engine.hpp"

namespace congrowth::growth {

using Metadata = std::vector<std::pair<std::string, std::string>>;

/// Writes metadata (plus truncated=...) and the rows.
void write_series_csv(std::ostream& out, const GrowthSeries& series, const Metadata& metadata);

struct SeriesFile {
  GrowthSeries series;
  Metadata metadata;
};

/// Throws InputError on malformed input: missing header, non-consecutive n,
/// mixed kinds or unparsable numbers.
SeriesFile read_series_csv(std::istream& in);

std::string artifact_version();

}  // namespace congrowth::growth
