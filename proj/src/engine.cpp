#include "congrowth/engine.hpp"

#include <charconv>
#include <cstdlib>
#include <thread>

namespace congrowth {

unsigned default_thread_count() {
  if (const char* env = std::getenv("CONGROWTH_THREADS")) {
    unsigned value = 0;
    const std::string_view text(env);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc{} && ptr == text.data() + text.size() && value > 0) return value;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::string_view kind_label(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::ball_size: return "ball";
    case SeriesKind::conj_exact: return "exact";
    case SeriesKind::conj_lower_bound: return "lower";
    case SeriesKind::conj_upper_bound: return "upper";
  }
  return "?";
}

SeriesKind parse_kind_label(std::string_view label) {
  if (label == "ball") return SeriesKind::ball_size;
  if (label == "exact") return SeriesKind::conj_exact;
  if (label == "lower") return SeriesKind::conj_lower_bound;
  if (label == "upper") return SeriesKind::conj_upper_bound;
  throw InputError("unknown series kind '" + std::string(label) + "'");
}

}  // namespace congrowth
