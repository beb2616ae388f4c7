#pragma once

#include <stdexcept>
#include <string>

namespace congrowth {

/// Malformed or out-of-domain input (bad word, bad parameter, bad file).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Diagram composition with mismatched boundary labels.
class CompositionError : public InputError {
 public:
  using InputError::InputError;
};

/// The requested operation is not available for this group / element.
class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An enumeration hit its element-count cap.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, int last_completed_radius)
      : std::runtime_error(what), last_completed_radius_(last_completed_radius) {}

  int last_completed_radius() const noexcept { return last_completed_radius_; }

 private:
  int last_completed_radius_;
};

}  // namespace congrowth
