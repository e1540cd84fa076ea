#pragma once

#include <stdexcept>
#include <string>

namespace nestcx {

/// Failure categories surfaced by the library. Validation problems in user
/// input map to CLI exit code 1; verification counterexamples map to exit 2.
enum class Errc {
  missing_singleton,
  union_not_closed,
  empty_set_member,
  empty_ground,
  empty_restriction,
  not_a_member,
  not_a_vertex,
  not_maximal,
  not_linkable,
  not_adjacent,
  too_large,
  wrong_dimension,
  length_mismatch,
  singular_system,
  convexity_violation,
  fan_violation,
  normal_fan_mismatch,
  parse_error,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::missing_singleton: return "MissingSingleton";
    case Errc::union_not_closed: return "UnionNotClosed";
    case Errc::empty_set_member: return "EmptySetMember";
    case Errc::empty_ground: return "EmptyGround";
    case Errc::empty_restriction: return "EmptyRestriction";
    case Errc::not_a_member: return "NotAMember";
    case Errc::not_a_vertex: return "NotAVertex";
    case Errc::not_maximal: return "NotMaximal";
    case Errc::not_linkable: return "NotLinkable";
    case Errc::not_adjacent: return "NotAdjacent";
    case Errc::too_large: return "TooLarge";
    case Errc::wrong_dimension: return "WrongDimension";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::singular_system: return "SingularSystem";
    case Errc::convexity_violation: return "ConvexityViolation";
    case Errc::fan_violation: return "FanViolation";
    case Errc::normal_fan_mismatch: return "NormalFanMismatch";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  [[nodiscard]] Errc code() const { return code_; }

  /// True for errors that indicate malformed input rather than a failed
  /// mathematical check.
  [[nodiscard]] bool is_validation() const {
    switch (code_) {
      case Errc::convexity_violation:
      case Errc::fan_violation:
      case Errc::normal_fan_mismatch:
        return false;
      default:
        return true;
    }
  }

 private:
  Errc code_;
};

}  // namespace nestcx
