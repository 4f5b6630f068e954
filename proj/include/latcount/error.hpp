#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace latcount {

enum class ErrorKind {
  CycleDetected,
  RedundantCover,
  LabelOutOfRange,
  NotALattice,
  NotComparable,
  PairIsCover,
  PairNotComparable,
  NotDismantlable,
  IncomparableReducibles,
  NotDoublyIrreducible,
  UnexpectedClass,
  SizeLimitExceeded,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::RedundantCover: return "RedundantCover";
    case ErrorKind::LabelOutOfRange: return "LabelOutOfRange";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::PairIsCover: return "PairIsCover";
    case ErrorKind::PairNotComparable: return "PairNotComparable";
    case ErrorKind::NotDismantlable: return "NotDismantlable";
    case ErrorKind::IncomparableReducibles: return "IncomparableReducibles";
    case ErrorKind::NotDoublyIrreducible: return "NotDoublyIrreducible";
    case ErrorKind::UnexpectedClass: return "UnexpectedClass";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above.
/// Some kinds attach a witness pair of elements (the offending cover, or the
/// pair lacking a meet or join).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what,
        std::optional<std::pair<int, int>> witness = std::nullopt)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind),
        witness_(witness) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::optional<std::pair<int, int>>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::optional<std::pair<int, int>> witness_;
};

}  // namespace latcount
