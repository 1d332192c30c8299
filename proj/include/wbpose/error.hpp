#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wbpose {

enum class ErrorKind {
  InvalidManifest,
  DuplicatePart,
  UnknownPart,
  DisconnectedGroup,
  NonPositiveKappa,
  ShapeMismatch,
  StageCountZero,
  GridTooSmall,
  ChannelMismatch,
  EmptyRegistry,
  InvalidRegistry,
  InfeasiblePacking,
  InvalidRecipe,
  MalformedSpec,
  BadMagic,
  Truncated,
  UnsupportedVersion,
  InvalidFormat,
  UnknownCategory,
  KeypointCountMismatch,
  ZeroLabeledParts,
  Io,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidManifest: return "InvalidManifest";
    case ErrorKind::DuplicatePart: return "DuplicatePart";
    case ErrorKind::UnknownPart: return "UnknownPart";
    case ErrorKind::DisconnectedGroup: return "DisconnectedGroup";
    case ErrorKind::NonPositiveKappa: return "NonPositiveKappa";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::StageCountZero: return "StageCountZero";
    case ErrorKind::GridTooSmall: return "GridTooSmall";
    case ErrorKind::ChannelMismatch: return "ChannelMismatch";
    case ErrorKind::EmptyRegistry: return "EmptyRegistry";
    case ErrorKind::InvalidRegistry: return "InvalidRegistry";
    case ErrorKind::InfeasiblePacking: return "InfeasiblePacking";
    case ErrorKind::InvalidRecipe: return "InvalidRecipe";
    case ErrorKind::MalformedSpec: return "MalformedSpec";
    case ErrorKind::BadMagic: return "BadMagic";
    case ErrorKind::Truncated: return "Truncated";
    case ErrorKind::UnsupportedVersion: return "UnsupportedVersion";
    case ErrorKind::InvalidFormat: return "InvalidFormat";
    case ErrorKind::UnknownCategory: return "UnknownCategory";
    case ErrorKind::KeypointCountMismatch: return "KeypointCountMismatch";
    case ErrorKind::ZeroLabeledParts: return "ZeroLabeledParts";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace wbpose
