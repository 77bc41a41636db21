#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace irrlab {

enum class ErrorKind {
  SelfLoop,
  VertexOutOfRange,
  NotAPermutation,
  MalformedHeader,
  TruncatedBitfield,
  NonPrintableByte,
  MalformedEdgeList,
  InvalidArgument,
  RegularGraph,
  CapExceeded,
  NotRealizable,
  MaxDegreeExceeds3,
  BadClassIndex,
  ParamsOutOfRange,
  InternalOverlap,
  NotATree,
  OrderTooSmall,
  Disconnected,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::NotAPermutation: return "NotAPermutation";
    case ErrorKind::MalformedHeader: return "MalformedHeader";
    case ErrorKind::TruncatedBitfield: return "TruncatedBitfield";
    case ErrorKind::NonPrintableByte: return "NonPrintableByte";
    case ErrorKind::MalformedEdgeList: return "MalformedEdgeList";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::RegularGraph: return "RegularGraph";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotRealizable: return "NotRealizable";
    case ErrorKind::MaxDegreeExceeds3: return "MaxDegreeExceeds3";
    case ErrorKind::BadClassIndex: return "BadClassIndex";
    case ErrorKind::ParamsOutOfRange: return "ParamsOutOfRange";
    case ErrorKind::InternalOverlap: return "InternalOverlap";
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::OrderTooSmall: return "OrderTooSmall";
    case ErrorKind::Disconnected: return "Disconnected";
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

}  // namespace irrlab
