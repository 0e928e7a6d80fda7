#include "voicepack/error.hpp"

namespace voicepack {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::BadMagic: return "BadMagic";
    case ErrorKind::UnknownAlgorithm: return "UnknownAlgorithm";
    case ErrorKind::CorruptStream: return "CorruptStream";
    case ErrorKind::EmptyAlphabet: return "EmptyAlphabet";
    case ErrorKind::NonExtAsciiCodePoint: return "NonExtAsciiCodePoint";
    case ErrorKind::TooManySegments: return "TooManySegments";
    case ErrorKind::MissingSegment: return "MissingSegment";
    case ErrorKind::MixedReference: return "MixedReference";
    case ErrorKind::DuplicateConflict: return "DuplicateConflict";
    case ErrorKind::MalformedSegmentFile: return "MalformedSegmentFile";
    case ErrorKind::ZeroCompressedSize: return "ZeroCompressedSize";
    case ErrorKind::Storage: return "Storage";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

namespace {

std::string describe_missing(const std::vector<int>& missing) {
  std::string text = "absent sequence numbers [";
  for (std::size_t i = 0; i < missing.size(); ++i) {
    if (i) text += ", ";
    text += std::to_string(missing[i]);
  }
  return text + "]";
}

}  // namespace

MissingSegmentError::MissingSegmentError(std::vector<int> missing)
    : Error(ErrorKind::MissingSegment, describe_missing(missing)), missing_(std::move(missing)) {}

void fail(ErrorKind kind, const std::string& detail) { throw Error(kind, detail); }

}  // namespace voicepack
