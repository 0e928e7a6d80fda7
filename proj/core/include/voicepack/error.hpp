#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace voicepack {

enum class ErrorKind {
  InvalidConfig,
  InvalidArgument,
  BadMagic,
  UnknownAlgorithm,
  CorruptStream,
  EmptyAlphabet,
  NonExtAsciiCodePoint,
  TooManySegments,
  MissingSegment,
  MixedReference,
  DuplicateConflict,
  MalformedSegmentFile,
  ZeroCompressedSize,
  Storage,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. what() is prefixed with the kind
/// name, e.g. "CorruptStream: lzw code 300 exceeds next free slot 256".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when a reassembly is attempted with sequence numbers absent.
class MissingSegmentError : public Error {
 public:
  explicit MissingSegmentError(std::vector<int> missing);

  const std::vector<int>& missing() const noexcept { return missing_; }

 private:
  std::vector<int> missing_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& detail);

}  // namespace voicepack
