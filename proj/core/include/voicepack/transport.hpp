#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "voicepack/sms.hpp"

namespace voicepack::sms {

/// Directory pair standing in for a handset radio: segments to send are
/// written to outbox/, received ones are read from inbox/.
struct TransportDir {
  std::filesystem::path outbox;
  std::filesystem::path inbox;

  /// outbox/ and inbox/ under `root`, created if absent. Throws Storage.
  static TransportDir under(const std::filesystem::path& root);
};

/// "<ref>_<seq>_of_<total>.sms", each number as three decimal digits.
std::string segment_file_name(const Segment& segment);

/// Atomic create via rename. Rewriting identical content is a no-op;
/// different content under the same name is DuplicateConflict.
std::filesystem::path outbox_write(const Segment& segment, const TransportDir& dir);

/// All inbox segments of `reference`, in sequence order, identical
/// duplicates dropped. Throws MalformedSegmentFile.
std::vector<Segment> inbox_collect(const TransportDir& dir, std::uint8_t reference);

/// Loopback delivery: moves every outbox file into the inbox.
std::size_t deliver(const TransportDir& dir);

}  // namespace voicepack::sms
