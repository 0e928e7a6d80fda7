#include "voicepack/sms.hpp"

#include <algorithm>
#include <string>

#include "voicepack/error.hpp"

namespace voicepack::sms {

std::vector<Segment> segment(ByteView payload, std::uint8_t reference) {
  const auto count = sms_count(payload.size());
  if (count > static_cast<std::size_t>(kMaxParts)) {
    fail(ErrorKind::TooManySegments, std::to_string(payload.size()) + " octets need " + std::to_string(count) +
                                         " parts, limit is " + std::to_string(kMaxParts));
  }
  const int total = static_cast<int>(count);
  const auto capacity = body_capacity(total);
  std::vector<Segment> parts;
  parts.reserve(count);
  for (int seq = 1; seq <= total; ++seq) {
    const auto from = static_cast<std::size_t>(seq - 1) * capacity;
    const auto len = std::min(capacity, payload.size() - from);
    const auto body = payload.subspan(from, len);
    parts.push_back({reference, total, seq, Bytes(body.begin(), body.end())});
  }
  return parts;
}

Bytes reassemble(std::vector<Segment> segments) {
  if (segments.empty()) throw MissingSegmentError({1});
  const auto reference = segments.front().reference;
  const auto total = segments.front().total;
  for (const auto& s : segments) {
    if (s.reference != reference || s.total != total) {
      fail(ErrorKind::MixedReference, "segments from reference " + std::to_string(reference) + "/" +
                                          std::to_string(total) + " and " + std::to_string(s.reference) + "/" +
                                          std::to_string(s.total));
    }
    if (s.seq < 1 || s.seq > total) {
      fail(ErrorKind::CorruptStream, "sequence " + std::to_string(s.seq) + " outside 1.." +
                                                std::to_string(total));
    }
  }
  std::stable_sort(segments.begin(), segments.end(),
                   [](const Segment& a, const Segment& b) { return a.seq < b.seq; });
  for (std::size_t i = 1; i < segments.size(); ++i) {
    if (segments[i].seq == segments[i - 1].seq && segments[i].body != segments[i - 1].body) {
      fail(ErrorKind::DuplicateConflict, "sequence " + std::to_string(segments[i].seq) + " has two bodies");
    }
  }
  segments.erase(std::unique(segments.begin(), segments.end(),
                             [](const Segment& a, const Segment& b) { return a.seq == b.seq; }),
                 segments.end());

  std::vector<int> missing;
  std::size_t next = 0;
  for (int seq = 1; seq <= total; ++seq) {
    if (next < segments.size() && segments[next].seq == seq) {
      ++next;
    } else {
      missing.push_back(seq);
    }
  }
  if (!missing.empty()) throw MissingSegmentError(std::move(missing));

  Bytes payload;
  for (const auto& s : segments) payload.insert(payload.end(), s.body.begin(), s.body.end());
  return payload;
}

Bytes encode_segment(const Segment& segment) {
  Bytes out(kUdhSize + segment.body.size());
  out[0] = 0x05;
  out[1] = 0x00;
  out[2] = 0x03;
  out[3] = segment.reference;
  out[4] = static_cast<std::uint8_t>(segment.total);
  out[5] = static_cast<std::uint8_t>(segment.seq);
  std::copy(segment.body.begin(), segment.body.end(), out.begin() + kUdhSize);
  return out;
}

Segment decode_segment(ByteView wire) {
  if (wire.size() < kUdhSize || wire[0] != 0x05 || wire[1] != 0x00 || wire[2] != 0x03) {
    fail(ErrorKind::MalformedSegmentFile, "missing 05 00 03 concatenation header");
  }
  Segment s;
  s.reference = wire[3];
  s.total = wire[4];
  s.seq = wire[5];
  if (s.total < 1 || s.seq < 1 || s.seq > s.total) {
    fail(ErrorKind::MalformedSegmentFile, "sequence " + std::to_string(s.seq) + " of " + std::to_string(s.total));
  }
  const auto body = wire.subspan(kUdhSize);
  const auto capacity = body_capacity(s.total);
  if (body.size() > capacity || (s.seq < s.total && body.size() != capacity) ||
      (s.total > 1 && body.empty())) {
    fail(ErrorKind::MalformedSegmentFile, "body of " + std::to_string(body.size()) + " octets in part " +
                                              std::to_string(s.seq) + " of " + std::to_string(s.total));
  }
  s.body.assign(body.begin(), body.end());
  return s;
}

}  // namespace voicepack::sms
