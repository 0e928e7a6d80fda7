#include "voicepack/blob.hpp"

#include <algorithm>
#include <string>

#include "voicepack/error.hpp"

namespace voicepack {

Bytes CompressedBlob::serialize() const {
  Bytes out(kMagic.begin(), kMagic.end());
  out.reserve(serialized_size());
  out.push_back(to_octet(algorithm));
  put_u32_be(out, original_len);
  out.insert(out.end(), payload.begin(), payload.end());
  return out;
}

CompressedBlob CompressedBlob::parse(ByteView wire) {
  if (wire.size() < kMagic.size() || !std::equal(kMagic.begin(), kMagic.end(), wire.begin())) {
    fail(ErrorKind::BadMagic, "container does not start with CVT1");
  }
  if (wire.size() < kHeaderSize) {
    fail(ErrorKind::CorruptStream, "container header truncated at " + std::to_string(wire.size()) + " octets");
  }
  const auto algorithm = algorithm_from_octet(wire[4]);
  if (!algorithm) fail(ErrorKind::UnknownAlgorithm, "algorithm octet " + std::to_string(wire[4]));
  CompressedBlob blob;
  blob.algorithm = *algorithm;
  blob.original_len = get_u32_be(wire, 5);
  blob.payload.assign(wire.begin() + kHeaderSize, wire.end());
  return blob;
}

}  // namespace voicepack
