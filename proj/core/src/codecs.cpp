#include "voicepack/codecs.hpp"

#include <limits>
#include <string>

#include "voicepack/ac.hpp"
#include "voicepack/bwt.hpp"
#include "voicepack/error.hpp"
#include "voicepack/huffman.hpp"
#include "voicepack/lzma.hpp"
#include "voicepack/lzw.hpp"
#include "voicepack/ppm.hpp"

namespace voicepack {

CompressedBlob compress(ByteView input, AlgorithmId algorithm, const CodecConfig& cfg) {
  if (input.size() > std::numeric_limits<std::uint32_t>::max()) {
    fail(ErrorKind::InvalidArgument, "input of " + std::to_string(input.size()) + " octets exceeds 2^32 - 1");
  }
  CompressedBlob blob;
  blob.algorithm = algorithm;
  blob.original_len = static_cast<std::uint32_t>(input.size());
  switch (algorithm) {
    case AlgorithmId::None: blob.payload.assign(input.begin(), input.end()); break;
    case AlgorithmId::Lzw:
      blob.payload = lzw_pack(lzw_encode(input, cfg.lzw_max_code_bits()), cfg.lzw_max_code_bits());
      break;
    case AlgorithmId::Lzma: blob.payload = lzma_encode(input, cfg); break;
    case AlgorithmId::Huffman: blob.payload = huffman_encode(input); break;
    case AlgorithmId::Ppm: blob.payload = ppm_encode(input, cfg.ppm_order()); break;
    case AlgorithmId::Ac: blob.payload = ac_encode(input); break;
    case AlgorithmId::Bwt: blob.payload = bwt_encode(input, cfg); break;
  }
  return blob;
}

Bytes decompress(const CompressedBlob& blob, const CodecConfig& cfg) {
  const std::size_t n = blob.original_len;
  Bytes out;
  switch (blob.algorithm) {
    case AlgorithmId::None: out = blob.payload; break;
    case AlgorithmId::Lzw:
      out = lzw_decode(lzw_unpack(blob.payload, cfg.lzw_max_code_bits()), cfg.lzw_max_code_bits());
      break;
    case AlgorithmId::Lzma: out = lzma_decode(blob.payload, n, cfg); break;
    case AlgorithmId::Huffman: out = huffman_decode(blob.payload, n); break;
    case AlgorithmId::Ppm: out = ppm_decode(blob.payload, cfg.ppm_order(), n); break;
    case AlgorithmId::Ac: out = ac_decode(blob.payload, n); break;
    case AlgorithmId::Bwt: out = bwt_decode(blob.payload, n, cfg); break;
    default: fail(ErrorKind::UnknownAlgorithm, "algorithm octet " + std::to_string(to_octet(blob.algorithm)));
  }
  if (out.size() != n) {
    fail(ErrorKind::CorruptStream, "decoded " + std::to_string(out.size()) + " octets, header declares " +
                                       std::to_string(n));
  }
  return out;
}

Bytes decompress(ByteView wire, const CodecConfig& cfg) { return decompress(CompressedBlob::parse(wire), cfg); }

}  // namespace voicepack
