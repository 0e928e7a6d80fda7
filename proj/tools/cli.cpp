#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>

#include "voicepack/benchmark.hpp"
#include "voicepack/codecs.hpp"
#include "voicepack/corpus.hpp"
#include "voicepack/error.hpp"
#include "voicepack/pipeline.hpp"
#include "voicepack/report.hpp"
#include "voicepack/transport.hpp"

namespace voicepack::cli {

namespace fs = std::filesystem;

namespace {

Bytes read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Storage, "cannot open " + path.string());
  return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_output(const std::string& path, ByteView data, std::ostream& out) {
  if (path.empty()) {
    out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  file.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  if (!file) fail(ErrorKind::Storage, "cannot write " + path);
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidConfig:
    case ErrorKind::InvalidArgument:
      return kUsageError;
    default:
      return kDataError;
  }
}

struct Options {
  std::string alg = "ppm";
  int lzw_bits = CodecConfig::Params{}.lzw_max_code_bits;
  int ppm_order = CodecConfig::Params{}.ppm_order;
  std::string in;
  std::string out;
  int ref = 0;
  std::string root;
  std::uint64_t seed = 42;
  std::string manifest;

  CodecConfig config() const {
    CodecConfig::Params p;
    p.lzw_max_code_bits = lzw_bits;
    p.ppm_order = ppm_order;
    return CodecConfig(p);
  }

  AlgorithmId algorithm() const { return *algorithm_from_name(alg); }

  sms::TransportDir transport() const { return sms::TransportDir::under(root); }
};

std::vector<std::string> algorithm_names() {
  std::vector<std::string> names;
  for (const auto a : kAllAlgorithms) names.emplace_back(algorithm_name(a));
  return names;
}

void add_codec_flags(CLI::App& cmd, Options& o, bool with_alg) {
  if (with_alg) {
    cmd.add_option("--alg", o.alg, "Compression algorithm")
        ->check(CLI::IsMember(algorithm_names()))
        ->capture_default_str();
  }
  cmd.add_option("--lzw-bits", o.lzw_bits, "Maximum LZW code width in bits (9-16)")->capture_default_str();
  cmd.add_option("--ppm-order", o.ppm_order, "PPM context order (0-8)")->capture_default_str();
}

void add_transport_flags(CLI::App& cmd, Options& o) {
  const char* env = std::getenv("VOICEPACK_ROOT");
  auto* root = cmd.add_option("--root", o.root, "Transport root holding outbox/ and inbox/ (default $VOICEPACK_ROOT)");
  if (env && *env) {
    o.root = env;
    root->capture_default_str();
  } else {
    root->required();
  }
  cmd.add_option("--ref", o.ref, "Concatenated-SMS reference number (0-255)")
      ->check(CLI::Range(0, 255))
      ->capture_default_str();
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compress voice payloads and carry them as concatenated SMS", "voicepack"};
  app.require_subcommand(1);
  Options o;

  auto* compress_cmd = app.add_subcommand("compress", "Compress a file into a CVT1 container");
  add_codec_flags(*compress_cmd, o, true);
  compress_cmd->add_option("--in", o.in, "Input payload file")->required()->check(CLI::ExistingFile);
  compress_cmd->add_option("--out", o.out, "Output container file")->required();

  auto* decompress_cmd = app.add_subcommand("decompress", "Restore the original bytes of a CVT1 container");
  add_codec_flags(*decompress_cmd, o, false);
  decompress_cmd->add_option("--in", o.in, "Input container file")->required()->check(CLI::ExistingFile);
  decompress_cmd->add_option("--out", o.out, "Output file (default: standard output)");

  auto* send_cmd = app.add_subcommand("send", "Compress a file and write its SMS segments to the outbox");
  add_codec_flags(*send_cmd, o, true);
  add_transport_flags(*send_cmd, o);
  send_cmd->add_option("--in", o.in, "Input payload file")->required()->check(CLI::ExistingFile);

  auto* receive_cmd = app.add_subcommand("receive", "Reassemble inbox segments and decode the payload");
  add_codec_flags(*receive_cmd, o, false);
  add_transport_flags(*receive_cmd, o);
  receive_cmd->add_option("--out", o.out, "Output file (default: standard output)");

  auto* bench_cmd = app.add_subcommand("bench", "Run every algorithm over the sentence corpus and write a report");
  add_codec_flags(*bench_cmd, o, false);
  bench_cmd->add_option("--seed", o.seed, "Synthetic corpus seed")->capture_default_str();
  bench_cmd->add_option("--manifest", o.manifest, "CSV (sentence_id,trial,path) of real payload files")
      ->check(CLI::ExistingFile);
  bench_cmd->add_option("--out", o.out, "Report directory")->required();

  auto* corpus_cmd = app.add_subcommand("corpus", "Write the synthetic corpus payloads and a manifest");
  corpus_cmd->add_option("--seed", o.seed, "Synthetic corpus seed")->capture_default_str();
  corpus_cmd->add_option("--out", o.out, "Output directory")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    const auto cfg = o.config();
    if (compress_cmd->parsed()) {
      const auto blob = compress(read_file(o.in), o.algorithm(), cfg);
      write_output(o.out, blob.serialize(), out);
    } else if (decompress_cmd->parsed()) {
      write_output(o.out, decompress(read_file(o.in), cfg), out);
    } else if (send_cmd->parsed()) {
      const VoicePayload payload{read_file(o.in), o.in};
      const auto bundle = encode_message(payload, o.algorithm(), cfg, static_cast<std::uint8_t>(o.ref));
      const auto dir = o.transport();
      for (const auto& segment : bundle.segments) out << sms::outbox_write(segment, dir).string() << '\n';
    } else if (receive_cmd->parsed()) {
      const auto ref = static_cast<std::uint8_t>(o.ref);
      SmsBundle bundle{ref, sms::inbox_collect(o.transport(), ref), AlgorithmId::None};
      write_output(o.out, decode_message(bundle, cfg).bytes, out);
    } else if (bench_cmd->parsed()) {
      bench::CorpusSpec spec;
      spec.seed = o.seed;
      const auto corpus = o.manifest.empty() ? bench::generate_corpus(spec) : bench::load_corpus_manifest(o.manifest);
      const auto records = bench::run_benchmark(corpus, kCompressors, cfg);
      for (const auto& path : bench::emit_report(records, o.out)) out << path.string() << '\n';
    } else if (corpus_cmd->parsed()) {
      bench::CorpusSpec spec;
      spec.seed = o.seed;
      bench::write_corpus(bench::generate_corpus(spec), o.out);
      out << (fs::path(o.out) / "manifest.csv").string() << '\n';
    }
  } catch (const Error& e) {
    err << "voicepack: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "voicepack: " << e.what() << '\n';
    return kDataError;
  }
  return kOk;
}

}  // namespace voicepack::cli
