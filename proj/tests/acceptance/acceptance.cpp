// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "oracles.hpp"
#include "voicepack/benchmark.hpp"
#include "voicepack/bwt.hpp"
#include "voicepack/ac.hpp"
#include "voicepack/codecs.hpp"
#include "voicepack/huffman.hpp"
#include "voicepack/sms.hpp"
#include "voicepack/transport.hpp"

using namespace voicepack;
namespace fs = std::filesystem;

namespace {

// Pinned tolerances.
constexpr int kRoundTripPayloads = 1000;
constexpr std::size_t kRoundTripMaxLen = 10000;
constexpr double kRoundTripSeconds = 60.0;
constexpr int kPpmMinWins = 7;
constexpr int kAcSymbols = 1000;
constexpr int kAcSeeds = 20;
constexpr double kAcSlackPerSymbol = 0.1;
constexpr double kAcSlackBits = 64.0;
constexpr int kShuffleTrials = 200;
constexpr std::size_t kLoopbackBytes = 50 * 1024;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Bytes read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_file(const fs::path& p, const Bytes& b) {
  std::ofstream out(p, std::ios::binary);
  out.write(reinterpret_cast<const char*>(b.data()), static_cast<std::streamsize>(b.size()));
}

const std::vector<bench::BenchmarkRecord>& seeded_run() {
  static const auto records = bench::run_benchmark(bench::generate_corpus({}), kCompressors, {});
  return records;
}

struct Means {
  double chars = 0;
  double sms = 0;
  double ratio = 0;
};

/// Per (sentence, algorithm) means over trials.
std::map<std::pair<std::string, AlgorithmId>, Means> means() {
  std::map<std::pair<std::string, AlgorithmId>, Means> sum;
  std::map<std::pair<std::string, AlgorithmId>, int> n;
  for (const auto& r : seeded_run()) {
    auto& m = sum[{r.sentence_id, r.algorithm}];
    m.chars += static_cast<double>(r.compressed_chars);
    m.sms += static_cast<double>(r.sms_count);
    m.ratio += r.ratio;
    ++n[{r.sentence_id, r.algorithm}];
  }
  for (auto& [k, m] : sum) {
    m.chars /= n[k];
    m.sms /= n[k];
    m.ratio /= n[k];
  }
  return sum;
}

Outcome round_trip_suite() {
  std::mt19937_64 rng(20240601);
  const auto start = std::chrono::steady_clock::now();
  int failures = 0;
  for (int i = 0; i < kRoundTripPayloads; ++i) {
    const auto len = i < 2 ? static_cast<std::size_t>(i) : rng() % (kRoundTripMaxLen + 1);
    const auto x = oracle::mixed_payload(rng, len);
    for (const auto alg : kAllAlgorithms) {
      try {
        if (decompress(ByteView(compress(x, alg).serialize())) != x) ++failures;
      } catch (const std::exception&) {
        ++failures;
      }
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {failures == 0 && secs < kRoundTripSeconds,
          fmt("%d payloads x 7 algorithms, %d failures, %.1f s (limit %.0f s)", kRoundTripPayloads, failures, secs,
              kRoundTripSeconds)};
}

Outcome ppm_wins() {
  const auto m = means();
  int wins = 0;
  bool sms_ok = true;
  std::string losses;
  for (const auto& s : bench::sentence_table()) {
    const std::string id(s.id);
    const auto& ppm = m.at({id, AlgorithmId::Ppm});
    bool strict = true;
    for (const auto alg : kCompressors) {
      if (alg == AlgorithmId::Ppm) continue;
      const auto& other = m.at({id, alg});
      if (!(ppm.chars < other.chars)) strict = false;
      if (ppm.sms > other.sms) {
        sms_ok = false;
        losses += " " + id + ":sms>" + std::string(algorithm_name(alg));
      }
    }
    if (strict) {
      ++wins;
    } else {
      losses += " " + id + ":chars";
    }
  }
  return {wins >= kPpmMinWins && sms_ok,
          fmt("PPM smallest mean size on %d/9 sentences (need %d), SMS never above another codec: %s%s", wins,
              kPpmMinWins, sms_ok ? "yes" : "no", losses.empty() ? "" : (" [" + losses + " ]").c_str())};
}

Outcome baseline_dominance() {
  std::map<std::pair<std::string, int>, std::size_t> none;
  for (const auto& r : seeded_run()) {
    if (r.algorithm == AlgorithmId::None) none[{r.sentence_id, r.trial}] = r.sms_count;
  }
  const std::set<std::string> repetitive = {"S2", "S3", "S5", "S6", "S8", "S9"};
  int checked = 0;
  int violations = 0;
  for (const auto& r : seeded_run()) {
    if (r.algorithm == AlgorithmId::None || !repetitive.count(r.sentence_id)) continue;
    ++checked;
    if (r.sms_count > none.at({r.sentence_id, r.trial})) ++violations;
  }
  return {violations == 0, fmt("%d (codec, trial) pairs on S2,S3,S5,S6,S8,S9; %d exceed the baseline SMS count",
                               checked, violations)};
}

Outcome monotonicity() {
  const auto m = means();
  const std::vector<std::vector<std::string>> families = {{"S1", "S2", "S3"}, {"S4", "S5", "S6"}, {"S7", "S8", "S9"}};
  std::string bad;
  for (const auto alg : kCompressors) {
    const bool strict = alg != AlgorithmId::Huffman && alg != AlgorithmId::Ac;
    for (const auto& f : families) {
      for (std::size_t i = 0; i + 1 < f.size(); ++i) {
        const double a = m.at({f[i], alg}).ratio;
        const double b = m.at({f[i + 1], alg}).ratio;
        if (strict ? !(b > a) : !(b >= a)) bad += " " + std::string(algorithm_name(alg)) + ":" + f[i] + ">" + f[i + 1];
      }
    }
  }
  return {bad.empty(), bad.empty() ? "mean ratio rises S1<S2<S3, S4<S5<S6, S7<S8<S9 (strict for lzw/lzma/ppm/bwt)"
                                   : "violations:" + bad};
}

Outcome huffman_oracle() {
  int tables = 0;
  int mismatches = 0;
  for (int n = 1; n <= 5; ++n) {
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(n), 1);
    for (;;) {
      FrequencyTable freqs;
      for (int i = 0; i < n; ++i) freqs[static_cast<std::uint8_t>(i)] = counts[static_cast<std::size_t>(i)];
      try {
        const auto code = build_huffman_table(freqs);
        std::uint64_t cost = 0;
        for (const auto& [s, c] : freqs) cost += c * code.length[s];
        if (cost != oracle::min_prefix_cost(counts)) ++mismatches;
      } catch (const std::exception&) {
        ++mismatches;
      }
      ++tables;
      int i = 0;
      while (i < n && counts[static_cast<std::size_t>(i)] == 6) counts[static_cast<std::size_t>(i++)] = 1;
      if (i == n) break;
      ++counts[static_cast<std::size_t>(i)];
    }
  }
  return {mismatches == 0, fmt("%d frequency tables, %d differ from the exhaustive minimum", tables, mismatches)};
}

Outcome bwt_oracle() {
  int strings = 0;
  int mismatches = 0;
  for (std::size_t len = 0; len <= 8; ++len) {
    std::size_t combos = 1;
    for (std::size_t i = 0; i < len; ++i) combos *= 3;
    for (std::size_t code = 0; code < combos; ++code) {
      Bytes s(len);
      auto c = code;
      for (auto& b : s) {
        b = static_cast<std::uint8_t>('a' + c % 3);
        c /= 3;
      }
      const auto [data, primary] = oracle::bwt(s);
      const auto block = bwt_forward(s);
      if (block.data != data || block.primary_index != primary || bwt_inverse(block) != s) ++mismatches;
      ++strings;
    }
  }
  const auto banana = bwt_forward(as_bytes("banana"));
  const bool fixture = banana.data == to_bytes("nnbaaa") && banana.primary_index == 3;
  return {mismatches == 0 && fixture, fmt("%d strings over {a,b,c}, %d mismatches; banana -> (nnbaaa, 3): %s", strings,
                                          mismatches, fixture ? "yes" : "no")};
}

Outcome ac_efficiency() {
  const double h0 = oracle::entropy_bits({0.9, 0.1});
  const double bound = kAcSymbols * h0 + kAcSlackPerSymbol * kAcSymbols + kAcSlackBits;
  double worst = 0;
  int over = 0;
  for (int seed = 1; seed <= kAcSeeds; ++seed) {
    std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
    std::bernoulli_distribution rare(0.1);
    Bytes input(kAcSymbols);
    for (auto& b : input) b = rare(rng) ? 1 : 0;
    const double bits = 8.0 * static_cast<double>(ac_encode(input).size());
    worst = std::max(worst, bits);
    if (bits > bound) ++over;
  }
  return {over == 0, fmt("worst %.0f bits over %d seeds, bound %.1f bits (H0 = %.4f)", worst, kAcSeeds, bound, h0)};
}

Outcome segmentation() {
  const std::vector<std::pair<std::size_t, std::size_t>> table = {{0, 1},    {1, 1},     {140, 1}, {141, 2},
                                                                   {268, 2},  {269, 3},   {1340, 10},
                                                                   {34170, 255}};
  int wrong = 0;
  for (const auto& [len, parts] : table) wrong += sms::sms_count(len) != parts;
  std::mt19937_64 rng(8);
  int broken = 0;
  for (int t = 0; t < kShuffleTrials; ++t) {
    const auto x = oracle::random_bytes(rng, rng() % (sms::kMaxParts * sms::kPartCapacity + 1));
    auto parts = sms::segment(x, static_cast<std::uint8_t>(rng()));
    std::shuffle(parts.begin(), parts.end(), rng);
    try {
      broken += sms::reassemble(parts) != x;
    } catch (const std::exception&) {
      ++broken;
    }
  }
  return {wrong == 0 && broken == 0, fmt("%d/%zu count fixtures wrong, %d/%d shuffled reassemblies wrong", wrong,
                                         table.size(), broken, kShuffleTrials)};
}

int cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  return cli::dispatch(args, out, err);
}

/// Word salad with an English-like letter distribution.
Bytes loopback_input() {
  static const std::vector<std::string> words = {
      "the",   "voice", "message", "satellite", "signal", "is",   "low",    "and",  "call", "dropped",
      "send",  "text",  "over",    "short",     "service", "to",  "a",      "phone", "of",  "compression"};
  std::mt19937_64 rng(50);
  Bytes out;
  while (out.size() < kLoopbackBytes) {
    const auto& w = words[rng() % words.size()];
    out.insert(out.end(), w.begin(), w.end());
    out.push_back(rng() % 12 == 0 ? '\n' : ' ');
  }
  out.resize(kLoopbackBytes);
  return out;
}

Outcome cli_loopback() {
  oracle::TempDir tmp("acceptance-loop");
  const auto input = loopback_input();
  const auto in = tmp.path() / "clip.amr";
  write_file(in, input);
  const auto root = (tmp.path() / "radio").string();
  std::string bad;
  int ref = 1;
  for (const auto alg : kCompressors) {
    const std::string name(algorithm_name(alg));
    const auto cvt = tmp.path() / (name + ".cvt");
    const auto got = tmp.path() / (name + ".got.cvt");
    const auto back = tmp.path() / (name + ".out");
    const auto r = std::to_string(ref++);
    const bool ok = cli({"compress", "--alg", name, "--in", in.string(), "--out", cvt.string()}) == 0 &&
                    cli({"send", "--alg", "none", "--root", root, "--ref", r, "--in", cvt.string()}) == 0 &&
                    (sms::deliver(sms::TransportDir::under(root)), true) &&
                    cli({"receive", "--root", root, "--ref", r, "--out", got.string()}) == 0 &&
                    cli({"decompress", "--in", got.string(), "--out", back.string()}) == 0 &&
                    read_file(back) == input;
    if (!ok) bad += " " + name;
  }
  return {bad.empty(), fmt("%zu-octet file through compress/send/deliver/receive/decompress for 6 codecs%s",
                           input.size(), bad.empty() ? "" : ("; failed:" + bad).c_str())};
}

std::string without_timing(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  std::string out;
  while (std::getline(in, line)) out += line.substr(0, line.rfind(',')) + "\n";
  return out;
}

Outcome determinism() {
  oracle::TempDir tmp("acceptance-det");
  const auto a = tmp.path() / "a";
  const auto b = tmp.path() / "b";
  const bool ran = cli({"bench", "--seed", "42", "--out", a.string()}) == 0 &&
                   cli({"bench", "--seed", "42", "--out", b.string()}) == 0;
  if (!ran) return {false, "bench command failed"};
  const auto ra = read_file(a / "results.csv");
  const auto rb = read_file(b / "results.csv");
  const auto pa = without_timing(std::string(ra.begin(), ra.end()));
  const auto pb = without_timing(std::string(rb.begin(), rb.end()));
  const auto rows = std::count(pa.begin(), pa.end(), '\n');
  return {pa == pb && rows == 631, fmt("two seed-42 runs, %ld lines each, identical without encode_micros: %s",
                                       static_cast<long>(rows), pa == pb ? "yes" : "no")};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"round-trip suite", round_trip_suite},
      {"PPM wins on the seeded corpus", ppm_wins},
      {"baseline dominance", baseline_dominance},
      {"repetition monotonicity", monotonicity},
      {"Huffman optimality oracle", huffman_oracle},
      {"BWT oracle", bwt_oracle},
      {"arithmetic-coder efficiency", ac_efficiency},
      {"segmentation table", segmentation},
      {"CLI loopback", cli_loopback},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("[%s] %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
