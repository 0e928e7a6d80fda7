#include "voicepack/transport.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <regex>
#include <system_error>

#include "voicepack/error.hpp"

namespace voicepack::sms {

namespace fs = std::filesystem;

namespace {

[[noreturn]] void storage_error(const std::string& what, const fs::path& path, const std::error_code& ec) {
  fail(ErrorKind::Storage, what + " " + path.string() + ": " + ec.message());
}

std::error_code last_os_error() { return {errno, std::generic_category()}; }

Bytes read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) storage_error("cannot open", path, last_os_error());
  return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string three_digits(int value) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "%03d", value);
  return buf;
}

}  // namespace

TransportDir TransportDir::under(const fs::path& root) {
  TransportDir dir{root / "outbox", root / "inbox"};
  for (const auto& p : {dir.outbox, dir.inbox}) {
    std::error_code ec;
    fs::create_directories(p, ec);
    if (ec) storage_error("cannot create", p, ec);
  }
  return dir;
}

std::string segment_file_name(const Segment& segment) {
  return three_digits(segment.reference) + "_" + three_digits(segment.seq) + "_of_" +
         three_digits(segment.total) + ".sms";
}

fs::path outbox_write(const Segment& segment, const TransportDir& dir) {
  const auto target = dir.outbox / segment_file_name(segment);
  const auto image = encode_segment(segment);

  std::error_code ec;
  if (fs::exists(target, ec)) {
    if (read_file(target) == image) return target;
    fail(ErrorKind::DuplicateConflict, target.string() + " already holds a different body");
  }

  auto temp = target;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) storage_error("cannot write", temp, last_os_error());
    out.write(reinterpret_cast<const char*>(image.data()), static_cast<std::streamsize>(image.size()));
    if (!out) storage_error("short write to", temp, last_os_error());
  }
  fs::rename(temp, target, ec);
  if (ec) storage_error("cannot rename into", target, ec);
  return target;
}

std::vector<Segment> inbox_collect(const TransportDir& dir, std::uint8_t reference) {
  static const std::regex kName(R"((\d{3})_(\d{3})_of_(\d{3})\.sms)");
  std::error_code ec;
  fs::directory_iterator it(dir.inbox, ec);
  if (ec) storage_error("cannot list", dir.inbox, ec);

  std::vector<Segment> found;
  for (const auto& entry : it) {
    const auto name = entry.path().filename().string();
    std::smatch m;
    if (!std::regex_match(name, m, kName) || std::stoi(m[1].str()) != reference) continue;
    auto segment = decode_segment(read_file(entry.path()));
    if (segment.reference != reference || segment.seq != std::stoi(m[2].str()) ||
        segment.total != std::stoi(m[3].str())) {
      fail(ErrorKind::MalformedSegmentFile, name + " disagrees with its concatenation header");
    }
    found.push_back(std::move(segment));
  }
  std::sort(found.begin(), found.end(), [](const Segment& a, const Segment& b) {
    return a.seq != b.seq ? a.seq < b.seq : a.total < b.total;
  });
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

std::size_t deliver(const TransportDir& dir) {
  std::error_code ec;
  fs::directory_iterator it(dir.outbox, ec);
  if (ec) storage_error("cannot list", dir.outbox, ec);
  std::vector<fs::path> pending;
  for (const auto& entry : it) {
    if (entry.path().extension() == ".sms") pending.push_back(entry.path());
  }
  for (const auto& path : pending) {
    fs::rename(path, dir.inbox / path.filename(), ec);
    if (ec) storage_error("cannot move", path, ec);
  }
  return pending.size();
}

}  // namespace voicepack::sms
