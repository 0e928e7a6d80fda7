#include "voicepack/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "voicepack/error.hpp"

namespace voicepack::bench {

namespace fs = std::filesystem;

namespace {

std::string fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

constexpr const char* kPalette[] = {"#4d4d4d", "#1f77b4", "#ff7f0e", "#2ca02c",
                                    "#d62728", "#9467bd", "#8c564b", "#e377c2"};

double metric_value(const BenchmarkRecord& r, Metric metric) {
  return metric == Metric::Characters ? static_cast<double>(r.compressed_chars) : static_cast<double>(r.sms_count);
}

/// Rounds up to 1, 2 or 5 times a power of ten.
double nice_ceiling(double value) {
  if (value <= 0) return 1;
  const double magnitude = std::pow(10.0, std::floor(std::log10(value)));
  for (const double step : {1.0, 2.0, 5.0, 10.0}) {
    if (step * magnitude >= value) return step * magnitude;
  }
  return 10 * magnitude;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) fail(ErrorKind::Storage, "cannot write " + path.string());
}

}  // namespace

std::string results_csv(const std::vector<BenchmarkRecord>& records) {
  std::ostringstream out;
  out << "sentence_id,trial,algorithm,original_chars,compressed_chars,ratio,sms_count,encode_micros\n";
  for (const auto& r : records) {
    out << r.sentence_id << ',' << r.trial << ',' << algorithm_name(r.algorithm) << ',' << r.original_chars << ','
        << r.compressed_chars << ',' << fixed(r.ratio, 4) << ',' << r.sms_count << ',' << r.encode_micros << '\n';
  }
  return out.str();
}

std::string summary_csv(const std::vector<BenchmarkRecord>& records) {
  struct Acc {
    double original = 0, compressed = 0, ratio = 0, sms = 0;
    int n = 0;
  };
  std::vector<std::pair<std::string, AlgorithmId>> order;
  std::map<std::pair<std::string, AlgorithmId>, Acc> acc;
  for (const auto& r : records) {
    const auto key = std::pair{r.sentence_id, r.algorithm};
    auto [it, inserted] = acc.try_emplace(key);
    if (inserted) order.push_back(key);
    it->second.original += static_cast<double>(r.original_chars);
    it->second.compressed += static_cast<double>(r.compressed_chars);
    it->second.ratio += r.ratio;
    it->second.sms += static_cast<double>(r.sms_count);
    ++it->second.n;
  }
  std::ostringstream out;
  out << "sentence_id,algorithm,trials,mean_original_chars,mean_compressed_chars,mean_ratio,mean_sms_count\n";
  for (const auto& key : order) {
    const auto& a = acc[key];
    out << key.first << ',' << algorithm_name(key.second) << ',' << a.n << ',' << fixed(a.original / a.n, 2) << ','
        << fixed(a.compressed / a.n, 2) << ',' << fixed(a.ratio / a.n, 4) << ',' << fixed(a.sms / a.n, 2) << '\n';
  }
  return out.str();
}

std::string render_chart_svg(const std::vector<BenchmarkRecord>& records, Metric metric,
                             const std::vector<std::string>& sentence_ids, const std::string& title) {
  // Groups are (sentence, trial) in sentence order then trial order.
  std::vector<AlgorithmId> algs;
  std::vector<std::pair<std::string, int>> groups;
  std::map<std::pair<std::pair<std::string, int>, AlgorithmId>, double> values;
  double peak = 0;
  for (const auto& id : sentence_ids) {
    std::vector<int> trials;
    for (const auto& r : records) {
      if (r.sentence_id != id) continue;
      if (std::find(algs.begin(), algs.end(), r.algorithm) == algs.end()) algs.push_back(r.algorithm);
      if (std::find(trials.begin(), trials.end(), r.trial) == trials.end()) trials.push_back(r.trial);
      const double v = metric_value(r, metric);
      values[{{id, r.trial}, r.algorithm}] = v;
      peak = std::max(peak, v);
    }
    std::sort(trials.begin(), trials.end());
    for (const int t : trials) groups.emplace_back(id, t);
  }
  std::sort(algs.begin(), algs.end());

  const double left = 70, right = 20, top = 50, bottom = 90;
  const double group_width = std::max(24.0, 4.0 * static_cast<double>(algs.size()) + 6.0);
  const double plot_w = group_width * static_cast<double>(std::max<std::size_t>(groups.size(), 1));
  const double plot_h = 320;
  const double width = left + plot_w + right;
  const double height = top + plot_h + bottom;
  const double y_max = nice_ceiling(peak);
  const double bar_w = (group_width - 6.0) / static_cast<double>(std::max<std::size_t>(algs.size(), 1));
  const char* y_label = metric == Metric::Characters ? "Number of characters" : "Number of SMS";

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(width, 0) << "\" height=\""
      << fixed(height, 0) << "\" viewBox=\"0 0 " << fixed(width, 0) << ' ' << fixed(height, 0)
      << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << fixed(width / 2, 1) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">" << title
      << "</text>\n";

  for (int tick = 0; tick <= 5; ++tick) {
    const double v = y_max * tick / 5.0;
    const double y = top + plot_h - plot_h * tick / 5.0;
    svg << "<line x1=\"" << fixed(left, 1) << "\" y1=\"" << fixed(y, 1) << "\" x2=\"" << fixed(left + plot_w, 1)
        << "\" y2=\"" << fixed(y, 1) << "\" stroke=\"#dddddd\"/>\n";
    svg << "<text x=\"" << fixed(left - 6, 1) << "\" y=\"" << fixed(y + 4, 1) << "\" text-anchor=\"end\">"
        << fixed(v, v < 10 && y_max < 10 ? 1 : 0) << "</text>\n";
  }
  svg << "<text transform=\"translate(16 " << fixed(top + plot_h / 2, 1)
      << ") rotate(-90)\" text-anchor=\"middle\">" << y_label << "</text>\n";

  for (std::size_t g = 0; g < groups.size(); ++g) {
    const double gx = left + group_width * static_cast<double>(g) + 3.0;
    for (std::size_t a = 0; a < algs.size(); ++a) {
      const auto it = values.find({groups[g], algs[a]});
      if (it == values.end()) continue;
      const double h = plot_h * it->second / y_max;
      svg << "<rect x=\"" << fixed(gx + bar_w * static_cast<double>(a), 2) << "\" y=\""
          << fixed(top + plot_h - h, 2) << "\" width=\"" << fixed(bar_w, 2) << "\" height=\"" << fixed(h, 2)
          << "\" fill=\"" << kPalette[to_octet(algs[a]) % 8] << "\"><title>" << groups[g].first << " trial "
          << groups[g].second << ' ' << algorithm_label(algs[a]) << ": " << fixed(it->second, 0)
          << "</title></rect>\n";
    }
    svg << "<text x=\"" << fixed(gx + (group_width - 6.0) / 2, 1) << "\" y=\"" << fixed(top + plot_h + 14, 1)
        << "\" text-anchor=\"middle\">" << g + 1 << "</text>\n";
  }
  svg << "<line x1=\"" << fixed(left, 1) << "\" y1=\"" << fixed(top + plot_h, 1) << "\" x2=\""
      << fixed(left + plot_w, 1) << "\" y2=\"" << fixed(top + plot_h, 1) << "\" stroke=\"black\"/>\n";
  svg << "<text x=\"" << fixed(left + plot_w / 2, 1) << "\" y=\"" << fixed(top + plot_h + 34, 1)
      << "\" text-anchor=\"middle\">Test</text>\n";

  double lx = left;
  const double ly = top + plot_h + 58;
  for (const auto a : algs) {
    svg << "<rect x=\"" << fixed(lx, 1) << "\" y=\"" << fixed(ly - 9, 1) << "\" width=\"10\" height=\"10\" fill=\""
        << kPalette[to_octet(a) % 8] << "\"/>\n";
    svg << "<text x=\"" << fixed(lx + 14, 1) << "\" y=\"" << fixed(ly, 1) << "\">" << algorithm_label(a)
        << "</text>\n";
    lx += 90;
  }
  svg << "</svg>\n";
  return svg.str();
}

std::vector<fs::path> emit_report(const std::vector<BenchmarkRecord>& records, const fs::path& out_dir) {
  if (records.empty()) fail(ErrorKind::InvalidArgument, "no benchmark records to report");
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) fail(ErrorKind::Storage, "cannot create " + out_dir.string() + ": " + ec.message());

  std::vector<fs::path> written;
  auto emit = [&](const std::string& name, const std::string& text) {
    write_text(out_dir / name, text);
    written.push_back(out_dir / name);
  };
  emit("results.csv", results_csv(records));
  emit("summary.csv", summary_csv(records));

  const std::vector<std::vector<std::string>> families = {{"S1", "S2", "S3"}, {"S4", "S5", "S6"}, {"S7", "S8", "S9"}};
  for (const auto metric : {Metric::Characters, Metric::SmsCount}) {
    const std::string prefix = metric == Metric::Characters ? "chars_" : "sms_";
    const std::string what = metric == Metric::Characters ? "Number of characters" : "Number of SMS";
    for (const auto& family : families) {
      const auto span = family.front() + "-" + family.back();
      emit(prefix + span + ".svg",
           render_chart_svg(records, metric, family, what + " per algorithm, " + family[0] + ", " + family[1] +
                                                         " and " + family[2]));
    }
  }
  return written;
}

}  // namespace voicepack::bench
