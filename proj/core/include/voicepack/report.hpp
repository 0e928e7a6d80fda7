#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "voicepack/benchmark.hpp"

namespace voicepack::bench {

enum class Metric { Characters, SmsCount };

/// results.csv body:
/// sentence_id,trial,algorithm,original_chars,compressed_chars,ratio,sms_count,encode_micros
std::string results_csv(const std::vector<BenchmarkRecord>& records);

/// Per-(sentence, algorithm) means, rows in first-appearance order.
std::string summary_csv(const std::vector<BenchmarkRecord>& records);

/// Grouped bar chart: one group per test (sentence trial), numbered 1.. in
/// sentence order, one bar per algorithm.
std::string render_chart_svg(const std::vector<BenchmarkRecord>& records, Metric metric,
                             const std::vector<std::string>& sentence_ids, const std::string& title);

/// Writes results.csv, summary.csv and six charts (chars_/sms_ for the
/// S1-S3, S4-S6, S7-S9 families). Throws InvalidArgument on no records.
std::vector<std::filesystem::path> emit_report(const std::vector<BenchmarkRecord>& records,
                                               const std::filesystem::path& out_dir);

}  // namespace voicepack::bench
