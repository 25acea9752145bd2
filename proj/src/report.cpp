#include "edgebench/report.hpp"

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <map>
#include <sstream>

namespace edgebench {

std::string method_name(Method m) {
  switch (m) {
    case Method::Sobel: return "sobel";
    case Method::Prewitt: return "prewitt";
    case Method::Roberts: return "roberts";
    case Method::Canny: return "canny";
    case Method::Log: return "log";
    case Method::ZeroCross: return "zerocross";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "sobel") return Method::Sobel;
  if (s == "prewitt") return Method::Prewitt;
  if (s == "roberts") return Method::Roberts;
  if (s == "canny") return Method::Canny;
  if (s == "log") return Method::Log;
  if (s == "zerocross") return Method::ZeroCross;
  return std::nullopt;
}

const std::vector<Method>& summary_order() {
  static const std::vector<Method> order = {Method::Sobel,   Method::Canny,
                                            Method::Roberts, Method::Prewitt,
                                            Method::Log,     Method::ZeroCross};
  return order;
}

namespace {

std::string fmt(double v, int prec = 10) {
  std::ostringstream ss;
  ss << std::setprecision(prec) << v;
  return ss.str();
}

std::string fmt4(double v) {
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(4) << v;
  return ss.str();
}

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

std::string sweep_csv(const SweepResult& sr) {
  std::ostringstream out;
  if (sr.triple_set)
    out << "# t_min=" << fmt(sr.t_min) << " t_ideal=" << fmt(sr.t_ideal)
        << " t_max=" << fmt(sr.t_max) << "\n";
  out << "threshold,density\n";
  for (size_t i = 0; i < sr.thresholds.size(); ++i)
    out << fmt(sr.thresholds[i]) << "," << fmt(sr.densities[i]) << "\n";
  return out.str();
}

std::string sweep_markdown(const std::string& method, const SweepResult& sr,
                           const std::string& features) {
  std::ostringstream out;
  out << "| Method | Threshold min | Threshold ideal | Threshold max | Distinguished features |\n";
  out << "|---|---|---|---|---|\n";
  out << "| " << method << " | " << fmt4(sr.t_min) << " | " << fmt4(sr.t_ideal) << " | "
      << fmt4(sr.t_max) << " | " << (features.empty() ? "-" : features) << " |\n";
  return out.str();
}

std::string band_csv(const BandReport& report) {
  std::ostringstream out;
  out << "label,precision,recall,f1\n";
  for (const auto& row : report.rows)
    out << row.label << "," << fmt(row.precision) << "," << fmt(row.recall) << ","
        << fmt(row.f1) << "\n";
  out << "# best_band=" << report.best_band << "\n";
  return out.str();
}

std::string noise_csv(const NoiseReport& report) {
  std::ostringstream out;
  out << "method,density,seed,false_edge_rate,true_edge_recall\n";
  for (const auto& row : report.rows)
    out << method_name(row.method) << "," << fmt(row.density) << "," << row.seed << ","
        << fmt(row.false_edge_rate) << "," << fmt(row.true_edge_recall) << "\n";
  return out.str();
}

std::string timing_csv(const TimingReport& report) {
  std::ostringstream out;
  out << "method,side,median_seconds,peak_aux_bytes\n";
  for (const auto& row : report.rows) {
    out << method_name(row.method) << "," << row.side << "," << fmt(row.median_seconds) << ",";
    if (row.peak_aux_bytes) out << *row.peak_aux_bytes;
    out << "\n";
  }
  return out.str();
}

namespace {

constexpr const char* kSummaryHeader =
    "| Method | Time | Space | Noise sensitivity | False edges |\n|---|---|---|---|---|\n";

}  // namespace

std::string timing_markdown(const TimingReport& report) {
  int max_side = 0;
  for (const auto& row : report.rows) max_side = std::max(max_side, row.side);

  std::ostringstream out;
  out << kSummaryHeader;
  for (Method m : summary_order()) {
    std::string time_cell = "-";
    std::string space_cell = "-";
    for (const auto& row : report.rows) {
      if (row.method == m && row.side == max_side) {
        time_cell = fmt4(row.median_seconds) + " s @" + std::to_string(max_side);
        if (row.peak_aux_bytes) space_cell = std::to_string(*row.peak_aux_bytes) + " B";
      }
    }
    if (time_cell == "-") continue;  // method not benchmarked
    out << "| " << method_name(m) << " | " << time_cell << " | " << space_cell
        << " | - | - |\n";
  }
  return out.str();
}

std::string noise_markdown(const NoiseReport& report) {
  double max_density = 0.0;
  for (const auto& row : report.rows) max_density = std::max(max_density, row.density);

  std::map<Method, std::vector<double>> fer, recall;
  for (const auto& row : report.rows) {
    if (row.density == max_density) {
      fer[row.method].push_back(row.false_edge_rate);
      recall[row.method].push_back(row.true_edge_recall);
    }
  }

  std::ostringstream out;
  out << kSummaryHeader;
  std::vector<std::pair<double, Method>> ranking;
  for (Method m : summary_order()) {
    auto it = fer.find(m);
    if (it == fer.end()) continue;
    const double med_fer = median_of(it->second);
    const double med_recall = median_of(recall[m]);
    ranking.emplace_back(med_fer, m);
    out << "| " << method_name(m) << " | - | - | median recall " << fmt4(med_recall)
        << " @d=" << fmt(max_density, 4) << " | median rate " << fmt4(med_fer) << " |\n";
  }
  std::stable_sort(ranking.begin(), ranking.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  if (ranking.size() > 1) {
    out << "\nmedian false edges: ";
    for (size_t i = 0; i < ranking.size(); ++i) {
      if (i) out << (ranking[i - 1].first < ranking[i].first ? " < " : " = ");
      out << method_name(ranking[i].second) << " (" << fmt4(ranking[i].first) << ")";
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace edgebench
