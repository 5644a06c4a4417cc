#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

#include "ratt/campaign.hpp"
#include "ratt/errors.hpp"

namespace ratt {

namespace {

constexpr const char* kExpectedHeader =
    "schema_version,kind,planner,attack_mode,alpha_s,alpha_c,alpha_cs,trial,"
    "avg_trace,mse,evals";

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

double parse_field_double(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw CsvMalformed(std::string("bad ") + what + " value '" + s + "'");
  }
}

struct GroupKey {
  std::string alpha_s;
  std::string alpha_c;
  bool operator<(const GroupKey& o) const {
    return std::tie(alpha_s, alpha_c) < std::tie(o.alpha_s, o.alpha_c);
  }
};

struct PlannerStats {
  double trace_sum{0.0};
  double mse_sum{0.0};
  int count{0};
};

// Bars laid out left to right in first-appearance planner order.
struct Group {
  std::vector<std::string> planner_order;
  std::map<std::string, PlannerStats> stats;
};

std::string svg_bar_chart(const std::string& title, const std::vector<std::string>& names,
                          const std::vector<double>& values) {
  const int width = 640, height = 400;
  const int left = 70, right = 20, top = 50, bottom = 60;
  const int plot_w = width - left - right;
  const int plot_h = height - top - bottom;
  const double peak = std::max(1e-300, *std::max_element(values.begin(), values.end()));

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\">\n";
  svg << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
  svg << "<text x=\"" << width / 2 << "\" y=\"28\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"16\">"
      << title << "</text>\n";
  svg << "<line x1=\"" << left << "\" y1=\"" << top + plot_h << "\" x2=\"" << left + plot_w
      << "\" y2=\"" << top + plot_h << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\""
      << top + plot_h << "\" stroke=\"black\"/>\n";

  const char* palette[] = {"#d62728", "#1f77b4", "#ff7f0e", "#2ca02c", "#e377c2"};
  const int n = static_cast<int>(names.size());
  const double slot = static_cast<double>(plot_w) / n;
  for (int i = 0; i < n; ++i) {
    const double h = plot_h * (values[i] / (1.1 * peak));
    const double x = left + slot * i + slot * 0.15;
    const double y = top + plot_h - h;
    svg << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << slot * 0.7
        << "\" height=\"" << h << "\" fill=\"" << palette[i % 5] << "\"/>\n";
    svg << "<text x=\"" << left + slot * i + slot / 2 << "\" y=\"" << top + plot_h + 20
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
        << names[i] << "</text>\n";
    std::ostringstream label;
    label.precision(4);
    label << values[i];
    svg << "<text x=\"" << left + slot * i + slot / 2 << "\" y=\"" << y - 6
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
        << label.str() << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace

std::vector<std::filesystem::path> emit_plots(const std::filesystem::path& csv_path,
                                              const std::filesystem::path& out_dir) {
  std::ifstream in(csv_path);
  if (!in) throw CsvMalformed("cannot open CSV file: " + csv_path.string());

  std::string line;
  if (!std::getline(in, line)) throw CsvMalformed("CSV file is empty (no header)");
  if (line != kExpectedHeader) {
    throw CsvMalformed("unexpected CSV header: " + line);
  }

  std::map<GroupKey, Group> groups;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> f = split_csv_line(line);
    if (f.size() != 11) {
      throw CsvMalformed("expected 11 fields, got " + std::to_string(f.size()));
    }
    if (f[1] != "trial") continue;  // summary rows are recomputed, not trusted
    const GroupKey key{f[4], f[5]};
    Group& group = groups[key];
    if (!group.stats.count(f[2])) group.planner_order.push_back(f[2]);
    PlannerStats& stats = group.stats[f[2]];
    stats.trace_sum += parse_field_double(f[8], "avg_trace");
    stats.mse_sum += parse_field_double(f[9], "mse");
    ++stats.count;
  }

  std::vector<std::filesystem::path> written;
  if (groups.empty()) {
    std::cerr << "emit_plots: no data rows in " << csv_path << ", nothing to plot\n";
    return written;
  }

  std::filesystem::create_directories(out_dir);
  for (const auto& [key, group] : groups) {
    for (const char* metric : {"avg_trace", "mse"}) {
      std::vector<std::string> names;
      std::vector<double> means;
      for (const std::string& planner : group.planner_order) {
        const PlannerStats& stats = group.stats.at(planner);
        names.push_back(planner);
        const double sum = metric == std::string("avg_trace") ? stats.trace_sum
                                                              : stats.mse_sum;
        means.push_back(sum / stats.count);
      }
      const std::string title = std::string(metric) + " (alpha_s=" + key.alpha_s +
                                ", alpha_c=" + key.alpha_c + ")";
      const std::filesystem::path file =
          out_dir / (std::string(metric) + "_s" + key.alpha_s + "_c" + key.alpha_c + ".svg");
      std::ofstream(file) << svg_bar_chart(title, names, means);
      written.push_back(file);
    }
  }
  for (const auto& path : written) std::cout << path.string() << '\n';
  return written;
}

}  // namespace ratt
