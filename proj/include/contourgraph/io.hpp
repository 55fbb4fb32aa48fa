#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "contourgraph/classify.hpp"
#include "contourgraph/common.hpp"
#include "contourgraph/contour.hpp"
#include "contourgraph/curvature.hpp"
#include "contourgraph/descriptor.hpp"
#include "contourgraph/metrics.hpp"

namespace cng {

namespace detail {

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace detail

/// Writes content to path via a temp file in the same directory plus rename,
/// so readers never observe a half-written file.
inline void write_text_atomic(const std::filesystem::path& path, const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("io: cannot open " + tmp.string() + " for writing");
    out << content;
    if (!out) throw std::runtime_error("io: write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

inline std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("io: cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------------------
// Contour CSV: one "x,y" pair per line, ordered along the boundary, closed
// implicitly. Optional "# label=<class>" header line.

inline std::string contour_csv(const Contour& c) {
  std::string out;
  if (!c.label.empty()) out += "# label=" + c.label + "\n";
  for (const Point& p : c.points) {
    out += detail::format_double(p.x);
    out += ',';
    out += detail::format_double(p.y);
    out += '\n';
  }
  return out;
}

inline void write_contour_csv(const Contour& c, const std::filesystem::path& path) {
  write_text_atomic(path, contour_csv(c));
}

inline Contour parse_contour_csv(std::istream& in, const std::string& source = "<stream>") {
  Contour c;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto pos = line.find("label=");
      if (pos != std::string::npos) c.label = line.substr(pos + 6);
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw std::runtime_error(source + ":" + std::to_string(line_no) +
                               ": expected 'x,y', got '" + line + "'");
    }
    char* endx = nullptr;
    char* endy = nullptr;
    const std::string xs = line.substr(0, comma);
    const std::string ys = line.substr(comma + 1);
    const double x = std::strtod(xs.c_str(), &endx);
    const double y = std::strtod(ys.c_str(), &endy);
    if (endx == xs.c_str() || endy == ys.c_str()) {
      throw std::runtime_error(source + ":" + std::to_string(line_no) +
                               ": malformed coordinates '" + line + "'");
    }
    c.points.push_back({x, y});
  }
  validate_contour(c);
  return c;
}

inline Contour read_contour_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("io: cannot open " + path.string());
  Contour c = parse_contour_csv(in, path.string());
  c.id = path.filename().string();
  return c;
}

// ---------------------------------------------------------------------------
// Feature CSV: '#' preamble lines, then a header row naming every column
// plus 'label', then one row per shape.

inline std::string features_csv(const std::vector<FeatureVector>& vectors,
                                const std::vector<std::string>& preamble = {}) {
  require(!vectors.empty(), "features: nothing to write");
  std::string out;
  for (const auto& line : preamble) out += "# " + line + "\n";
  const auto cols = column_names(vectors.front().layout);
  for (const auto& name : cols) {
    out += name;
    out += ',';
  }
  out += "label\n";
  for (const auto& fv : vectors) {
    require(fv.layout == vectors.front().layout, "features: mixed layouts");
    for (double v : fv.values) {
      out += detail::format_double(v);
      out += ',';
    }
    out += fv.label;
    out += '\n';
  }
  return out;
}

inline void write_features_csv(const std::vector<FeatureVector>& vectors,
                               const std::filesystem::path& path,
                               const std::vector<std::string>& preamble = {}) {
  write_text_atomic(path, features_csv(vectors, preamble));
}

/// Reads a feature CSV into a dataset; the last column must be 'label'.
inline LabeledDataset read_features_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("io: cannot open " + path.string());
  std::string line;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::string> labels;
  bool have_header = false;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::size_t start = 0;
    for (;;) {
      const auto comma = line.find(',', start);
      if (comma == std::string::npos) {
        cells.push_back(line.substr(start));
        break;
      }
      cells.push_back(line.substr(start, comma - start));
      start = comma + 1;
    }
    if (!have_header) {
      require(cells.size() >= 2 && cells.back() == "label",
              path.string() + ": header must end with 'label'");
      columns.assign(cells.begin(), cells.end() - 1);
      have_header = true;
      continue;
    }
    if (cells.size() != columns.size() + 1) {
      throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                               ": expected " + std::to_string(columns.size() + 1) +
                               " cells, got " + std::to_string(cells.size()));
    }
    std::vector<double> values(columns.size());
    for (std::size_t i = 0; i < columns.size(); ++i) {
      char* end = nullptr;
      values[i] = std::strtod(cells[i].c_str(), &end);
      if (end == cells[i].c_str()) {
        throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                                 ": malformed number '" + cells[i] + "'");
      }
    }
    rows.push_back(std::move(values));
    labels.push_back(cells.back());
  }
  require(have_header, path.string() + ": missing header row");
  return LabeledDataset::from_rows(std::move(rows), std::move(labels), std::move(columns));
}

// ---------------------------------------------------------------------------
// Per-node profile CSV (color-map data) and curvature CSV.

inline std::string profile_csv(const NodeProfile& profile) {
  std::string out = "node,k,cc,b,k2,k3\n";
  for (std::size_t i = 0; i < profile.degree.size(); ++i) {
    out += std::to_string(i);
    out += ',';
    out += std::to_string(profile.degree[i]);
    out += ',';
    out += detail::format_double(profile.clustering[i]);
    out += ',';
    out += detail::format_double(profile.betweenness[i]);
    out += ',';
    out += std::to_string(profile.hier_degree_2[i]);
    out += ',';
    out += std::to_string(profile.hier_degree_3[i]);
    out += '\n';
  }
  return out;
}

inline std::string curvature_csv(const CurvatureSignal& s) {
  std::string out = "index,curvature\n";
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    out += std::to_string(i);
    out += ',';
    out += detail::format_double(s.values[i]);
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Layout / report serialization.

inline nlohmann::json layout_to_json(const FeatureLayout& layout) {
  return {{"descriptor", to_string(layout.kind)},
          {"mode", to_string(layout.mode)},
          {"thresholds", layout.thresholds}};
}

inline nlohmann::json report_to_json(const AccuracyReport& r) {
  return {{"mean_accuracy", r.mean_accuracy},
          {"std_dev", r.std_dev},
          {"n_folds", r.n_folds},
          {"n_repeats", r.n_repeats},
          {"seed", r.seed},
          {"scaled", r.scaled},
          {"classifier", r.classifier},
          {"classes", r.classes},
          {"confusion", r.confusion},
          {"per_repeat_accuracy", r.per_repeat_accuracy}};
}

/// One line in the style of the published accuracy tables: "84.81 ± 0.51".
inline std::string report_table_line(const AccuracyReport& r) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%-10s %6.2f \xc2\xb1 %.2f", r.classifier.c_str(),
                r.mean_accuracy, r.std_dev);
  return buf;
}

}  // namespace cng
