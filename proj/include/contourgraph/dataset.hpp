#pragma once

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "contourgraph/common.hpp"
#include "contourgraph/contour.hpp"
#include "contourgraph/image.hpp"
#include "contourgraph/io.hpp"

namespace cng {

/// Loads every contour CSV and PBM/PGM silhouette under dir, in lexicographic
/// path order. The class label comes from the immediate subdirectory name
/// when the file sits in one, otherwise from the CSV header. Silhouettes are
/// traced to their outer boundary. A malformed file aborts the load unless
/// skip_bad is set, in which case it is reported to stderr and skipped.
inline std::vector<Contour> load_dataset(const std::filesystem::path& dir,
                                         bool skip_bad = false) {
  namespace fs = std::filesystem;
  require(fs::is_directory(dir), "dataset: not a directory: " + dir.string());

  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    std::string ext = entry.path().extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (ext == ".csv" || ext == ".pbm" || ext == ".pgm") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
    return a.generic_string() < b.generic_string();
  });
  if (files.empty()) {
    throw std::runtime_error("dataset: no contour CSV or PBM/PGM files under " + dir.string());
  }

  std::vector<Contour> contours;
  for (const auto& path : files) {
    try {
      Contour c;
      if (path.extension() == ".csv") {
        c = read_contour_csv(path);
      } else {
        c = trace_boundary(read_pnm(path));
      }
      const fs::path parent = path.parent_path();
      if (parent != dir) c.label = parent.filename().string();
      c.id = fs::relative(path, dir).generic_string();
      contours.push_back(std::move(c));
    } catch (const std::exception& e) {
      if (!skip_bad) {
        throw std::runtime_error("dataset: failed to load " + path.string() + ": " + e.what());
      }
      std::cerr << "warning: skipping " << path.string() << ": " << e.what() << "\n";
    }
  }
  require(!contours.empty(), "dataset: every file under " + dir.string() + " failed to load");
  return contours;
}

}  // namespace cng
