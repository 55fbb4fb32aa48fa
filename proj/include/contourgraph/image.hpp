#pragma once

#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "contourgraph/common.hpp"
#include "contourgraph/contour.hpp"

namespace cng {

/// Binary raster, row-major. Nonzero = foreground.
struct BinaryImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;

  bool foreground(int x, int y) const {
    if (x < 0 || y < 0 || x >= width || y >= height) return false;
    return data[static_cast<std::size_t>(y) * width + x] != 0;
  }
  std::uint8_t& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
};

namespace detail {

inline int pnm_next_token(std::istream& in) {
  // Skips whitespace and '#' comments, then reads one unsigned integer.
  int ch = in.get();
  for (;;) {
    while (ch != EOF && std::isspace(ch)) ch = in.get();
    if (ch == '#') {
      while (ch != EOF && ch != '\n') ch = in.get();
      continue;
    }
    break;
  }
  require(ch != EOF && std::isdigit(ch), "pnm: malformed header");
  int value = 0;
  while (ch != EOF && std::isdigit(ch)) {
    value = value * 10 + (ch - '0');
    ch = in.get();
  }
  return value;
}

}  // namespace detail

/// Reads PBM (P1/P4) or PGM (P2/P5). Foreground is any nonzero sample; for
/// PBM the convention is 1 = black = foreground.
inline BinaryImage read_pnm(std::istream& in) {
  char p = 0, kind = 0;
  in.get(p);
  in.get(kind);
  require(p == 'P' && (kind == '1' || kind == '2' || kind == '4' || kind == '5'),
          "pnm: unsupported magic (want P1, P2, P4 or P5)");
  BinaryImage img;
  img.width = detail::pnm_next_token(in);
  img.height = detail::pnm_next_token(in);
  require(img.width > 0 && img.height > 0, "pnm: empty image");
  int maxval = 1;
  if (kind == '2' || kind == '5') {
    maxval = detail::pnm_next_token(in);
    require(maxval > 0 && maxval < 65536, "pnm: bad maxval");
  }
  img.data.assign(static_cast<std::size_t>(img.width) * img.height, 0);

  if (kind == '1') {
    for (auto& px : img.data) px = static_cast<std::uint8_t>(detail::pnm_next_token(in));
  } else if (kind == '2') {
    for (auto& px : img.data) px = detail::pnm_next_token(in) != 0 ? 1 : 0;
  } else if (kind == '4') {
    // Binary bitmap: rows padded to whole bytes, MSB first, 1 = foreground.
    const int row_bytes = (img.width + 7) / 8;
    std::vector<char> row(static_cast<std::size_t>(row_bytes));
    for (int y = 0; y < img.height; ++y) {
      in.read(row.data(), row_bytes);
      require(in.gcount() == row_bytes, "pnm: truncated P4 data");
      for (int x = 0; x < img.width; ++x) {
        const std::uint8_t byte = static_cast<std::uint8_t>(row[x / 8]);
        img.at(x, y) = (byte >> (7 - x % 8)) & 1;
      }
    }
  } else {  // P5
    const int bytes_per = maxval > 255 ? 2 : 1;
    std::vector<char> buf(img.data.size() * bytes_per);
    in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
    require(static_cast<std::size_t>(in.gcount()) == buf.size(), "pnm: truncated P5 data");
    for (std::size_t i = 0; i < img.data.size(); ++i) {
      const int v = bytes_per == 1
                        ? static_cast<std::uint8_t>(buf[i])
                        : (static_cast<std::uint8_t>(buf[2 * i]) << 8) |
                              static_cast<std::uint8_t>(buf[2 * i + 1]);
      img.data[i] = v != 0 ? 1 : 0;
    }
  }
  return img;
}

inline BinaryImage read_pnm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("pnm: cannot open " + path.string());
  return read_pnm(in);
}

/// Moore boundary tracing of the single 4-connected foreground region.
/// Returns the outer boundary clockwise (image coordinates, y down), starting
/// from the topmost-then-leftmost boundary pixel. Rejects images with no
/// foreground or more than one component.
inline Contour trace_boundary(const BinaryImage& img) {
  const int w = img.width, h = img.height;

  // Locate the start pixel and count the foreground.
  int sx = -1, sy = -1;
  std::size_t fg_count = 0;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (img.foreground(x, y)) {
        ++fg_count;
        if (sx < 0) { sx = x; sy = y; }
      }
    }
  }
  require(fg_count > 0, "trace: image has no foreground pixels");

  // Single 4-connected component check.
  {
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(w) * h, 0);
    std::vector<std::pair<int, int>> stack{{sx, sy}};
    seen[static_cast<std::size_t>(sy) * w + sx] = 1;
    std::size_t reached = 0;
    while (!stack.empty()) {
      auto [x, y] = stack.back();
      stack.pop_back();
      ++reached;
      const int nx[4] = {x + 1, x - 1, x, x};
      const int ny[4] = {y, y, y + 1, y - 1};
      for (int k = 0; k < 4; ++k) {
        if (img.foreground(nx[k], ny[k])) {
          auto& s = seen[static_cast<std::size_t>(ny[k]) * w + nx[k]];
          if (!s) { s = 1; stack.emplace_back(nx[k], ny[k]); }
        }
      }
    }
    require(reached == fg_count,
            "trace: expected exactly one 4-connected region, found several (" +
                std::to_string(reached) + " of " + std::to_string(fg_count) +
                " pixels reachable)");
  }

  // Boundary pixel count gate (pixels with a background 4-neighbor).
  std::size_t boundary_count = 0;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (img.foreground(x, y) &&
          (!img.foreground(x - 1, y) || !img.foreground(x + 1, y) ||
           !img.foreground(x, y - 1) || !img.foreground(x, y + 1))) {
        ++boundary_count;
      }
    }
  }
  require(boundary_count >= 3, "trace: boundary has fewer than 3 pixels");

  // Moore neighborhood in clockwise order (y grows downward):
  // W, NW, N, NE, E, SE, S, SW.
  static constexpr int kDx[8] = {-1, -1, 0, 1, 1, 1, 0, -1};
  static constexpr int kDy[8] = {0, -1, -1, -1, 0, 1, 1, 1};

  Contour out;
  int cx = sx, cy = sy;
  int back = 0;  // index of the backtrack neighbor; W of the start is background
  const int start_back = back;
  const std::size_t step_limit = 4 * fg_count * 8 + 16;
  std::size_t steps = 0;
  for (;;) {
    out.points.push_back({static_cast<double>(cx), static_cast<double>(cy)});
    int dir = back;
    int found = -1;
    for (int k = 0; k < 8; ++k) {
      dir = (dir + 1) % 8;
      if (img.foreground(cx + kDx[dir], cy + kDy[dir])) { found = dir; break; }
    }
    if (found < 0) break;  // isolated pixel; rejected below by the length gate
    cx += kDx[found];
    cy += kDy[found];
    // New backtrack: the neighbor checked just before the hit, seen from the
    // pixel we moved to.
    const int prev = (found + 7) % 8;
    const int bx = (cx - kDx[found]) + kDx[prev];
    const int by = (cy - kDy[found]) + kDy[prev];
    back = 0;
    for (int k = 0; k < 8; ++k) {
      if (cx + kDx[k] == bx && cy + kDy[k] == by) { back = k; break; }
    }
    if (cx == sx && cy == sy && back == start_back) break;  // Jacob's criterion
    require(++steps < step_limit, "trace: tracing failed to close");
  }

  require(out.size() >= 3, "trace: contour shorter than 3 points");
  validate_contour(out);
  return out;
}

}  // namespace cng
