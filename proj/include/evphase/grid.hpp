#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace evphase {

/// Row-major 2D grid with square pixels of `pitch` meters.
template <typename T>
struct Grid2D {
  int rows = 0;
  int cols = 0;
  double pitch = 0.0;
  std::vector<T> data;

  Grid2D() = default;
  Grid2D(int rows_, int cols_, double pitch_, T fill = T{})
      : rows(rows_),
        cols(cols_),
        pitch(pitch_),
        data(static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_), fill) {
    if (rows_ <= 0 || cols_ <= 0) throw std::invalid_argument("Grid2D: non-positive shape");
    if (pitch_ <= 0.0) throw std::invalid_argument("Grid2D: non-positive pitch");
  }

  T& at(int y, int x) { return data[static_cast<std::size_t>(y) * cols + x]; }
  const T& at(int y, int x) const { return data[static_cast<std::size_t>(y) * cols + x]; }

  std::size_t size() const { return data.size(); }

  bool same_shape(const Grid2D& other) const {
    return rows == other.rows && cols == other.cols;
  }

  /// Physical x coordinate of a pixel center, origin at the grid center.
  double x_of(int col) const { return (col - 0.5 * (cols - 1)) * pitch; }
  double y_of(int row) const { return (row - 0.5 * (rows - 1)) * pitch; }
};

using RealGrid = Grid2D<double>;
using ComplexGrid = Grid2D<std::complex<double>>;

/// Phase in radians.
using PhaseMap = RealGrid;
/// Intensity in linear arbitrary units (non-negative).
using IntensityMap = RealGrid;

/// Pixel mask; nonzero marks pixels inside the region of interest.
using Mask = std::vector<std::uint8_t>;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input-format error; carries the 1-based line number when known.
struct ParseError : std::runtime_error {
  int line = 0;
  ParseError(const std::string& what, int line_ = 0)
      : std::runtime_error(what), line(line_) {}
};

}  // namespace evphase
