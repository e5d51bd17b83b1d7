#pragma once

// Matrices whose entries are elements of a coalgebra H.

#include <cstddef>
#include <vector>

#include "hopflink/linalg.hpp"

namespace hopf {

struct HMatrix {
  std::size_t rows = 0, cols = 0;
  std::size_t dim = 0;       // dimension of H
  std::vector<Vec> entries;  // row-major, each entry of length dim

  static HMatrix zero(std::size_t rows, std::size_t cols, std::size_t dim) {
    return HMatrix{rows, cols, dim, std::vector<Vec>(rows * cols, Vec(dim))};
  }
  Vec& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
  const Vec& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
  friend bool operator==(const HMatrix& a, const HMatrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.entries == b.entries;
  }
};

/// A square HMatrix that satisfies Delta(G) = G (x)~ G and counit(G) = I.
struct MultMatrix {
  HMatrix mat;
  bool basic = false;
  std::size_t size() const { return mat.rows; }
};

}  // namespace hopf
