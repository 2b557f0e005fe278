#pragma once

// Plain-text file formats.
//
// Matrix files: one matrix per line, 4 (2x2) or 9 (3x3) whitespace-separated
// decimal numbers in row-major order. Lines starting with '#' and blank lines
// are ignored. Writers use 17 significant digits so values round-trip exactly.
//
// Problem files: one correspondence per line, "px py qx qy w" (2D) or
// "px py pz qx qy qz w" (3D), same comment rules.

#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "maxtrace/matrix.hpp"
#include "maxtrace/wahba.hpp"

namespace maxtrace {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

using MatrixList = std::variant<std::vector<Mat2>, std::vector<Mat3>>;
using ProblemInput = std::variant<WahbaProblem2, WahbaProblem3>;

/// Reads a matrix file. The dimension is taken from the first data line
/// unless forced with dim (2 or 3). Throws ParseError.
MatrixList read_matrices(std::istream& in, int dim = 0);

template <std::size_t N>
void write_matrices(std::ostream& out, std::span<const Mat<N>> mats, const std::string& header = {});

template <std::size_t N>
void write_matrix_line(std::ostream& out, const Mat<N>& m);

/// Reads a point-set problem file. Throws ParseError.
ProblemInput read_problem(std::istream& in);

/// Number of numeric fields on the first data line, or 0 if none.
std::size_t first_data_width(std::istream& in);

}  // namespace maxtrace
