#include "maxtrace/io.hpp"

#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

namespace maxtrace {

namespace {

bool is_skippable(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::vector<double> parse_numbers(const std::string& line, std::size_t lineno) {
  std::vector<double> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) {
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(tok.c_str(), &end);
    if (end == tok.c_str() || *end != '\0') throw ParseError(lineno, "not a number: '" + tok + "'");
    if (errno == ERANGE || !std::isfinite(v)) throw ParseError(lineno, "value out of range: '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

template <std::size_t N>
Mat<N> to_matrix(const std::vector<double>& v) {
  Mat<N> m;
  for (std::size_t k = 0; k < N * N; ++k) m.a[k] = v[k];
  return m;
}

template <std::size_t N>
void add_correspondence(WahbaProblem<N>& prob, const std::vector<double>& v) {
  Vec<N> p, q;
  for (std::size_t i = 0; i < N; ++i) {
    p[i] = v[i];
    q[i] = v[N + i];
  }
  prob.p.push_back(p);
  prob.q.push_back(q);
  prob.weights.push_back(v[2 * N]);
}

}  // namespace

MatrixList read_matrices(std::istream& in, int dim) {
  if (dim != 0 && dim != 2 && dim != 3) throw std::invalid_argument("read_matrices: dimension must be 2 or 3");
  std::vector<Mat2> m2;
  std::vector<Mat3> m3;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_skippable(line)) continue;
    const auto v = parse_numbers(line, lineno);
    if (dim == 0) {
      if (v.size() == 4) dim = 2;
      else if (v.size() == 9) dim = 3;
      else throw ParseError(lineno, "expected 4 or 9 numbers, got " + std::to_string(v.size()));
    }
    const std::size_t want = dim == 2 ? 4 : 9;
    if (v.size() != want)
      throw ParseError(lineno, "expected " + std::to_string(want) + " numbers, got " + std::to_string(v.size()));
    if (dim == 2) m2.push_back(to_matrix<2>(v));
    else m3.push_back(to_matrix<3>(v));
  }
  if (dim == 2) return m2;
  return m3;
}

template <std::size_t N>
void write_matrix_line(std::ostream& out, const Mat<N>& m) {
  char buf[32];
  for (std::size_t k = 0; k < N * N; ++k) {
    std::snprintf(buf, sizeof buf, "%.17g", m.a[k]);
    if (k) out << ' ';
    out << buf;
  }
  out << '\n';
}

template <std::size_t N>
void write_matrices(std::ostream& out, std::span<const Mat<N>> mats, const std::string& header) {
  if (!header.empty()) {
    std::istringstream hs(header);
    std::string h;
    while (std::getline(hs, h)) out << "# " << h << '\n';
  }
  for (const auto& m : mats) write_matrix_line(out, m);
}

ProblemInput read_problem(std::istream& in) {
  WahbaProblem2 p2;
  WahbaProblem3 p3;
  int dim = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_skippable(line)) continue;
    const auto v = parse_numbers(line, lineno);
    if (dim == 0) {
      if (v.size() == 5) dim = 2;
      else if (v.size() == 7) dim = 3;
      else throw ParseError(lineno, "expected 5 or 7 numbers, got " + std::to_string(v.size()));
    }
    const std::size_t want = dim == 2 ? 5 : 7;
    if (v.size() != want)
      throw ParseError(lineno, "expected " + std::to_string(want) + " numbers, got " + std::to_string(v.size()));
    if (v.back() < 0.0) throw ParseError(lineno, "negative weight");
    if (dim == 2) add_correspondence(p2, v);
    else add_correspondence(p3, v);
  }
  if (dim == 0) throw ParseError(lineno, "no correspondences");
  if (dim == 2) return p2;
  return p3;
}

std::size_t first_data_width(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_skippable(line)) continue;
    return parse_numbers(line, lineno).size();
  }
  return 0;
}

template void write_matrix_line<2>(std::ostream&, const Mat2&);
template void write_matrix_line<3>(std::ostream&, const Mat3&);
template void write_matrices<2>(std::ostream&, std::span<const Mat2>, const std::string&);
template void write_matrices<3>(std::ostream&, std::span<const Mat3>, const std::string&);

}  // namespace maxtrace
