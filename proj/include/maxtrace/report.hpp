#pragma once

#include <optional>

#include "maxtrace/matrix.hpp"

namespace maxtrace {

enum class Strategy { planar_closed_form, newton_then_spectral, svd_kabsch_umeyama };

const char* to_string(Strategy s);

template <std::size_t N>
struct SolveReport {
  Mat<N> rotation = Mat<N>::identity();
  double achieved_trace = 0.0;    ///< trace(rotation * M)
  std::optional<double> residual;  ///< weighted squared error, for point-set problems
  Strategy strategy = Strategy::planar_closed_form;
  int newton_iterations = 0;
  bool fell_back = false;  ///< Newton failed and the SVD path produced the result
};

}  // namespace maxtrace
