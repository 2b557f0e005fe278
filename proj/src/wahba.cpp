#include "maxtrace/wahba.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "maxtrace/planar.hpp"

namespace maxtrace {

namespace {

template <std::size_t N>
bool finite(const Vec<N>& x) {
  for (double e : x.v)
    if (!std::isfinite(e)) return false;
  return true;
}

}  // namespace

template <std::size_t N>
void WahbaProblem<N>::validate() const {
  if (p.size() != q.size() || p.size() != weights.size())
    throw std::invalid_argument("WahbaProblem: point and weight counts differ");
  if (p.empty()) throw std::invalid_argument("WahbaProblem: no points");
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!(std::isfinite(weights[i]) && weights[i] >= 0.0))
      throw std::invalid_argument("WahbaProblem: weight " + std::to_string(i) + " is negative or not finite");
    if (!finite(p[i]) || !finite(q[i]))
      throw std::invalid_argument("WahbaProblem: point " + std::to_string(i) + " is not finite");
  }
}

template <std::size_t N>
Mat<N> profile_matrix(const WahbaProblem<N>& prob) {
  prob.validate();
  Mat<N> m;
  for (std::size_t i = 0; i < prob.p.size(); ++i) m = m + prob.weights[i] * outer(prob.q[i], prob.p[i]);
  return m;
}

template <std::size_t N>
double residual(const WahbaProblem<N>& prob, const Mat<N>& u) {
  prob.validate();
  if (!is_rotation(u)) throw std::invalid_argument("residual: not a rotation matrix");
  double sum = 0.0;
  for (std::size_t i = 0; i < prob.p.size(); ++i) {
    const Vec<N> d = u * prob.q[i] - prob.p[i];
    sum += prob.weights[i] * dot(d, d);
  }
  return sum;
}

template <std::size_t N>
SolveReport<N> solve(const WahbaProblem<N>& prob, const NewtonConfig& cfg, bool svd_only) {
  const Mat<N> m = profile_matrix(prob);
  SolveReport<N> rep;
  if constexpr (N == 2) {
    (void)cfg;
    (void)svd_only;
    rep.rotation = solve_planar(m);
    rep.strategy = Strategy::planar_closed_form;
    rep.achieved_trace = trace(rep.rotation * m);
  } else {
    rep = solve_spatial(m, cfg, svd_only);
  }
  rep.residual = residual(prob, rep.rotation);
  return rep;
}

template struct WahbaProblem<2>;
template struct WahbaProblem<3>;
template Mat2 profile_matrix<2>(const WahbaProblem2&);
template Mat3 profile_matrix<3>(const WahbaProblem3&);
template double residual<2>(const WahbaProblem2&, const Mat2&);
template double residual<3>(const WahbaProblem3&, const Mat3&);
template SolveReport<2> solve<2>(const WahbaProblem2&, const NewtonConfig&, bool);
template SolveReport<3> solve<3>(const WahbaProblem3&, const NewtonConfig&, bool);

}  // namespace maxtrace
