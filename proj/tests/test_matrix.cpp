#include "doctest.h"
#include "support.hpp"

#include "maxtrace/matrix.hpp"

using namespace maxtrace;
using namespace maxtrace::testing;

namespace {
const Mat3 kM0{{-2, -1, 0}, {-1, -2, -1}, {0, 1, 2}};
const Mat3 kUM0{{2, 1, 0}, {1, 2, 1}, {0, 1, 2}};
}  // namespace

TEST_CASE("trace") {
  CHECK(trace(Mat3::identity()) == 3.0);
  CHECK(trace(kM0) == -2.0);
  CHECK(trace(Mat3{}) == 0.0);
}

TEST_CASE("is_rotation") {
  CHECK(is_rotation(Mat3::identity()));
  CHECK(is_rotation(Mat3::diag(Vec3{{-1, -1, 1}})));
  CHECK_FALSE(is_rotation(Mat3::diag(Vec3{{1, 1, -1}})));
  CHECK_FALSE(is_rotation(2.0 * Mat3::identity()));
  CHECK(is_rotation(rotation2(0.7)));
}

TEST_CASE("is_symmetric") {
  CHECK(is_symmetric(Mat2::identity()));
  CHECK_FALSE(is_symmetric(Mat2{{0, 1}, {-1, 0}}));
  CHECK(is_symmetric(kUM0));
  CHECK_FALSE(is_symmetric(kM0));
  CHECK(symmetry_defect(kM0) == 2.0);
}

TEST_CASE("cross, det and inverse") {
  const Vec3 z = cross(Vec3{{1, 0, 0}}, Vec3{{0, 1, 0}});
  CHECK(z == Vec3{{0, 0, 1}});
  CHECK(det(Mat3::diag(Vec3{{2, 3, 4}})) == 24.0);
  // (kUM0 - 2I) / sqrt(2/3) is singular
  const Mat3 b = (1.0 / std::sqrt(2.0 / 3.0)) * (kUM0 - 2.0 * Mat3::identity());
  CHECK(std::abs(det(b)) < 1e-14);
  const Mat3 inv = inverse(kUM0);
  CHECK(max_abs(inv * kUM0 - Mat3::identity()) < 1e-14);
  CHECK_THROWS_AS(inverse(Mat3{}), std::domain_error);
  CHECK_THROWS_AS(inverse(Mat2{}), std::domain_error);
}

TEST_CASE("construction helpers") {
  CHECK_THROWS_AS((Mat2{{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS((Mat2{{1, 2}, {3}}), std::invalid_argument);
  const Mat3 m = Mat3::from_columns({Vec3{{1, 2, 3}}, Vec3{{4, 5, 6}}, Vec3{{7, 8, 9}}});
  CHECK(m(1, 0) == 2.0);
  CHECK(m.column(2) == Vec3{{7, 8, 9}});
  CHECK(m.row(0) == Vec3{{1, 4, 7}});
  CHECK(transpose(m)(0, 1) == 2.0);
  CHECK(outer(Vec3{{1, 0, 0}}, Vec3{{0, 1, 0}})(0, 1) == 1.0);
  CHECK_THROWS_AS(normalized(Vec3{}), std::domain_error);
  CHECK(symmetric_part(kM0) == symmetric_part(transpose(kM0)));
}

TEST_CASE("rotation products and similarity invariance") {
  Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    const Mat3 u = random_rotation3(rng), v = random_rotation3(rng);
    CHECK(is_rotation(u * v, 1e-12));
    const Mat3 a = random_matrix<3>(rng);
    const double t = trace(a);
    CHECK(std::abs(trace(u * a * transpose(u)) - t) <= 1e-12 * (1 + std::abs(t)) * 10);
  }
}

TEST_CASE("trace(AB) = trace(BA)") {
  Rng rng(12);
  for (int i = 0; i < 1000; ++i) {
    const Mat3 a = random_matrix<3>(rng), b = random_matrix<3>(rng);
    CHECK(std::abs(trace(a * b) - trace(b * a)) <= 1e-12 * (1 + std::abs(trace(a * b))) * 10);
    const Mat2 c = random_matrix<2>(rng), d = random_matrix<2>(rng);
    CHECK(std::abs(trace(c * d) - trace(d * c)) <= 1e-14);
  }
}

TEST_CASE("cross product is orthogonal to its factors") {
  Rng rng(13);
  for (int i = 0; i < 1000; ++i) {
    const Vec3 a = random_vec3(rng), b = random_vec3(rng);
    const Vec3 c = cross(a, b);
    const double scale = norm(a) * norm(b) * (norm(a) + norm(b));
    CHECK(std::abs(dot(c, a)) <= 1e-12 * scale);
    CHECK(std::abs(dot(c, b)) <= 1e-12 * scale);
  }
}
