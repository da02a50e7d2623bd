#include <doctest.h>

#include "qtensor/linalg.hpp"
#include "qtensor/representation.hpp"
#include "testutil.hpp"

using namespace qtensor;
using testutil::d_quiver;
using testutil::path_quiver;

namespace {

Root root_by_id(const std::vector<Root>& roots, const std::string& id) {
  for (const Root& r : roots)
    if (root_id(r.vec) == id) return r;
  REQUIRE(false);
  return roots.front();
}

}  // namespace

TEST_CASE("fraction-free rank") {
  IntMatrix m(3, 3);
  m << 1, 2, 3, 4, 5, 6, 7, 8, 9;
  CHECK(fraction_free_rank(m) == 2);
  CHECK(fraction_free_rank(IntMatrix(IntMatrix::Zero(4, 2))) == 0);

  RatMatrix r(2, 3);
  r << Rational(1, 2), Rational(1, 3), Rational(0), Rational(3, 2), Rational(1), Rational(5);
  CHECK(fraction_free_rank(r) == 2);
  r.row(1) = 3 * r.row(0);
  CHECK(fraction_free_rank(r) == 1);
}

TEST_CASE("thin representatives carry identities on the support") {
  const Quiver q = path_quiver(3);
  const auto shape = detect_shape(q);
  const auto roots = positive_roots(q, shape);

  const Representation m = indecomposable_rep(q, shape, root_by_id(roots, "1,1,0"));
  CHECK(m.dims == DimVector(Eigen::Vector3i{1, 1, 0}));
  CHECK(m.maps[0].rows() == 1);
  CHECK(m.maps[0](0, 0) == 1);
  CHECK(m.maps[1].size() == 0);

  const Representation s2 = indecomposable_rep(q, shape, root_by_id(roots, "0,1,0"));
  CHECK(s2.maps[0].size() == 0);
  CHECK(s2.maps[1].size() == 0);
}

TEST_CASE("twin representative on the all-out D(4) star") {
  const Quiver q = d_quiver(4);
  const auto shape = detect_shape(q);
  const auto roots = positive_roots(q, shape);
  const Representation m = indecomposable_rep(q, shape, root_by_id(roots, "1,1,2,1"));

  // A = (0 1), B = (1 0), C = (1 1) when all arrows leave c_1.
  const int alpha = q.arrow_index("alpha"), beta = q.arrow_index("beta"),
            gamma = q.arrow_index("gamma1");
  REQUIRE(m.maps[alpha].rows() == 1);
  CHECK(m.maps[alpha](0, 0) == 0);
  CHECK(m.maps[alpha](0, 1) == 1);
  CHECK(m.maps[beta](0, 0) == 1);
  CHECK(m.maps[beta](0, 1) == 0);
  CHECK(m.maps[gamma](0, 0) == 1);
  CHECK(m.maps[gamma](0, 1) == 1);
}

TEST_CASE("twin representatives are well formed on every D(5) orientation") {
  for (unsigned mask = 0; mask < 16; ++mask) {
    const Quiver q = d_quiver(5, mask);
    const auto shape = detect_shape(q);
    REQUIRE(shape.family == DynkinFamily::D);
    for (const Root& r : positive_roots(q, shape)) {
      const Representation m = indecomposable_rep(q, shape, r);
      m.validate(q);
      CHECK(m.dims == r.vec);
      // End(M(d)) is one-dimensional for every representative.
      CHECK(hom_dimension(q, m, m) == 1);
    }
  }
}

TEST_CASE("direct sum stacks blocks") {
  const Quiver q = path_quiver(3);
  const auto shape = detect_shape(q);
  const auto roots = positive_roots(q, shape);
  const Representation m110 = indecomposable_rep(q, shape, root_by_id(roots, "1,1,0"));
  const Representation m011 = indecomposable_rep(q, shape, root_by_id(roots, "0,1,1"));

  const Representation s = direct_sum(q, m110, m011);
  CHECK(s.dims == DimVector(Eigen::Vector3i{1, 2, 1}));
  CHECK(s.maps[0].rows() == 2);
  CHECK(s.maps[0](0, 0) == 1);
  CHECK(s.maps[0](1, 0) == 0);
  CHECK(s.maps[1](0, 0) == 0);
  CHECK(s.maps[1](0, 1) == 1);

  const Representation z = zero_representation(q);
  const Representation mz = direct_sum(q, m110, z);
  CHECK(mz.dims == m110.dims);
  CHECK(mz.maps[0] == m110.maps[0]);
}

TEST_CASE("pointwise tensor dims multiply entrywise") {
  const Quiver q = d_quiver(4);
  const auto shape = detect_shape(q);
  const auto roots = positive_roots(q, shape);
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Root& r1 = roots[static_cast<std::size_t>(rng.uniform(0, 11))];
    const Root& r2 = roots[static_cast<std::size_t>(rng.uniform(0, 11))];
    const Representation t = pointwise_tensor(q, indecomposable_rep(q, shape, r1),
                                              indecomposable_rep(q, shape, r2));
    CHECK(t.dims == pointwise_product(r1.vec, r2.vec));
  }

  // Tensor against a simple at the doubled vertex: dims (0,0,2,0), zero maps.
  const Representation twin = indecomposable_rep(q, shape, root_by_id(roots, "1,1,2,1"));
  const Representation sc1 = indecomposable_rep(q, shape, root_by_id(roots, "0,0,1,0"));
  const Representation t = pointwise_tensor(q, twin, sc1);
  CHECK(t.dims == DimVector(Eigen::Vector4i{0, 0, 2, 0}));
  for (const auto& map : t.maps) CHECK(map.size() == 0);
}

TEST_CASE("hom dimensions on the A(2) arrow") {
  const Quiver q = path_quiver(2);  // v1 -> v2
  const auto shape = detect_shape(q);
  const auto roots = positive_roots(q, shape);
  const Representation s1 = indecomposable_rep(q, shape, root_by_id(roots, "1,0"));
  const Representation s2 = indecomposable_rep(q, shape, root_by_id(roots, "0,1"));
  const Representation m11 = indecomposable_rep(q, shape, root_by_id(roots, "1,1"));

  CHECK(hom_dimension(q, s2, m11) == 1);
  CHECK(hom_dimension(q, m11, s2) == 0);
  CHECK(hom_dimension(q, s1, m11) == 0);
  CHECK(hom_dimension(q, m11, s1) == 1);
  CHECK(hom_dimension(q, s1, s2) == 0);
  CHECK(hom_dimension(q, s2, s1) == 0);
  CHECK(hom_dimension(q, s1, s1) == 1);
}

TEST_CASE("hom dimension is a base-change invariant") {
  const Quiver q = d_quiver(4, 0b011);
  const auto shape = detect_shape(q);
  const auto roots = positive_roots(q, shape);
  Rng rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const Root& r1 = roots[static_cast<std::size_t>(rng.uniform(0, 11))];
    const Root& r2 = roots[static_cast<std::size_t>(rng.uniform(0, 11))];
    Representation m = indecomposable_rep(q, shape, r1);
    Representation n = indecomposable_rep(q, shape, r2);
    const int before = hom_dimension(q, m, n);
    m = testutil::scramble(q, m, rng);
    n = testutil::scramble(q, n, rng);
    CHECK(hom_dimension(q, m, n) == before);
  }
}

TEST_CASE("representation validation rejects bad shapes") {
  const Quiver q = path_quiver(2);
  Representation m;
  m.dims = DimVector(Eigen::Vector2i{1, 1});
  m.maps = {RatMatrix(2, 1)};
  CHECK_THROWS_AS(m.validate(q), DimensionMismatchError);
  m.maps.clear();
  CHECK_THROWS_AS(m.validate(q), DimensionMismatchError);
}
