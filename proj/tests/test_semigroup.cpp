#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rell/semigroup.hpp"

using namespace rell;
using oracle::big;
using oracle::small;
using oracle::Vec;

namespace {

IntMat ex_nonnormal() {
  return IntMat::from({{1, 0, 0}, {1, 3, 0}, {1, 0, 3}, {1, 1, 0}, {1, 2, 0},
                       {1, 0, 1}, {1, 0, 2}, {1, 2, 1}, {1, 1, 2}});
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("validation of the nine-generator semigroup") {
  AffineSemigroup s = new_semigroup(ex_nonnormal());
  CHECK(s.pointed());
  CHECK(s.theta() == make_vec({3, 0, 0}));
  CHECK(s.ambient_dim() == 3);
  CHECK_NOTHROW(s.require_pointed());
}

TEST_CASE("semigroup construction errors") {
  CHECK(code_of([] { new_semigroup(IntMat::from({{2, 0}, {0, 2}})); }) ==
        ErrorCode::GroupNotFull);
  CHECK(code_of([] { new_semigroup(IntMat::from({{1, 0}, {0, 0}})); }) ==
        ErrorCode::ZeroGenerator);
  CHECK(code_of([] { new_semigroup(IntMat(2)); }) == ErrorCode::FullDimRequired);
}

TEST_CASE("non-pointed input is accepted and rejected by membership") {
  AffineSemigroup s = new_semigroup(IntMat::from({{1, 0}, {-1, 0}, {0, 1}}));
  CHECK_FALSE(s.pointed());
  CHECK(code_of([&] { s.require_pointed(); }) == ErrorCode::PointedRequired);
  CHECK(code_of([&] { contains(s, make_vec({0, 1})); }) == ErrorCode::PointedRequired);
}

TEST_CASE("standard basis semigroups are valid and pointed") {
  for (std::size_t n = 1; n <= 6; ++n) {
    IntMat m(n);
    for (std::size_t i = 0; i < n; ++i) {
      IntVec e(n, Integer(0));
      e[i] = 1;
      m.add_row(e);
    }
    AffineSemigroup s = new_semigroup(m);
    CHECK(s.pointed());
    IntVec x(n, Integer(2));
    auto d = decompose(s, x);
    REQUIRE(d);
    CHECK(*d == std::vector<Integer>(n, Integer(2)));
  }
}

TEST_CASE("membership in the nine-generator semigroup") {
  AffineSemigroup s = new_semigroup(ex_nonnormal());
  CHECK_FALSE(contains(s, make_vec({1, 1, 1})));
  CHECK(contains(s, make_vec({2, 3, 3})));
  CHECK(contains(s, make_vec({0, 0, 0})));
  CHECK_FALSE(contains(s, make_vec({0, 1, 0})));
  CHECK_FALSE(contains(s, make_vec({1, 4, 0})));
  CHECK(code_of([&] { contains(s, make_vec({1, 1})); }) == ErrorCode::DimensionMismatch);
  auto d = decompose(s, make_vec({2, 3, 3}));
  REQUIRE(d);
  IntVec sum(3, Integer(0));
  for (std::size_t g = 0; g < 9; ++g)
    for (std::size_t i = 0; i < 3; ++i) sum[i] += (*d)[g] * s.generators()[g][i];
  CHECK(sum == make_vec({2, 3, 3}));
}

TEST_CASE("generators and groups on faces of the nine-generator semigroup") {
  AffineSemigroup s = new_semigroup(ex_nonnormal());
  const Cone& c = s.cone();
  Face f4 = face_intersection_of(c, {2});
  CHECK(generators_on_face(s, f4) ==
        IntMat::from({{1, 3, 0}, {1, 0, 3}, {1, 2, 1}, {1, 1, 2}}));
  CHECK(lattice_equal(face_group(s, f4), hnf(IntMat::from({{1, 0, 3}, {0, 1, -1}}))));
  CHECK(lattice_equal(face_group(s, f4), face_hyperplane_lattice(s, f4)));

  Face f24 = face_intersection_of(c, {0, 2});
  CHECK(lattice_equal(face_group(s, f24), hnf(IntMat::from({{1, 0, 3}}))));
  CHECK(lattice_equal(face_group(s, f24), face_hyperplane_lattice(s, f24)));

  CHECK(generators_on_face(s, face_intersection_of(c, {})) == s.generators());
  Face apex = face_intersection_of(c, {0, 1, 2});
  CHECK(generators_on_face(s, apex).size() == 0);
  CHECK(face_group(s, apex).rank() == 0);
}

TEST_CASE("property: contains agrees with breadth-first enumeration") {
  std::mt19937 rng(31);
  int queries = 0, members = 0;
  for (int trial = 0; trial < 40; ++trial) {
    IntMat m = oracle::random_pointed(rng, 5, 3);
    AffineSemigroup s = new_semigroup(m);
    REQUIRE(s.pointed());
    Vec theta = small(s.theta());
    std::vector<Vec> gens;
    for (const auto& g : m) gens.push_back(small(g));
    long max_theta = 0;
    for (const auto& g : gens) max_theta = std::max(max_theta, oracle::dotl(theta, g));
    const long cap = 3 * max_theta;
    auto elements = oracle::semigroup_elements(gens, theta, cap);
    for (const auto& g : m) CHECK(contains(s, g));
    // Every lattice point of the cone in a box, with theta <= cap.
    for (long x = 0; x <= 9; ++x)
      for (long y = -9; y <= 9; ++y)
        for (long z = -9; z <= 9; ++z) {
          IntVec p = big({x, y, z});
          if (!s.cone().contains(p) || oracle::dotl(theta, {x, y, z}) > cap) continue;
          const bool expect = elements.count({x, y, z}) == 1;
          CHECK(contains(s, p) == expect);
          ++queries;
          members += expect;
        }
  }
  CHECK(queries > 1000);
  CHECK(members > 100);
}

TEST_CASE("property: face groups sit inside the hyperplane lattice") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    AffineSemigroup s = new_semigroup(oracle::random_pointed(rng, 6, 3));
    for (const auto& f : faces_up_to_codim(s.cone(), 3)) {
      LatticeBasis fg = face_group(s, f);
      LatticeBasis hyp = face_hyperplane_lattice(s, f);
      for (const auto& r : fg.rows()) CHECK(lattice_member(r, hyp));
      CHECK(hyp.rank() == f.dim);
    }
  }
}
