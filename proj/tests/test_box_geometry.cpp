#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "interscal/box_geometry.hpp"

using namespace interscal;

namespace {

Box point_box(std::initializer_list<double> coords) {
  std::vector<Interval> iv;
  for (double c : coords) iv.emplace_back(c, c);
  return Box(std::move(iv));
}

double witness_distance(const DistanceWitness& w) {
  double s = 0.0;
  for (std::size_t k = 0; k < w.point_in_a.size(); ++k) {
    const double d = w.point_in_a[k] - w.point_in_b[k];
    s += d * d;
  }
  return std::sqrt(s);
}

bool witness_inside(const std::vector<double>& p, const Box& b) {
  for (std::size_t k = 0; k < b.dim(); ++k) {
    if (!b[k].contains(p[k])) return false;
  }
  return true;
}

Box random_box(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> center(-10.0, 10.0);
  std::uniform_real_distribution<double> half(0.0, 3.0);
  std::vector<Interval> iv;
  for (std::size_t k = 0; k < n; ++k) {
    const double c = center(rng);
    const double h = half(rng);
    iv.emplace_back(c - h, c + h);
  }
  return Box(std::move(iv));
}

}  // namespace

TEST_CASE("point boxes reduce to the euclidean distance") {
  const Box a = point_box({0, 0});
  const Box b = point_box({3, 4});
  CHECK(min_box_distance(a, b).value == Catch::Approx(5.0).margin(1e-12));
  CHECK(max_box_distance(a, b).value == Catch::Approx(5.0).margin(1e-12));
  CHECK(mean_box_distance(a, b) == Catch::Approx(5.0).margin(1e-12));
}

TEST_CASE("disjoint along one axis, overlapping on the other") {
  const Box a({Interval(0, 1), Interval(0, 1)});
  const Box b({Interval(3, 5), Interval(0, 1)});
  CHECK(min_box_distance(a, b).value == Catch::Approx(2.0).margin(1e-12));
  CHECK(max_box_distance(a, b).value ==
        Catch::Approx(std::sqrt(26.0)).margin(1e-12));
  CHECK(mean_box_distance(a, b) ==
        Catch::Approx((2.0 + std::sqrt(26.0)) / 2.0).margin(1e-12));
}

TEST_CASE("diameter of a square box") {
  const Box b({Interval(0, 2), Interval(0, 2)});
  CHECK(box_diameter(b) == Catch::Approx(2.0 * std::sqrt(2.0)).margin(1e-12));
  CHECK(min_box_distance(b, b).value == 0.0);
}

TEST_CASE("intersecting boxes have zero minimum distance") {
  const Box a({Interval(0, 2), Interval(0, 2)});
  const Box b({Interval(1, 3), Interval(-1, 1)});
  CHECK(min_box_distance(a, b).value == 0.0);
}

TEST_CASE("dimension mismatch is rejected") {
  const Box a({Interval(0, 1)});
  const Box b({Interval(0, 1), Interval(0, 1)});
  CHECK_THROWS_AS(min_box_distance(a, b), DimensionMismatch);
  CHECK_THROWS_AS(max_box_distance(a, b), DimensionMismatch);
  CHECK_THROWS_AS(mean_box_distance(a, b), DimensionMismatch);
}

TEST_CASE("witness points realize the reported distances") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const Box a = random_box(rng, n);
    const Box b = random_box(rng, n);
    for (const DistanceWitness& w :
         {min_box_distance(a, b), max_box_distance(a, b)}) {
      CHECK(witness_inside(w.point_in_a, a));
      CHECK(witness_inside(w.point_in_b, b));
      CHECK(std::abs(witness_distance(w) - w.value) <= 1e-12);
    }
  }
}

TEST_CASE("min <= mean <= max and symmetry under swap") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const Box a = random_box(rng, n);
    const Box b = random_box(rng, n);
    const double lo = min_box_distance(a, b).value;
    const double mid = mean_box_distance(a, b);
    const double hi = max_box_distance(a, b).value;
    CHECK(0.0 <= lo);
    CHECK(lo <= mid);
    CHECK(mid <= hi);
    CHECK(min_box_distance(b, a).value == lo);
    CHECK(max_box_distance(b, a).value == hi);
  }
}

TEST_CASE("maximum distance equals the corner brute force") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const Box a = random_box(rng, n);
    const Box b = random_box(rng, n);
    double best = 0.0;
    for (std::size_t ca = 0; ca < (std::size_t{1} << n); ++ca) {
      for (std::size_t cb = 0; cb < (std::size_t{1} << n); ++cb) {
        double s = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double xa = (ca >> k) & 1u ? a[k].hi() : a[k].lo();
          const double xb = (cb >> k) & 1u ? b[k].hi() : b[k].lo();
          s += (xa - xb) * (xa - xb);
        }
        best = std::max(best, std::sqrt(s));
      }
    }
    CHECK(std::abs(max_box_distance(a, b).value - best) <= 1e-12);
  }
}

TEST_CASE("minimum distance lower-bounds sampled point pairs") {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const Box a = random_box(rng, n);
    const Box b = random_box(rng, n);
    const double lo = min_box_distance(a, b).value;
    for (int sample = 0; sample < 100; ++sample) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        const double xa = a[k].lo() + u(rng) * a[k].width();
        const double xb = b[k].lo() + u(rng) * b[k].width();
        s += (xa - xb) * (xa - xb);
      }
      CHECK(lo <= std::sqrt(s) + 1e-12);
    }
  }
}

TEST_CASE("translation leaves distances unchanged") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> shift(-50.0, 50.0);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 3;
    const Box a = random_box(rng, n);
    const Box b = random_box(rng, n);
    std::vector<Interval> ta, tb;
    std::vector<double> t(n);
    for (std::size_t k = 0; k < n; ++k) t[k] = shift(rng);
    for (std::size_t k = 0; k < n; ++k) {
      ta.emplace_back(a[k].lo() + t[k], a[k].hi() + t[k]);
      tb.emplace_back(b[k].lo() + t[k], b[k].hi() + t[k]);
    }
    const Box a2(std::move(ta));
    const Box b2(std::move(tb));
    CHECK(std::abs(min_box_distance(a, b).value -
                   min_box_distance(a2, b2).value) <= 1e-12);
    CHECK(std::abs(max_box_distance(a, b).value -
                   max_box_distance(a2, b2).value) <= 1e-12);
  }
}

TEST_CASE("single-object distance matrix carries the diameter") {
  const IntervalTable t({Box({Interval(0, 1), Interval(0, 1)})}, {});
  const IntervalDissimMatrix d = interval_distance_matrix(t);
  CHECK(d.size() == 1);
  CHECK(d.self_mode() == SelfMode::FeatureDerived);
  CHECK(d.entry(0, 0).lo() == 0.0);
  CHECK(d.entry(0, 0).hi() == Catch::Approx(std::sqrt(2.0)).margin(1e-12));
}

TEST_CASE("point table gives the ordinary distance matrix") {
  const IntervalTable t(
      {point_box({0, 0}), point_box({3, 4}), point_box({0, 8})}, {});
  const IntervalDissimMatrix d = interval_distance_matrix(t);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(d.entry(i, j).degenerate());
    }
  }
  CHECK(d.entry(0, 1).lo() == Catch::Approx(5.0).margin(1e-12));
  CHECK(d.entry(1, 2).lo() == Catch::Approx(5.0).margin(1e-12));
  CHECK(d.entry(0, 2).lo() == Catch::Approx(8.0).margin(1e-12));
}

TEST_CASE("distance matrix of random boxes is symmetric and valid") {
  std::mt19937_64 rng(29);
  std::vector<Box> boxes;
  for (int i = 0; i < 3; ++i) boxes.push_back(random_box(rng, 2));
  const IntervalTable t(boxes, {}, {"a", "b", "c"});
  const IntervalDissimMatrix d = interval_distance_matrix(t);
  CHECK(d.labels() == std::vector<std::string>{"a", "b", "c"});
  CHECK(validate_dissim(d).ok());
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(d.entry(i, j) == d.entry(j, i));
      CHECK(d.entry(i, j).lo() <= d.entry(i, j).hi());
    }
    CHECK(d.entry(i, i).lo() == 0.0);
    CHECK(d.entry(i, i).hi() ==
          Catch::Approx(box_diameter(t.row(i))).margin(1e-12));
  }
  CHECK(d.entry(0, 1).lo() ==
        Catch::Approx(min_box_distance(t.row(0), t.row(1)).value));
  CHECK(d.entry(0, 1).hi() ==
        Catch::Approx(max_box_distance(t.row(0), t.row(1)).value));
}
