#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <atomic>
#include <random>
#include <stdexcept>

#include "vortex/errors.hpp"
#include "vortex/vs_optimizer.hpp"

using namespace vortex;

namespace {

ObjectiveSpec make_objective(Bounds bounds, Evaluator f) {
  ObjectiveSpec spec{0, "custom", std::move(bounds)};
  spec.evaluator = std::move(f);
  return spec;
}

double sphere(std::span<const double> x, RngStream*) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

VsConfig config(std::size_t n, std::size_t iters, std::uint64_t seed) {
  VsConfig c;
  c.candidate_count = n;
  c.max_iterations = iters;
  c.seed = seed;
  return c;
}

}  // namespace

TEST_CASE("F3 Sphere, n = 50, 100000 iterations reaches 0 after flooring") {
  const auto r = vs_minimize(get_function(3), config(50, 100000, 1));
  CHECK(r.best_fitness < 1e-16);
}

TEST_CASE("MaxItr = 1, n = 1 reproduces the single repaired draw around the midpoint") {
  const auto& f = get_function(19);  // asymmetric box [-5, 10] x [0, 15]
  const auto r = vs_minimize(f, config(1, 1, 77));

  RngStream rng(77);
  const double radius = RadiusSchedule(initial_sigma(f.bounds), 1).radius_at(0);
  std::vector<double> x(2);
  sample_into(x, initial_center(f.bounds), radius, rng);
  repair_in_place(x, f.bounds, rng);
  CHECK(r.best_position == x);
  CHECK(r.best_fitness == evaluate(f, x));
  CHECK(r.evaluations == 1);
  REQUIRE(r.trajectory.size() == 1);
  CHECK(r.trajectory[0] == TrajectoryPoint{0, r.best_fitness});
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(vs_minimize(get_function(3), config(0, 10, 1)), ConfigError);
  CHECK_THROWS_AS(vs_minimize(get_function(3), config(10, 0, 1)), ConfigError);
}

TEST_CASE("objective errors propagate") {
  const auto f = make_objective(Bounds::uniform(-1, 1, 2), [](std::span<const double>, RngStream*) -> double {
    throw std::runtime_error("boom");
  });
  CHECK_THROWS_WITH(vs_minimize(f, config(5, 3, 1)), "boom");
}

TEST_CASE("first-best tie breaking and strict improvement") {
  // Constant objective: the incumbent never changes after the first
  // iteration, and it is the first candidate of iteration 0.
  std::vector<double> first;
  const auto f = make_objective(Bounds::uniform(-1, 1, 3), [](std::span<const double>, RngStream*) {
    return 7.0;
  });
  const auto r = vs_minimize(f, config(4, 20, 5), [&](const IterationSnapshot& s) {
    if (s.iteration == 0) first.assign(s.incumbent_position.begin(), s.incumbent_position.end());
    CHECK(std::vector<double>(s.incumbent_position.begin(), s.incumbent_position.end()) == first);
  });
  RngStream rng(5);
  const double radius = RadiusSchedule(1.0, 20).radius_at(0);
  std::vector<double> x(12);
  sample_into(x, std::vector<double>(3, 0.0), radius, rng);
  for (int k = 0; k < 4; ++k) repair_in_place(std::span<double>(x).subspan(k * 3, 3), f.bounds, rng);
  CHECK(r.best_position == std::vector<double>(x.begin(), x.begin() + 3));
}

TEST_CASE("property: monotone best, elitism, incumbent consistency, budget") {
  std::mt19937_64 gen(2718);
  for (int trial = 0; trial < 40; ++trial) {
    const int id = 1 + static_cast<int>(gen() % 50);
    const auto& f = get_function(id);
    const std::size_t n = 1 + gen() % 30;
    const std::size_t iters = 1 + gen() % 150;
    CAPTURE(id);
    double previous = INFINITY;
    std::vector<double> expected_center = initial_center(f.bounds);
    const auto r = vs_minimize(f, config(n, iters, gen()), [&](const IterationSnapshot& s) {
      CHECK(s.incumbent_fitness <= previous);
      previous = s.incumbent_fitness;
      CHECK(std::vector<double>(s.centers.begin(), s.centers.end()) == expected_center);
      // Elitism: the next center is the incumbent, bit for bit.
      CHECK(std::equal(s.next_centers.begin(), s.next_centers.end(), s.incumbent_position.begin(),
                       s.incumbent_position.end()));
      CHECK(s.incumbent_fitness <= s.subset_best[0]);
      expected_center.assign(s.next_centers.begin(), s.next_centers.end());
    });
    CHECK(r.evaluations == n * iters);
    if (id != 5) CHECK(evaluate(f, r.best_position) == r.best_fitness);
    CHECK(f.bounds.contains(r.best_position));
    for (std::size_t k = 1; k < r.trajectory.size(); ++k) {
      CHECK(r.trajectory[k].best_fitness <= r.trajectory[k - 1].best_fitness);
      CHECK(r.trajectory[k].iteration > r.trajectory[k - 1].iteration);
    }
    CHECK(r.trajectory.back().iteration == iters - 1);
  }
}

TEST_CASE("property: determinism") {
  for (int id : {2, 5, 18, 33, 48}) {
    const auto a = vs_minimize(get_function(id), config(20, 300, 9));
    const auto b = vs_minimize(get_function(id), config(20, 300, 9));
    CHECK(a == b);
    const auto c = vs_minimize(get_function(id), config(20, 300, 10));
    CHECK_FALSE(a == c);
  }
}

TEST_CASE("budget counts every objective call") {
  std::size_t calls = 0;
  const auto f = make_objective(Bounds::uniform(-5, 5, 4), [&](std::span<const double> x, RngStream* r) {
    ++calls;
    return sphere(x, r);
  });
  const auto r = vs_minimize(f, config(13, 77, 3));
  CHECK(calls == 13 * 77);
  CHECK(r.evaluations == calls);
}

TEST_CASE("trajectory stride") {
  VsConfig c = config(5, 1001, 2);
  c.trajectory_stride = 250;
  const auto r = vs_minimize(get_function(3), c);
  std::vector<std::size_t> its;
  for (const auto& p : r.trajectory) its.push_back(p.iteration);
  CHECK(its == std::vector<std::size_t>{0, 250, 500, 750, 1000});
}
