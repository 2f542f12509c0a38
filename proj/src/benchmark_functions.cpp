#include "vortex/benchmark_functions.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <string>

#include "benchmark_data.hpp"
#include "vortex/errors.hpp"

namespace vortex {
namespace {

using std::numbers::pi;
using X = std::span<const double>;

double sq(double v) { return v * v; }

// ---------------------------------------------------------------- unimodal

double stepint(X x) {
  // 30 + sum floor(x_i): the offset puts the minimum over [-5.12, 5.12]^5 at 0.
  double s = 30.0;
  for (double v : x) s += std::floor(v);
  return s;
}

double step(X x) {
  double s = 0.0;
  for (double v : x) s += sq(std::floor(v + 0.5));
  return s;
}

double sphere(X x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

double sum_squares(X x) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += static_cast<double>(i + 1) * x[i] * x[i];
  return s;
}

double quartic(X x, RngStream* noise) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += static_cast<double>(i + 1) * sq(sq(x[i]));
  if (noise != nullptr) s += noise->uniform();
  return s;
}

// Only the first two coordinates enter; the table lists the function as 5-D.
double beale(X x) {
  const double a = x[0];
  const double b = x[1];
  return sq(1.5 - a + a * b) + sq(2.25 - a + a * b * b) + sq(2.625 - a + a * b * b * b);
}

double easom(X x) {
  return -std::cos(x[0]) * std::cos(x[1]) * std::exp(-sq(x[0] - pi) - sq(x[1] - pi));
}

double matyas(X x) { return 0.26 * (x[0] * x[0] + x[1] * x[1]) - 0.48 * x[0] * x[1]; }

double colville(X x) {
  return 100.0 * sq(x[0] * x[0] - x[1]) + sq(x[0] - 1.0) + sq(x[2] - 1.0) +
         90.0 * sq(x[2] * x[2] - x[3]) + 10.1 * (sq(x[1] - 1.0) + sq(x[3] - 1.0)) +
         19.8 * (x[1] - 1.0) * (x[3] - 1.0);
}

double trid(X x) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    s += sq(x[i] - 1.0);
    if (i > 0) s -= x[i] * x[i - 1];
  }
  return s;
}

double zakharov(X x) {
  double s1 = 0.0;
  double s2 = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    s1 += x[i] * x[i];
    s2 += 0.5 * static_cast<double>(i + 1) * x[i];
  }
  return s1 + sq(s2) + sq(sq(s2));
}

double powell(X x) {
  double s = 0.0;
  for (std::size_t k = 0; k + 3 < x.size(); k += 4) {
    s += sq(x[k] + 10.0 * x[k + 1]) + 5.0 * sq(x[k + 2] - x[k + 3]) +
         sq(sq(x[k + 1] - 2.0 * x[k + 2])) + 10.0 * sq(sq(x[k] - x[k + 3]));
  }
  return s;
}

double schwefel_2_22(X x) {
  double sum = 0.0;
  double prod = 1.0;
  for (double v : x) {
    sum += std::abs(v);
    prod *= std::abs(v);
  }
  return sum + prod;
}

double schwefel_1_2(X x) {
  double s = 0.0;
  double partial = 0.0;
  for (double v : x) {
    partial += v;
    s += partial * partial;
  }
  return s;
}

double rosenbrock(X x) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    s += 100.0 * sq(x[i + 1] - x[i] * x[i]) + sq(x[i] - 1.0);
  }
  return s;
}

double dixon_price(X x) {
  double s = sq(x[0] - 1.0);
  for (std::size_t i = 1; i < x.size(); ++i) {
    s += static_cast<double>(i + 1) * sq(2.0 * x[i] * x[i] - x[i - 1]);
  }
  return s;
}

// -------------------------------------------------------------- multimodal

double foxholes(X x) {
  static constexpr double kGrid[5] = {-32.0, -16.0, 0.0, 16.0, 32.0};
  double s = 1.0 / 500.0;
  for (int j = 0; j < 25; ++j) {
    const double d0 = x[0] - kGrid[j % 5];
    const double d1 = x[1] - kGrid[j / 5];
    const double p0 = d0 * d0 * d0;
    const double p1 = d1 * d1 * d1;
    s += 1.0 / (j + 1 + p0 * p0 + p1 * p1);
  }
  return 1.0 / s;
}

double branin(X x) {
  const double b = 5.1 / (4.0 * pi * pi);
  const double c = 5.0 / pi;
  const double t = 1.0 / (8.0 * pi);
  return sq(x[1] - b * x[0] * x[0] + c * x[0] - 6.0) + 10.0 * (1.0 - t) * std::cos(x[0]) + 10.0;
}

double bohachevsky1(X x) {
  return x[0] * x[0] + 2.0 * x[1] * x[1] - 0.3 * std::cos(3.0 * pi * x[0]) -
         0.4 * std::cos(4.0 * pi * x[1]) + 0.7;
}

double booth(X x) { return sq(x[0] + 2.0 * x[1] - 7.0) + sq(2.0 * x[0] + x[1] - 5.0); }

double rastrigin(X x) {
  double s = 0.0;
  for (double v : x) s += v * v - 10.0 * std::cos(2.0 * pi * v) + 10.0;
  return s;
}

// Unshifted variant; minimum -418.9829 * D at x_i = 420.9687.
double schwefel(X x) {
  double s = 0.0;
  for (double v : x) s -= v * std::sin(std::sqrt(std::abs(v)));
  return s;
}

double michalewicz(X x) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double inner = std::sin(static_cast<double>(i + 1) * x[i] * x[i] / pi);
    const double i2 = inner * inner;
    const double i4 = i2 * i2;
    const double i8 = i4 * i4;
    const double i16 = i8 * i8;
    s -= std::sin(x[i]) * i16 * i4;
  }
  return s;
}

double schaffer(X x) {
  const double r2 = x[0] * x[0] + x[1] * x[1];
  return 0.5 + (sq(std::sin(std::sqrt(r2))) - 0.5) / sq(1.0 + 0.001 * r2);
}

double six_hump_camel_back(X x) {
  const double a = x[0];
  const double b = x[1];
  return 4.0 * a * a - 2.1 * a * a * a * a + a * a * a * a * a * a / 3.0 + a * b - 4.0 * b * b +
         4.0 * b * b * b * b;
}

double bohachevsky2(X x) {
  return x[0] * x[0] + 2.0 * x[1] * x[1] -
         0.3 * std::cos(3.0 * pi * x[0]) * std::cos(4.0 * pi * x[1]) + 0.3;
}

double bohachevsky3(X x) {
  return x[0] * x[0] + 2.0 * x[1] * x[1] - 0.3 * std::cos(3.0 * pi * x[0] + 4.0 * pi * x[1]) +
         0.3;
}

double shubert(X x) {
  double s0 = 0.0;
  double s1 = 0.0;
  for (int i = 1; i <= 5; ++i) {
    s0 += i * std::cos((i + 1) * x[0] + i);
    s1 += i * std::cos((i + 1) * x[1] + i);
  }
  return s0 * s1;
}

double goldstein_price(X x) {
  const double a = x[0];
  const double b = x[1];
  const double t1 =
      1.0 + sq(a + b + 1.0) * (19.0 - 14.0 * a + 3.0 * a * a - 14.0 * b + 6.0 * a * b + 3.0 * b * b);
  const double t2 = 30.0 + sq(2.0 * a - 3.0 * b) *
                               (18.0 - 32.0 * a + 12.0 * a * a + 48.0 * b - 36.0 * a * b + 27.0 * b * b);
  return t1 * t2;
}

double kowalik(X x) {
  double s = 0.0;
  for (std::size_t i = 0; i < data::kKowalikA.size(); ++i) {
    const double b = data::kKowalikB[i];
    s += sq(data::kKowalikA[i] - x[0] * (b * b + b * x[1]) / (b * b + b * x[2] + x[3]));
  }
  return s;
}

template <std::size_t M>
double shekel(X x) {
  double s = 0.0;
  for (std::size_t i = 0; i < M; ++i) {
    double d = data::kShekelC[i];
    for (std::size_t j = 0; j < 4; ++j) d += sq(x[j] - data::kShekelA[i][j]);
    s -= 1.0 / d;
  }
  return s;
}

// beta = 0.5; minimum 0 at x_i = i.
double perm(X x) {
  const std::size_t n = x.size();
  double s = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    double inner = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
      const double di = static_cast<double>(i);
      const double dk = static_cast<double>(k);
      inner += (std::pow(di, dk) + 0.5) * (std::pow(x[i - 1] / di, dk) - 1.0);
    }
    s += inner * inner;
  }
  return s;
}

double power_sum(X x) {
  static constexpr double kTargets[4] = {8.0, 18.0, 44.0, 114.0};
  double s = 0.0;
  for (std::size_t k = 1; k <= x.size(); ++k) {
    double sum = 0.0;
    for (double v : x) sum += std::pow(v, static_cast<double>(k));
    s += sq(sum - kTargets[k - 1]);
  }
  return s;
}

template <std::size_t D>
double hartman(X x, const std::array<std::array<double, D>, 4>& a,
               const std::array<std::array<double, D>, 4>& p) {
  double s = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    double inner = 0.0;
    for (std::size_t j = 0; j < D; ++j) inner += a[i][j] * sq(x[j] - p[i][j]);
    s -= data::kHartmanC[i] * std::exp(-inner);
  }
  return s;
}

double hartman3(X x) { return hartman<3>(x, data::kHartman3A, data::kHartman3P); }
double hartman6(X x) { return hartman<6>(x, data::kHartman6A, data::kHartman6P); }

double griewank(X x) {
  double s = 0.0;
  double p = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    s += x[i] * x[i];
    p *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
  }
  return s / 4000.0 - p + 1.0;
}

// Grouped as 20 (1 - e^{-0.2 r}) + (e - e^{c}) so the origin gives exactly 0.
double ackley(X x) {
  double s2 = 0.0;
  double sc = 0.0;
  for (double v : x) {
    s2 += v * v;
    sc += std::cos(2.0 * pi * v);
  }
  const double n = static_cast<double>(x.size());
  return 20.0 * (1.0 - std::exp(-0.2 * std::sqrt(s2 / n))) +
         (std::numbers::e - std::exp(sc / n));
}

double penalty_u(double v, double a, double k, double m) {
  if (v > a) return k * std::pow(v - a, m);
  if (v < -a) return k * std::pow(-v - a, m);
  return 0.0;
}

double penalized(X x) {
  const std::size_t n = x.size();
  auto y = [&](std::size_t i) { return 1.0 + (x[i] + 1.0) / 4.0; };
  double s = 10.0 * sq(std::sin(pi * y(0)));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    s += sq(y(i) - 1.0) * (1.0 + 10.0 * sq(std::sin(pi * y(i + 1))));
  }
  s += sq(y(n - 1) - 1.0);
  double penalty = 0.0;
  for (double v : x) penalty += penalty_u(v, 10.0, 100.0, 4.0);
  return pi / static_cast<double>(n) * s + penalty;
}

double penalized2(X x) {
  const std::size_t n = x.size();
  double s = sq(std::sin(3.0 * pi * x[0]));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    s += sq(x[i] - 1.0) * (1.0 + sq(std::sin(3.0 * pi * x[i + 1])));
  }
  s += sq(x[n - 1] - 1.0) * (1.0 + sq(std::sin(2.0 * pi * x[n - 1])));
  double penalty = 0.0;
  for (double v : x) penalty += penalty_u(v, 5.0, 100.0, 4.0);
  return 0.1 * s + penalty;
}

double langerman(X x, const std::array<double, 5>& c) {
  double s = 0.0;
  for (std::size_t i = 0; i < 5; ++i) {
    double d2 = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) d2 += sq(x[j] - data::kLangermanA[i][j]);
    s -= c[i] * std::exp(-d2 / pi) * std::cos(pi * d2);
  }
  return s;
}

template <std::size_t D>
double fletcher_powell(X x, const std::array<double, D * D>& a, const std::array<double, D * D>& b,
                       const std::array<double, D>& alpha) {
  double s = 0.0;
  for (std::size_t i = 0; i < D; ++i) {
    double target = 0.0;
    double value = 0.0;
    for (std::size_t j = 0; j < D; ++j) {
      target += a[i * D + j] * std::sin(alpha[j]) + b[i * D + j] * std::cos(alpha[j]);
      value += a[i * D + j] * std::sin(x[j]) + b[i * D + j] * std::cos(x[j]);
    }
    s += sq(target - value);
  }
  return s;
}

// ---------------------------------------------------------------- registry

Evaluator plain(double (*f)(X)) {
  return [f](X x, RngStream*) { return f(x); };
}

std::vector<double> filled(std::size_t d, double v) { return std::vector<double>(d, v); }

struct Row {
  int id;
  const char* name;
  Modality modality;
  Separability separability;
  Bounds bounds;
  std::optional<double> minimum;
  std::optional<std::vector<double>> minimizer;
  Evaluator evaluator;
};

std::vector<ObjectiveSpec> build_suite() {
  constexpr auto U = Modality::unimodal;
  constexpr auto M = Modality::multimodal;
  constexpr auto S = Separability::separable;
  constexpr auto N = Separability::non_separable;
  const auto box = [](double lo, double hi, std::size_t d) { return Bounds::uniform(lo, hi, d); };

  std::vector<double> trid6(6);
  std::vector<double> trid10(10);
  for (std::size_t i = 0; i < 6; ++i) trid6[i] = (i + 1.0) * (6.0 - i);
  for (std::size_t i = 0; i < 10; ++i) trid10[i] = (i + 1.0) * (10.0 - i);
  std::vector<double> dixon(30);
  for (std::size_t i = 0; i < 30; ++i) {
    const double p = std::pow(2.0, static_cast<double>(i + 1));
    dixon[i] = std::pow(2.0, -(p - 2.0) / p);
  }
  const auto row3 = [](std::size_t d) {
    return std::vector<double>(data::kLangermanA[2].begin(), data::kLangermanA[2].begin() + d);
  };
  const std::vector<double> michalewicz_x = {
      2.2029055199529126, 1.5707963266195448, 1.2849915702724131, 1.9230584696163617,
      1.7204697722211917, 1.5707963266177294, 1.454413971098677,  1.7560865207602161,
      1.6557174165475732, 1.5707963266175824};
  const auto mich = [&](std::size_t d) {
    return std::vector<double>(michalewicz_x.begin(), michalewicz_x.begin() + d);
  };
  const auto vec = [](auto const& arr) { return std::vector<double>(arr.begin(), arr.end()); };

  std::vector<Row> rows;
  rows.push_back({1, "Stepint", U, S, box(-5.12, 5.12, 5), 0.0, filled(5, -5.1), plain(stepint)});
  rows.push_back({2, "Step", U, S, box(-100, 100, 30), 0.0, filled(30, 0.0), plain(step)});
  rows.push_back({3, "Sphere", U, S, box(-100, 100, 30), 0.0, filled(30, 0.0), plain(sphere)});
  rows.push_back(
      {4, "SumSquares", U, S, box(-10, 10, 30), 0.0, filled(30, 0.0), plain(sum_squares)});
  rows.push_back({5, "Quartic", U, S, box(-1.28, 1.28, 30), 0.0, filled(30, 0.0),
                  [](X x, RngStream* noise) { return quartic(x, noise); }});
  rows.push_back({6, "Beale", U, N, box(-4.5, 4.5, 5), 0.0,
                  std::vector<double>{3.0, 0.5, 0.0, 0.0, 0.0}, plain(beale)});
  rows.push_back(
      {7, "Easom", U, N, box(-100, 100, 2), -1.0, std::vector<double>{pi, pi}, plain(easom)});
  rows.push_back({8, "Matyas", U, N, box(-10, 10, 2), 0.0, filled(2, 0.0), plain(matyas)});
  rows.push_back({9, "Colville", U, N, box(-10, 10, 4), 0.0, filled(4, 1.0), plain(colville)});
  rows.push_back({10, "Trid6", U, N, box(-36, 36, 6), -50.0, trid6, plain(trid)});
  rows.push_back({11, "Trid10", U, N, box(-100, 100, 10), -210.0, trid10, plain(trid)});
  rows.push_back({12, "Zakharov", U, N, box(-5, 10, 10), 0.0, filled(10, 0.0), plain(zakharov)});
  rows.push_back({13, "Powell", U, N, box(-4, 5, 24), 0.0, filled(24, 0.0), plain(powell)});
  rows.push_back(
      {14, "Schwefel 2.22", U, N, box(-10, 10, 30), 0.0, filled(30, 0.0), plain(schwefel_2_22)});
  rows.push_back(
      {15, "Schwefel 1.2", U, N, box(-10, 10, 30), 0.0, filled(30, 0.0), plain(schwefel_1_2)});
  rows.push_back({16, "Rosenbrock", U, N, box(-30, 30, 30), 0.0, filled(30, 1.0), plain(rosenbrock)});
  rows.push_back({17, "Dixon-Price", U, N, box(-10, 10, 30), 0.0, dixon, plain(dixon_price)});
  rows.push_back({18, "Foxholes", M, S, box(-65.536, 65.536, 2), 0.998003838,
                  std::vector<double>{-31.978330712590456, -31.978331576925719}, plain(foxholes)});
  rows.push_back({19, "Branin", M, S, Bounds({-5.0, 0.0}, {10.0, 15.0}), 0.397887358,
                  std::vector<double>{pi, 2.275}, plain(branin)});
  rows.push_back(
      {20, "Bohachevsky1", M, S, box(-100, 100, 2), 0.0, filled(2, 0.0), plain(bohachevsky1)});
  rows.push_back({21, "Booth", M, S, box(-10, 10, 2), 0.0, std::vector<double>{1.0, 3.0},
                  plain(booth)});
  rows.push_back({22, "Rastrigin", M, S, box(-5.12, 5.12, 30), 0.0, filled(30, 0.0),
                  plain(rastrigin)});
  rows.push_back({23, "Schwefel", M, S, box(-500, 500, 30), -12569.48662,
                  filled(30, 420.96874496381247), plain(schwefel)});
  rows.push_back(
      {24, "Michalewicz2", M, S, box(0, pi, 2), -1.80130341, mich(2), plain(michalewicz)});
  rows.push_back(
      {25, "Michalewicz5", M, S, box(0, pi, 5), -4.687658179, mich(5), plain(michalewicz)});
  rows.push_back(
      {26, "Michalewicz10", M, S, box(0, pi, 10), -9.660151716, mich(10), plain(michalewicz)});
  rows.push_back({27, "Schaffer", M, N, box(-100, 100, 2), 0.0, filled(2, 0.0), plain(schaffer)});
  rows.push_back({28, "Six Hump Camel Back", M, N, box(-5, 5, 2), -1.031628453,
                  std::vector<double>{0.089842016529270985, -0.71265640138072017},
                  plain(six_hump_camel_back)});
  rows.push_back(
      {29, "Bohachevsky2", M, N, box(-100, 100, 2), 0.0, filled(2, 0.0), plain(bohachevsky2)});
  rows.push_back(
      {30, "Bohachevsky3", M, N, box(-100, 100, 2), 0.0, filled(2, 0.0), plain(bohachevsky3)});
  rows.push_back({31, "Shubert", M, N, box(-10, 10, 2), -186.7309088,
                  std::vector<double>{-1.4251284289564423, -0.8003211005067602}, plain(shubert)});
  rows.push_back({32, "Goldstein-Price", M, N, box(-2, 2, 2), 3.0, std::vector<double>{0.0, -1.0},
                  plain(goldstein_price)});
  rows.push_back({33, "Kowalik", M, N, box(-5, 5, 4), 0.000307486,
                  std::vector<double>{0.19283345304719904, 0.19083624025490142,
                                      0.12311729859121223, 0.13576599022498986},
                  plain(kowalik)});
  rows.push_back({34, "Shekel5", M, N, box(0, 10, 4), -10.15319968,
                  std::vector<double>{4.0000371523765494, 4.0001332786575663, 4.0000371510575548,
                                      4.0001332770904252},
                  plain(shekel<5>)});
  rows.push_back({35, "Shekel7", M, N, box(0, 10, 4), -10.40294057,
                  std::vector<double>{4.0005729142770843, 4.0006893660408887, 3.9994897107938447,
                                      3.9996061600067923},
                  plain(shekel<7>)});
  rows.push_back({36, "Shekel10", M, N, box(0, 10, 4), -10.53640982,
                  std::vector<double>{4.0007465302533127, 4.0005929367797091, 3.9996633957714787,
                                      3.9995097993299975},
                  plain(shekel<10>)});
  rows.push_back({37, "Perm", M, N, box(-4, 4, 4), 0.0, std::vector<double>{1.0, 2.0, 3.0, 4.0},
                  plain(perm)});
  rows.push_back({38, "PowerSum", M, N, box(0, 4, 4), 0.0, std::vector<double>{1.0, 2.0, 2.0, 3.0},
                  plain(power_sum)});
  rows.push_back({39, "Hartman3", M, N, box(0, 1, 3), -3.862782148,
                  std::vector<double>{0.11461434203082951, 0.55564885079053838, 0.85254695384602508},
                  plain(hartman3)});
  rows.push_back({40, "Hartman6", M, N, box(0, 1, 6), -3.322368011,
                  std::vector<double>{0.20168951180004127, 0.15001069035064757, 0.4768739735409,
                                      0.27533243113981709, 0.3116516174846849, 0.65730053668909127},
                  plain(hartman6)});
  rows.push_back({41, "Griewank", M, N, box(-600, 600, 30), 0.0, filled(30, 0.0), plain(griewank)});
  rows.push_back({42, "Ackley", M, N, box(-32, 32, 30), 0.0, filled(30, 0.0), plain(ackley)});
  rows.push_back({43, "Penalized", M, N, box(-50, 50, 30), 0.0, filled(30, -1.0), plain(penalized)});
  rows.push_back(
      {44, "Penalized2", M, N, box(-50, 50, 30), 0.0, filled(30, 1.0), plain(penalized2)});
  rows.push_back({45, "Langerman2", M, N, box(0, 10, 2), -1.080938442,
                  std::vector<double>{9.6810707044895423, 0.66665153994035176},
                  [](X x, RngStream*) { return langerman(x, data::kLangermanC2); }});
  rows.push_back({46, "Langerman5", M, N, box(0, 10, 5), -1.499999223,
                  std::vector<double>{8.0250006552297464, 9.1519948726104481, 5.1139767832673186,
                                      7.6209187572638513, 4.5640302831644171},
                  [](X x, RngStream*) { return langerman(x, data::kLangermanC); }});
  // No published minimum; row 3 of the table is a strong local point (-1.5).
  rows.push_back({47, "Langerman10", M, N, box(0, 10, 10), std::nullopt, row3(10),
                  [](X x, RngStream*) { return langerman(x, data::kLangermanC); }});
  rows.push_back({48, "Fletcher Powell2", M, N, box(-pi, pi, 2), 0.0,
                  vec(data::kFletcherPowellAlpha2), [](X x, RngStream*) {
                    return fletcher_powell<2>(x, data::kFletcherPowellA2, data::kFletcherPowellB2,
                                              data::kFletcherPowellAlpha2);
                  }});
  rows.push_back({49, "Fletcher Powell5", M, N, box(-pi, pi, 5), 0.0,
                  vec(data::kFletcherPowellAlpha5), [](X x, RngStream*) {
                    return fletcher_powell<5>(x, data::kFletcherPowellA5, data::kFletcherPowellB5,
                                              data::kFletcherPowellAlpha5);
                  }});
  rows.push_back({50, "Fletcher Powell10", M, N, box(-pi, pi, 10), 0.0,
                  vec(data::kFletcherPowellAlpha10), [](X x, RngStream*) {
                    return fletcher_powell<10>(x, data::kFletcherPowellA10,
                                               data::kFletcherPowellB10,
                                               data::kFletcherPowellAlpha10);
                  }});

  std::vector<ObjectiveSpec> suite;
  suite.reserve(rows.size());
  for (auto& r : rows) {
    suite.push_back(ObjectiveSpec{r.id, r.name, std::move(r.bounds), r.modality, r.separability,
                                  r.minimum, std::move(r.minimizer), std::move(r.evaluator)});
  }
  return suite;
}

std::string normalize(std::string_view key) {
  std::string out;
  for (char c : key) {
    if (c == ' ' || c == '-' || c == '_' || c == '.') continue;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

}  // namespace

std::string ObjectiveSpec::label() const {
  return id > 0 ? "F" + std::to_string(id) : name;
}

double evaluate(const ObjectiveSpec& spec, std::span<const double> x, RngStream* noise) {
  if (x.size() != spec.dimension()) {
    throw ConfigError("evaluate: " + spec.label() + " expects dimension " +
                      std::to_string(spec.dimension()) + ", got " + std::to_string(x.size()));
  }
  return spec.evaluator(x, noise);
}

const std::vector<ObjectiveSpec>& benchmark_suite() {
  static const std::vector<ObjectiveSpec> suite = build_suite();
  return suite;
}

const ObjectiveSpec& get_function(int id) {
  const auto& suite = benchmark_suite();
  if (id < 1 || id > static_cast<int>(suite.size())) {
    throw LookupError("unknown benchmark function id " + std::to_string(id) +
                      " (valid: F1..F" + std::to_string(suite.size()) + ")");
  }
  return suite[static_cast<std::size_t>(id - 1)];
}

const ObjectiveSpec& find_function(std::string_view key) {
  std::string k = normalize(key);
  std::string digits = k;
  if (!digits.empty() && digits.front() == 'f') digits.erase(0, 1);
  if (!digits.empty() && std::all_of(digits.begin(), digits.end(),
                                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    if (digits.size() > 3) throw LookupError("unknown benchmark function '" + std::string(key) + "'");
    return get_function(std::stoi(digits));
  }
  for (const auto& spec : benchmark_suite()) {
    if (normalize(spec.name) == k) return spec;
  }
  throw LookupError("unknown benchmark function '" + std::string(key) + "'");
}

nlohmann::json registry_json() {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& spec : benchmark_suite()) {
    nlohmann::json entry;
    entry["id"] = spec.id;
    entry["label"] = spec.label();
    entry["name"] = spec.name;
    entry["dimension"] = spec.dimension();
    entry["lower"] = std::vector<double>(spec.bounds.lower().begin(), spec.bounds.lower().end());
    entry["upper"] = std::vector<double>(spec.bounds.upper().begin(), spec.bounds.upper().end());
    entry["known_minimum"] =
        spec.known_minimum ? nlohmann::json(*spec.known_minimum) : nlohmann::json(nullptr);
    entry["modality"] = spec.modality == Modality::unimodal ? "unimodal" : "multimodal";
    entry["separability"] =
        spec.separability == Separability::separable ? "separable" : "non-separable";
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace vortex
