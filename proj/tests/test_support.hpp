#pragma once

// Helpers shared by the unit tests and the acceptance binary: random inputs
// and independent finite-difference oracles.

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "surfint/expr.hpp"
#include "surfint/geometry.hpp"

namespace surfint::support {

inline double uniform(std::mt19937_64& rng, double a, double b) {
  return std::uniform_real_distribution<double>(a, b)(rng);
}

inline std::string number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return std::string(x < 0 ? "(" : "") + buf + (x < 0 ? ")" : "");
}

/// Random polynomial of total degree <= degree, coefficients in [-1, 1].
inline std::string random_polynomial(std::mt19937_64& rng, const std::vector<std::string>& vars, int degree) {
  std::string out = number(uniform(rng, -1, 1));
  const int n = static_cast<int>(vars.size());
  // Enumerate monomials by exponent tuples.
  std::vector<int> e(n, 0);
  while (true) {
    int i = 0;
    while (i < n && ++e[i] > degree) e[i++] = 0;
    if (i == n) break;
    int total = 0;
    for (int k : e) total += k;
    if (total > degree) continue;
    out += "+" + number(uniform(rng, -1, 1));
    for (int k = 0; k < n; ++k)
      if (e[k] == 1)
        out += "*" + vars[k];
      else if (e[k] > 1)
        out += "*" + vars[k] + "^" + std::to_string(e[k]);
  }
  return out;
}

/// Random smooth expression, finite on [-1, 1]^n.
inline std::string random_expression(std::mt19937_64& rng, const std::vector<std::string>& vars, int depth) {
  std::uniform_int_distribution<int> pick(0, 9);
  auto leaf = [&] {
    if (pick(rng) < 3) return number(uniform(rng, -2, 2));
    return vars[std::uniform_int_distribution<std::size_t>(0, vars.size() - 1)(rng)];
  };
  if (depth == 0) return leaf();
  const std::string a = random_expression(rng, vars, depth - 1);
  const std::string b = random_expression(rng, vars, depth - 1);
  switch (pick(rng)) {
    case 0: return "(" + a + ")+(" + b + ")";
    case 1: return "(" + a + ")-(" + b + ")";
    case 2: return "(" + a + ")*(" + b + ")";
    case 3: return "(" + a + ")/(2+sin(" + b + "))";
    case 4: return "sin(" + a + ")";
    case 5: return "cos(" + a + ")";
    case 6: return "exp(" + a + "/4)";
    case 7: return "atan(" + a + ")";
    case 8: return "sqrt(1+(" + a + ")^2)";
    default: return "log(2+cos(" + a + "))*(" + b + ")^2";
  }
}

struct FiniteDifference {
  std::vector<double> grad;
  std::vector<std::vector<double>> hess;
};

/// Central differences of the value, independent of the jet arithmetic.
inline FiniteDifference central_differences(const Expression& e, std::vector<double> x, double h) {
  const std::size_t n = x.size();
  FiniteDifference fd{std::vector<double>(n), std::vector<std::vector<double>>(n, std::vector<double>(n))};
  auto f = [&](const std::vector<double>& p) { return e.evaluate(p); };
  const double f0 = f(x);
  for (std::size_t i = 0; i < n; ++i) {
    auto xp = x, xm = x;
    xp[i] += h;
    xm[i] -= h;
    fd.grad[i] = (f(xp) - f(xm)) / (2 * h);
    fd.hess[i][i] = (f(xp) - 2 * f0 + f(xm)) / (h * h);
    for (std::size_t j = i + 1; j < n; ++j) {
      auto pp = x, pm = x, mp = x, mm = x;
      pp[i] += h, pp[j] += h;
      pm[i] += h, pm[j] -= h;
      mp[i] -= h, mp[j] += h;
      mm[i] -= h, mm[j] -= h;
      fd.hess[i][j] = fd.hess[j][i] = (f(pp) - f(pm) - f(mp) + f(mm)) / (4 * h * h);
    }
  }
  return fd;
}

inline bool close_relative(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

/// Random parameter point inside the chart domain, `margin` away from
/// non-periodic rectangle edges and the disk rim.
inline Vec2 random_uv(const Chart& chart, std::mt19937_64& rng, double margin = 1e-3) {
  if (const auto* r = std::get_if<Rectangle>(&chart.domain())) {
    const double mu = chart.periodic()[0] ? 0.0 : margin;
    const double mv = chart.periodic()[1] ? 0.0 : margin;
    return {uniform(rng, r->u_min + mu, r->u_max - mu), uniform(rng, r->v_min + mv, r->v_max - mv)};
  }
  const auto& d = std::get<Disk>(chart.domain());
  const double rho = (d.radius - margin) * std::sqrt(uniform(rng, 0, 1));
  const double a = uniform(rng, 0, 2 * 3.141592653589793);
  return d.center + rho * Vec2(std::cos(a), std::sin(a));
}

}  // namespace surfint::support
