#include "lnewton/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

namespace lnewton {

namespace {

// Kronrod abscissae; odd indices are the 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;
  bool frozen;  // too narrow to bisect further in double precision
};

Panel kronrod15(const std::function<double(double)>& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(centre);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  double resabs = std::abs(resk);
  std::array<double, 7> f1{};
  std::array<double, 7> f2{};
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    f1[j] = f(centre - dx);
    f2[j] = f(centre + dx);
    const double sum = f1[j] + f2[j];
    resk += kWgk[j] * sum;
    resabs += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
    if (j % 2 == 1) resg += kWg[j / 2] * sum;
  }
  const double mean = 0.5 * resk;
  double resasc = kWgk[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));
  }
  const double ahalf = std::abs(half);
  const double value = resk * half;
  resabs *= ahalf;
  resasc *= ahalf;
  double error = std::abs((resk - resg) * half);
  if (resasc != 0.0 && error != 0.0) {
    error = resasc * std::min(1.0, std::pow(200.0 * error / resasc, 1.5));
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) {
    error = std::max(50.0 * eps * resabs, error);
  }
  const double width_floor = 100.0 * eps * (std::abs(a) + std::abs(b));
  return {a, b, value, error, (b - a) <= width_floor};
}

struct ByError {
  bool operator()(const Panel& l, const Panel& r) const { return l.error < r.error; }
};

}  // namespace

double compensated_sum(std::span<const double> terms) {
  double sum = 0.0;
  double carry = 0.0;
  for (double t : terms) {
    const double s = sum + t;
    if (std::abs(sum) >= std::abs(t)) {
      carry += (sum - s) + t;
    } else {
      carry += (t - s) + sum;
    }
    sum = s;
  }
  return sum + carry;
}

QuadratureResult integrate(const std::function<double(double)>& f,
                           std::span<const double> breakpoints,
                           const QuadratureOptions& options) {
  if (breakpoints.size() < 2) throw std::invalid_argument("integrate: need at least two breakpoints");
  if (!(options.abs_tol > 0.0) || !(options.rel_tol >= 0.0)) {
    throw std::invalid_argument("integrate: tolerance must be positive");
  }
  if (!std::is_sorted(breakpoints.begin(), breakpoints.end())) {
    throw std::invalid_argument("integrate: breakpoints must be sorted");
  }

  std::priority_queue<Panel, std::vector<Panel>, ByError> open;
  std::vector<Panel> done;
  double total_error = 0.0;
  double total_value = 0.0;
  const auto target = [&] { return options.abs_tol + options.rel_tol * std::abs(total_value); };
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (breakpoints[i + 1] == breakpoints[i]) continue;
    Panel p = kronrod15(f, breakpoints[i], breakpoints[i + 1]);
    total_error += p.error;
    total_value += p.value;
    if (p.frozen) {
      done.push_back(p);
    } else {
      open.push(p);
    }
  }

  int count = static_cast<int>(open.size() + done.size());
  while (!open.empty() && total_error > target() && count < options.max_intervals) {
    Panel worst = open.top();
    open.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Panel left = kronrod15(f, worst.a, mid);
    Panel right = kronrod15(f, mid, worst.b);
    total_error += left.error + right.error - worst.error;
    total_value += left.value + right.value - worst.value;
    for (Panel* p : {&left, &right}) {
      if (p->frozen) {
        done.push_back(*p);
      } else {
        open.push(*p);
      }
    }
    ++count;
  }
  while (!open.empty()) {
    done.push_back(open.top());
    open.pop();
  }

  std::sort(done.begin(), done.end(), [](const Panel& l, const Panel& r) { return l.a < r.a; });
  std::vector<double> values;
  std::vector<double> errors;
  values.reserve(done.size());
  errors.reserve(done.size());
  for (const Panel& p : done) {
    values.push_back(p.value);
    errors.push_back(p.error);
  }
  QuadratureResult result;
  result.value = compensated_sum(values);
  result.abs_error = compensated_sum(errors);
  result.intervals = static_cast<int>(done.size());
  result.converged = result.abs_error <= options.abs_tol + options.rel_tol * std::abs(result.value);
  return result;
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& options) {
  const std::array<double, 2> ends{a, b};
  return integrate(f, ends, options);
}

}  // namespace lnewton
