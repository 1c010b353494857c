#include "uptilt/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

#include "uptilt/errors.hpp"

namespace uptilt {

namespace {

// Kronrod 15-point nodes on [0, 1] (symmetric); odd indices are the Gauss 7-point nodes.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  double value;
  double error;
  unsigned depth;

  bool operator<(const Segment& other) const { return error < other.error; }
};

Segment gauss_kronrod(const std::function<double(double)>& f, double a, double b, unsigned depth) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * kNodes[i];
    const double sum = f(center - dx) + f(center + dx);
    kronrod += kKronrodWeights[i] * sum;
    if (i % 2 == 1) {
      gauss += kGaussWeights[i / 2] * sum;
    }
  }
  kronrod *= half;
  gauss *= half;
  const double error = std::max(std::abs(kronrod - gauss),
                                50.0 * std::numeric_limits<double>::epsilon() * std::abs(kronrod));
  return {a, b, kronrod, error, depth};
}

}  // namespace

Integral integrate(const std::function<double(double)>& f, double a, double b,
                   const QuadratureOptions& opts) {
  if (!(a <= b)) {
    throw InvalidInput("integrate: need a <= b");
  }
  if (a == b) {
    return {};
  }

  std::priority_queue<Segment> work;
  work.push(gauss_kronrod(f, a, b, 0));
  double total = work.top().value;
  double total_error = work.top().error;
  std::vector<Segment> settled;
  constexpr std::size_t kMaxSegments = 20000;

  auto tolerance = [&] { return std::max(opts.abs_tol, opts.rel_tol * std::abs(total)); };

  while (total_error > tolerance() && !work.empty()) {
    const Segment worst = work.top();
    work.pop();
    if (worst.depth >= opts.max_depth || settled.size() + work.size() >= kMaxSegments) {
      settled.push_back(worst);
      continue;
    }
    const double mid = 0.5 * (worst.a + worst.b);
    const Segment left = gauss_kronrod(f, worst.a, mid, worst.depth + 1);
    const Segment right = gauss_kronrod(f, mid, worst.b, worst.depth + 1);
    total += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    work.push(left);
    work.push(right);
  }

  // Re-sum to shed the drift of incremental updates.
  total = 0.0;
  total_error = 0.0;
  for (; !work.empty(); work.pop()) {
    settled.push_back(work.top());
  }
  std::sort(settled.begin(), settled.end(),
            [](const Segment& x, const Segment& y) { return x.a < y.a; });
  for (const Segment& s : settled) {
    total += s.value;
    total_error += s.error;
  }

  if (!std::isfinite(total) || total_error > tolerance()) {
    std::ostringstream msg;
    msg << "integrate: no convergence on [" << a << ", " << b << "], value " << total
        << ", error estimate " << total_error;
    throw NumericalFailure(msg.str(), total_error);
  }
  return {total, total_error};
}

}  // namespace uptilt
