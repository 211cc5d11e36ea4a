#include "poincare/trig.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "poincare/errors.hpp"
#include "poincare/kernels.hpp"

namespace poincare {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Dense Fourier series with exact coefficients; b[0] is kept at zero.
struct Series {
  std::vector<Rational> a;
  std::vector<Rational> b;

  explicit Series(std::size_t harmonics = 0) : a(harmonics + 1), b(harmonics + 1) {}
  std::size_t harmonics() const { return a.size() - 1; }
};

Series multiply(const Series& u, const Series& v) {
  Series r(u.harmonics() + v.harmonics());
  const Rational half(1, 2);
  for (std::size_t j = 0; j <= u.harmonics(); ++j) {
    for (std::size_t k = 0; k <= v.harmonics(); ++k) {
      const std::size_t sum = j + k;
      const std::size_t diff = j > k ? j - k : k - j;
      const int diff_sign = j > k ? 1 : (j < k ? -1 : 0);
      const Rational& aj = u.a[j];
      const Rational& bj = u.b[j];
      const Rational& ak = v.a[k];
      const Rational& bk = v.b[k];
      if (aj != 0 && ak != 0) {
        Rational t = half * aj * ak;
        r.a[sum] += t;
        r.a[diff] += t;
      }
      if (bj != 0 && bk != 0) {
        Rational t = half * bj * bk;
        r.a[diff] += t;
        r.a[sum] -= t;
      }
      if (aj != 0 && bk != 0) {
        // cos jθ sin kθ = ½[sin(j+k)θ − sin(j−k)θ]
        Rational t = half * aj * bk;
        r.b[sum] += t;
        if (diff_sign != 0) r.b[diff] -= diff_sign * t;
      }
      if (bj != 0 && ak != 0) {
        // sin jθ cos kθ = ½[sin(j+k)θ + sin(j−k)θ]
        Rational t = half * bj * ak;
        r.b[sum] += t;
        if (diff_sign != 0) r.b[diff] += diff_sign * t;
      }
    }
  }
  r.b[0] = 0;
  return r;
}

void accumulate(Series& into, const Series& term, const Rational& coeff) {
  if (into.harmonics() < term.harmonics()) {
    into.a.resize(term.a.size());
    into.b.resize(term.b.size());
  }
  for (std::size_t k = 0; k <= term.harmonics(); ++k) {
    if (term.a[k] != 0) into.a[k] += coeff * term.a[k];
    if (term.b[k] != 0) into.b[k] += coeff * term.b[k];
  }
}

double sum_abs(const std::vector<double>& a, const std::vector<double>& b, int weight_power) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double w = weight_power == 0 ? 1.0 : std::pow(static_cast<double>(k), weight_power);
    s += w * (std::fabs(a[k]) + std::fabs(b[k]));
  }
  return s;
}

}  // namespace

TrigPoly::TrigPoly(BivariatePoly source) : source_(std::move(source)) {
  if (source_.is_zero()) return;
  const unsigned deg = *source_.degree();

  Series cos_series(1), sin_series(1);
  cos_series.a[1] = 1;
  sin_series.b[1] = 1;
  std::vector<Series> cpow{Series(0)}, spow{Series(0)};
  cpow[0].a[0] = 1;
  spow[0].a[0] = 1;
  for (unsigned k = 1; k <= deg; ++k) {
    cpow.push_back(multiply(cpow.back(), cos_series));
    spow.push_back(multiply(spow.back(), sin_series));
  }

  Series total(0);
  for (const auto& [m, c] : source_.terms()) accumulate(total, multiply(cpow[m.x], spow[m.y]), c);

  std::size_t top = total.harmonics() + 1;
  while (top > 0 && total.a[top - 1] == 0 && total.b[top - 1] == 0) --top;
  total.a.resize(top);
  total.b.resize(top);
  a_ = std::move(total.a);
  b_ = std::move(total.b);
  ad_.reserve(a_.size());
  bd_.reserve(b_.size());
  for (std::size_t k = 0; k < a_.size(); ++k) {
    ad_.push_back(a_[k].get_d());
    bd_.push_back(b_[k].get_d());
  }
}

TrigPoly TrigPoly::from_fourier(std::vector<Rational> cos_coeffs, std::vector<Rational> sin_coeffs) {
  const std::size_t n = std::max(cos_coeffs.size(), sin_coeffs.size());
  cos_coeffs.resize(n);
  sin_coeffs.resize(n);
  const BivariatePoly c = BivariatePoly::var_x();
  const BivariatePoly s = BivariatePoly::var_y();
  const BivariatePoly two_c = Rational(2) * c;

  std::vector<BivariatePoly> cheb_t{BivariatePoly(Rational(1)), c};
  std::vector<BivariatePoly> cheb_u{BivariatePoly(Rational(1)), two_c};
  while (cheb_t.size() < n + 1) {
    const std::size_t k = cheb_t.size();
    cheb_t.push_back(two_c * cheb_t[k - 1] - cheb_t[k - 2]);
    cheb_u.push_back(two_c * cheb_u[k - 1] - cheb_u[k - 2]);
  }

  BivariatePoly src;
  for (std::size_t k = 0; k < n; ++k) {
    if (cos_coeffs[k] != 0) src += cos_coeffs[k] * cheb_t[k];
    if (k > 0 && sin_coeffs[k] != 0) src += sin_coeffs[k] * (s * cheb_u[k - 1]);
  }
  return TrigPoly(std::move(src));
}

double TrigPoly::operator()(double theta) const {
  if (ad_.empty()) return 0.0;
  const std::complex<double> z = std::polar(1.0, theta);
  std::complex<double> w = 1.0;
  double sum = ad_[0];
  for (std::size_t k = 1; k < ad_.size(); ++k) {
    w *= z;
    sum += ad_[k] * w.real() + bd_[k] * w.imag();
  }
  return sum;
}

double TrigPoly::derivative(double theta) const {
  if (ad_.empty()) return 0.0;
  const std::complex<double> z = std::polar(1.0, theta);
  std::complex<double> w = 1.0;
  double sum = 0.0;
  for (std::size_t k = 1; k < ad_.size(); ++k) {
    w *= z;
    const double kk = static_cast<double>(k);
    sum += kk * (bd_[k] * w.real() - ad_[k] * w.imag());
  }
  return sum;
}

double TrigPoly::evaluate_source(double theta) const { return source_.evaluate(std::cos(theta), std::sin(theta)); }

double TrigPoly::sup_bound() const { return sum_abs(ad_, bd_, 0); }
double TrigPoly::lipschitz_bound() const { return sum_abs(ad_, bd_, 1); }
double TrigPoly::curvature_bound() const { return sum_abs(ad_, bd_, 2); }

TrigPoly canonicalize(const BivariatePoly& source) { return TrigPoly(source); }

TrigPoly restrict_to_circle(const BivariatePoly& p, const Rational& radius) {
  return TrigPoly(scale_variables(p, radius));
}

namespace {

int sign_of(double v) { return (v > 0) - (v < 0); }

class RootIsolator {
 public:
  RootIsolator(const TrigPoly& t, const RootScanOptions& opts)
      : t_(t),
        opts_(opts),
        curvature_(t.curvature_bound()),
        touch_tol_(1e-9 * std::max(1.0, t.sup_bound())) {}

  RootScan run() {
    const std::size_t n = std::max<std::size_t>(opts_.initial_grid, 8);
    const double h = kTwoPi / static_cast<double>(n);
    const std::vector<double> vals = kernels::sample_uniform(t_, n);

    for (std::size_t i = 0; i < n; ++i) {
      const double a = h * static_cast<double>(i);
      const double b = h * static_cast<double>(i + 1);
      const double va = vals[i];
      const double vb = vals[(i + 1) % n];
      if (va == 0.0) {
        const int left = sign_of(vals[(i + n - 1) % n]);
        const int right = sign_of(vb);
        scan_.roots.push_back({a, left * right < 0 ? RootKind::simple : RootKind::degenerate, a, a});
        if (left * right >= 0) scan_.degenerate = true;
        continue;
      }
      if (vb == 0.0) continue;
      cell(a, b, va, vb, 0);
    }

    for (auto& r : scan_.roots) {
      r.theta = wrap(r.theta);
    }
    std::sort(scan_.roots.begin(), scan_.roots.end(), [](const ThetaRoot& x, const ThetaRoot& y) { return x.theta < y.theta; });
    return std::move(scan_);
  }

 private:
  static double wrap(double theta) {
    double w = std::fmod(theta, kTwoPi);
    if (w < 0) w += kTwoPi;
    if (w >= kTwoPi) w = 0.0;
    return w;
  }

  // t' keeps one sign on [a, b] when |t'(a)| exceeds the curvature bound times the width.
  bool monotone(double a, double b) const { return std::fabs(t_.derivative(a)) > curvature_ * (b - a); }

  void cell(double a, double b, double va, double vb, unsigned depth) {
    const bool last = depth >= opts_.max_refine_depth;
    if (sign_of(va) != sign_of(vb)) {
      if (last || monotone(a, b)) {
        bisect(a, b, va);
        return;
      }
    } else {
      const double w = b - a;
      if (std::min(std::fabs(va), std::fabs(vb)) > curvature_ * w * w / 8.0 || monotone(a, b)) return;
      double at = 0.0;
      const double low = min_abs_in(a, b, &at);
      if (low <= touch_tol_) {
        scan_.roots.push_back({at, RootKind::degenerate, a, b});
        scan_.degenerate = true;
        return;
      }
      if (last) return;
    }
    const double mid = 0.5 * (a + b);
    const double vm = t_(mid);
    if (vm == 0.0) {
      const int s_left = sign_of(va), s_right = sign_of(vb);
      scan_.roots.push_back({mid, s_left != s_right ? RootKind::simple : RootKind::degenerate, mid, mid});
      if (s_left == s_right) scan_.degenerate = true;
      return;
    }
    cell(a, mid, va, vm, depth + 1);
    cell(mid, b, vm, vb, depth + 1);
  }

  void bisect(double lo, double hi, double vlo) {
    const int slo = sign_of(vlo);
    while (hi - lo > opts_.tol) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      const double vm = t_(mid);
      if (vm == 0.0) {
        lo = hi = mid;
        break;
      }
      if (sign_of(vm) == slo) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    scan_.roots.push_back({0.5 * (lo + hi), RootKind::simple, lo, hi});
  }

  // Golden-section search for the minimum of |t| on [a, b].
  double min_abs_in(double a, double b, double* arg) const {
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - g * (b - a), x2 = a + g * (b - a);
    double f1 = std::fabs(t_(x1)), f2 = std::fabs(t_(x2));
    for (int it = 0; it < 80 && b - a > 1e-15; ++it) {
      if (f1 < f2) {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - g * (b - a);
        f1 = std::fabs(t_(x1));
      } else {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + g * (b - a);
        f2 = std::fabs(t_(x2));
      }
    }
    *arg = f1 < f2 ? x1 : x2;
    return std::min(f1, f2);
  }

  const TrigPoly& t_;
  RootScanOptions opts_;
  double curvature_;
  double touch_tol_;
  RootScan scan_;
};

}  // namespace

RootScan roots_on_circle(const TrigPoly& t, const RootScanOptions& opts) {
  if (t.is_zero()) throw Error("roots_on_circle: trig polynomial is identically zero");
  if (!(opts.tol > 0)) throw Error("roots_on_circle: tolerance must be positive");
  return RootIsolator(t, opts).run();
}

std::vector<SignArc> sign_arcs(const TrigPoly& t, const std::vector<ThetaRoot>& roots) {
  std::vector<SignArc> arcs;
  if (roots.empty()) {
    arcs.push_back({0.0, kTwoPi, sign_of(t(0.0))});
    return arcs;
  }
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const double from = roots[i].theta;
    const double to = i + 1 < roots.size() ? roots[i + 1].theta : roots[0].theta + kTwoPi;
    arcs.push_back({from, to, sign_of(t(0.5 * (from + to)))});
  }
  return arcs;
}

MinAbsBound certified_min_abs(const TrigPoly& t, std::size_t initial_grid, std::size_t max_grid) {
  if (t.is_zero()) throw Error("certified_min_abs: trig polynomial is identically zero");
  const double lip = t.lipschitz_bound();
  const double norm = t.sup_bound();
  const double near_zero = 1e-12 * std::max(1.0, norm);
  // Fourier evaluation rounding; generous for harmonics in the tens.
  const double slack = 64.0 * std::numeric_limits<double>::epsilon() * static_cast<double>(t.harmonic_degree() + 1) * norm;

  MinAbsBound out;
  for (std::size_t n = std::max<std::size_t>(initial_grid, 8); n <= max_grid; n *= 2) {
    const std::vector<double> vals = kernels::sample_uniform(t, n);
    const double h = kTwoPi / static_cast<double>(n);
    std::size_t argmin = 0;
    int first_sign = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (std::fabs(vals[i]) < std::fabs(vals[argmin])) argmin = i;
      const int s = sign_of(vals[i]);
      if (s != 0 && first_sign == 0) first_sign = s;
      if (s != 0 && s != first_sign) {
        out.bound = 0.0;
        out.status = MinAbsStatus::has_root;
        out.witness_theta = h * static_cast<double>(i);
        out.witness_value = vals[i];
        return out;
      }
    }
    out.witness_theta = h * static_cast<double>(argmin);
    out.witness_value = vals[argmin];
    const double m = std::fabs(vals[argmin]);
    if (m <= near_zero) {
      out.bound = 0.0;
      out.status = MinAbsStatus::inconclusive;
      return out;
    }
    const double bound = m - lip * (std::numbers::pi / static_cast<double>(n)) - slack;
    if (bound > 0.0) {
      out.bound = bound;
      out.status = MinAbsStatus::certified;
      return out;
    }
  }
  out.bound = 0.0;
  out.status = MinAbsStatus::inconclusive;
  return out;
}

}  // namespace poincare
