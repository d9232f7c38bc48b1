#include "fraclap/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

#include "fraclap/error.hpp"

namespace fraclap {

HolderSpec::HolderSpec(double beta_, double sigma_) : beta(beta_), sigma(sigma_) {
  if (!(beta > 0.0)) {
    throw InvalidArgument("beta must be positive");
  }
  if (sigma < -beta) {
    throw InvalidArgument("sigma must be at least -beta");
  }
  if (k() > 2) {
    throw InvalidArgument("derivatives beyond second order are not supported");
  }
}

int HolderSpec::k() const { return static_cast<int>(std::ceil(beta)) - 1; }

namespace {

// Fornberg's recursion: weights of the order-m derivative at x0 from the nodes xs.
std::vector<double> fd_weights(double x0, const std::vector<double>& xs, int m) {
  const std::size_t n = xs.size();
  std::vector<std::vector<double>> c(n, std::vector<double>(m + 1, 0.0));
  double c1 = 1.0;
  double c4 = xs[0] - x0;
  c[0][0] = 1.0;
  for (std::size_t i = 1; i < n; ++i) {
    const int mn = std::min<int>(static_cast<int>(i), m);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = xs[i] - x0;
    for (std::size_t j = 0; j < i; ++j) {
      const double c3 = xs[i] - xs[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) {
          c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        }
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k) {
        c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
      }
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = c[i][m];
  }
  return w;
}

std::vector<std::size_t> scan_indices(std::size_t M, std::size_t cap) {
  std::vector<std::size_t> idx;
  if (M <= cap) {
    idx.resize(M);
    for (std::size_t i = 0; i < M; ++i) {
      idx[i] = i;
    }
    return idx;
  }
  idx.resize(cap);
  for (std::size_t i = 0; i < cap; ++i) {
    idx[i] = static_cast<std::size_t>(std::llround(static_cast<double>(i) * (M - 1) / (cap - 1)));
  }
  return idx;
}

// sup over pairs of weight(i, j) |D_i - D_j| / |x_i - x_j|^exponent.
template <class W>
HolderEstimate scan(const GridFunction& f, const std::vector<double>& D, double exponent, double min_sep,
                    const PairScanOptions& opts, const W& weight) {
  const auto& x = f.nodes();
  const std::vector<std::size_t> idx = scan_indices(x.size(), opts.max_nodes);
  HolderEstimate est;
  est.min_separation = min_sep;
  for (std::size_t a = 0; a < idx.size(); ++a) {
    const std::size_t i = idx[a];
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      const std::size_t j = idx[b];
      const double gap = x[j] - x[i];
      if (gap < min_sep || gap <= 0.0) {
        continue;
      }
      ++est.pairs_scanned;
      const double q = weight(i, j) * std::abs(D[i] - D[j]) / std::pow(gap, exponent);
      if (q > est.value) {
        est.value = q;
        est.argmax_pair = {x[i], x[j]};
      }
    }
  }
  if (est.pairs_scanned < opts.min_pairs) {
    throw GridTooCoarse("fewer admissible pairs than required for a seminorm estimate");
  }
  return est;
}

double default_separation(const GridFunction& f, const PairScanOptions& opts) {
  return opts.min_separation ? *opts.min_separation : 4.0 * f.spacing();
}

}  // namespace

std::vector<double> derivative(const GridFunction& f, int k) {
  const auto& x = f.nodes();
  const auto& v = f.values();
  if (k == 0) {
    return v;
  }
  if (k < 0 || k > 2) {
    throw InvalidArgument("derivative order must be 0, 1 or 2");
  }
  const std::size_t n = x.size();
  const std::size_t width = k == 1 ? 3 : 4;
  if (n < width) {
    throw GridTooCoarse("too few nodes for a second-order finite difference");
  }
  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t lo;
    std::size_t len;
    if (i == 0) {
      lo = 0;
      len = width;
    } else if (i + 1 == n) {
      lo = n - width;
      len = width;
    } else {
      lo = i - 1;
      len = 3;
    }
    std::vector<double> xs(x.begin() + lo, x.begin() + lo + len);
    const std::vector<double> w = fd_weights(x[i], xs, k);
    double acc = 0.0;
    for (std::size_t j = 0; j < len; ++j) {
      acc += w[j] * v[lo + j];
    }
    d[i] = acc;
  }
  return d;
}

HolderEstimate holder_seminorm(const GridFunction& f, double beta, const PairScanOptions& opts) {
  const HolderSpec spec(beta, 0.0);
  const std::vector<double> D = derivative(f, spec.k());
  return scan(f, D, spec.beta_prime(), default_separation(f, opts), opts,
              [](std::size_t, std::size_t) { return 1.0; });
}

HolderEstimate weighted_seminorm(const GridFunction& f, const HolderSpec& spec, const PairScanOptions& opts) {
  const std::vector<double> D = derivative(f, spec.k());
  std::vector<double> d(f.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    d[i] = f.distance(i);
  }
  const double p = spec.beta + spec.sigma;
  return scan(f, D, spec.beta_prime(), default_separation(f, opts), opts,
              [&](std::size_t i, std::size_t j) { return std::pow(std::min(d[i], d[j]), p); });
}

double weighted_norm(const GridFunction& f, const HolderSpec& spec, const PairScanOptions& opts) {
  if (!(spec.sigma > -1.0)) {
    throw InvalidArgument("the weighted norm needs sigma > -1");
  }
  double total = weighted_seminorm(f, spec, opts).value;
  const int first = spec.sigma >= 0.0 ? 0 : 1;
  if (spec.sigma < 0.0) {
    total += f.max_abs() + holder_seminorm(f, -spec.sigma, opts).value;
  }
  for (int l = first; l <= spec.k(); ++l) {
    const std::vector<double> D = derivative(f, l);
    double sup = 0.0;
    for (std::size_t i = 0; i < D.size(); ++i) {
      sup = std::max(sup, std::pow(f.distance(i), l + spec.sigma) * std::abs(D[i]));
    }
    total += sup;
  }
  return total;
}

FunctionHandle extension_E(const GridFunction& w, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw InvalidArgument("alpha must lie in (0,1]");
  }
  if (w.size() == 0) {
    throw InvalidArgument("extension needs at least one sample");
  }
  PairScanOptions all;
  all.min_separation = 0.0;
  all.min_pairs = 0;
  all.max_nodes = std::numeric_limits<std::size_t>::max();
  const double L = scan(w, w.values(), alpha, 0.0, all, [](std::size_t, std::size_t) { return 1.0; }).value;
  const double cap = w.max_abs();
  auto samples = std::make_shared<const GridFunction>(w);
  auto eval = [samples, L, cap, alpha](double x) {
    const auto& z = samples->nodes();
    const auto& v = samples->values();
    auto it = std::lower_bound(z.begin(), z.end(), x);
    if (it != z.end() && *it == x) {
      return v[it - z.begin()];
    }
    double best = cap;
    for (std::size_t i = 0; i < z.size(); ++i) {
      best = std::min(best, v[i] + L * std::pow(std::abs(z[i] - x), alpha));
    }
    return best;
  };
  std::vector<double> kinks{w.nodes().front(), w.nodes().back()};
  return FunctionHandle::on_line(eval, kinks, 0.0, std::nullopt, Smoothness::CAlphaOnly);
}

RateFit fit_power_law(const std::vector<double>& rho, const std::vector<double>& value) {
  if (rho.size() != value.size() || rho.size() < 2) {
    throw InvalidArgument("a power-law fit needs at least two paired samples");
  }
  const std::size_t n = rho.size();
  std::vector<double> X(n);
  std::vector<double> Y(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(rho[i] > 0.0 && value[i] > 0.0)) {
      throw InvalidArgument("power-law samples must be positive");
    }
    X[i] = std::log(rho[i]);
    Y[i] = std::log(value[i]);
  }
  RateFit fit;
  fit.count = n;
  if (std::all_of(value.begin(), value.end(), [&](double v) { return v == value.front(); })) {
    fit.slope = 0.0;
    fit.intercept = Y.front();
    fit.r_squared = std::numeric_limits<double>::quiet_NaN();
    fit.degenerate = true;
    return fit;
  }
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += X[i];
    my += Y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (X[i] - mx) * (X[i] - mx);
    sxy += (X[i] - mx) * (Y[i] - my);
    syy += (Y[i] - my) * (Y[i] - my);
  }
  if (sxx == 0.0) {
    throw InvalidArgument("power-law fit needs distinct abscissae");
  }
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double sse = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = Y[i] - (fit.intercept + fit.slope * X[i]);
    sse += r * r;
  }
  fit.r_squared = syy > 0.0 ? 1.0 - sse / syy : 1.0;
  return fit;
}

RateFit rate_fit(const std::vector<double>& rho, const std::vector<double>& value) {
  if (rho.size() < 4) {
    throw InvalidArgument("rate_fit needs at least four samples");
  }
  const auto [lo, hi] = std::minmax_element(rho.begin(), rho.end());
  if (!(*lo > 0.0) || *hi / *lo < 10.0 * (1.0 - 1e-12)) {
    throw InvalidArgument("rate_fit samples must span at least one decade");
  }
  return fit_power_law(rho, value);
}

}  // namespace fraclap
