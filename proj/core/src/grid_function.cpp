#include "fraclap/grid_function.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "fraclap/error.hpp"

namespace fraclap {

GridFunction::GridFunction(Domain dom, std::vector<double> nodes, std::vector<double> values)
    : dom_(dom), nodes_(std::move(nodes)), values_(std::move(values)) {
  if (dom_.dim() != 1) {
    throw InvalidArgument("grid functions live on one-dimensional domains");
  }
  if (nodes_.size() != values_.size()) {
    throw InvalidArgument("node and value counts differ");
  }
  if (!std::is_sorted(nodes_.begin(), nodes_.end()) ||
      std::adjacent_find(nodes_.begin(), nodes_.end()) != nodes_.end()) {
    throw InvalidArgument("grid nodes must be strictly increasing");
  }
}

GridFunction GridFunction::sample_interior(const Domain& dom, int N, const std::function<double(double)>& f) {
  if (N < 2) {
    throw InvalidArgument("need at least two cells");
  }
  const double h = (dom.upper() - dom.lower()) / N;
  std::vector<double> x(N - 1);
  std::vector<double> v(N - 1);
  for (int i = 1; i < N; ++i) {
    x[i - 1] = dom.lower() + i * h;
    v[i - 1] = f(x[i - 1]);
  }
  return {dom, std::move(x), std::move(v)};
}

GridFunction GridFunction::sample_closed(const Domain& dom, int N, const std::function<double(double)>& f) {
  if (N < 1) {
    throw InvalidArgument("need at least one cell");
  }
  const double h = (dom.upper() - dom.lower()) / N;
  std::vector<double> x(N + 1);
  std::vector<double> v(N + 1);
  for (int i = 0; i <= N; ++i) {
    x[i] = i == N ? dom.upper() : dom.lower() + i * h;
    v[i] = f(x[i]);
  }
  return {dom, std::move(x), std::move(v)};
}

double GridFunction::spacing() const {
  double h = INFINITY;
  for (std::size_t i = 1; i < nodes_.size(); ++i) {
    h = std::min(h, nodes_[i] - nodes_[i - 1]);
  }
  return h;
}

double GridFunction::max_abs() const {
  double m = 0.0;
  for (double v : values_) {
    m = std::max(m, std::abs(v));
  }
  return m;
}

double GridFunction::operator()(double x) const {
  const double a = dom_.lower();
  const double b = dom_.upper();
  if (nodes_.empty() || x < a || x > b) {
    return 0.0;
  }
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), x);
  if (it != nodes_.end() && *it == x) {
    return values_[it - nodes_.begin()];
  }
  double x0, x1, v0, v1;
  if (it == nodes_.begin()) {
    x0 = a;
    v0 = 0.0;
    x1 = nodes_.front();
    v1 = values_.front();
  } else if (it == nodes_.end()) {
    x0 = nodes_.back();
    v0 = values_.back();
    x1 = b;
    v1 = 0.0;
  } else {
    const std::size_t i = it - nodes_.begin();
    x0 = nodes_[i - 1];
    v0 = values_[i - 1];
    x1 = nodes_[i];
    v1 = values_[i];
  }
  if (x1 <= x0) {
    return v0;
  }
  return v0 + (v1 - v0) * (x - x0) / (x1 - x0);
}

GridFunction GridFunction::restrict(const std::function<bool(double)>& keep) const {
  std::vector<double> x;
  std::vector<double> v;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (keep(nodes_[i])) {
      x.push_back(nodes_[i]);
      v.push_back(values_[i]);
    }
  }
  return {dom_, std::move(x), std::move(v)};
}

GridFunction GridFunction::map(const std::function<double(double, double)>& op) const {
  std::vector<double> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = op(nodes_[i], values_[i]);
  }
  return {dom_, nodes_, std::move(v)};
}

}  // namespace fraclap
