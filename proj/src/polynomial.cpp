#include "metgraph/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace metgraph {

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
}

double Polynomial::operator()(double t) const {
  double value = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) value = value * t + *it;
  return value;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() < 2) return {};
  std::vector<double> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = static_cast<double>(k) * c_[k];
  return Polynomial(std::move(d));
}

double Polynomial::integral(double a, double b) const {
  // Horner on the antiderivative
  double fa = 0.0;
  double fb = 0.0;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const double coeff = c_[k] / static_cast<double>(k + 1);
    fa = fa * a + coeff;
    fb = fb * b + coeff;
  }
  return fb * b - fa * a;
}

Polynomial Polynomial::shifted(double shift) const {
  // Horner with polynomial arithmetic: p(t + s)
  Polynomial result;
  const Polynomial linear({shift, 1.0});
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) result = result * linear + Polynomial::constant(*it);
  return result;
}

Polynomial Polynomial::reversed(double length) const {
  Polynomial result;
  const Polynomial linear({length, -1.0});
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) result = result * linear + Polynomial::constant(*it);
  return result;
}

Polynomial operator+(const Polynomial &a, const Polynomial &b) {
  std::vector<double> c(std::max(a.c_.size(), b.c_.size()), 0.0);
  for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial &a, const Polynomial &b) { return a + (-1.0) * b; }

Polynomial operator*(const Polynomial &a, const Polynomial &b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  std::vector<double> c(a.c_.size() + b.c_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(double s, const Polynomial &p) {
  std::vector<double> c = p.c_;
  for (double &x : c) x *= s;
  return Polynomial(std::move(c));
}

double max_coefficient_difference(const Polynomial &a, const Polynomial &b) {
  const int n = std::max(a.degree(), b.degree());
  double worst = 0.0;
  for (int k = 0; k <= n; ++k) worst = std::max(worst, std::abs(a.coefficient(k) - b.coefficient(k)));
  return worst;
}

} // namespace metgraph
