#pragma once

#include <initializer_list>
#include <span>
#include <vector>

namespace metgraph {

/// Dense real polynomial c0 + c1 t + c2 t^2 + ... in one variable.
class Polynomial {
public:
  Polynomial() = default;
  Polynomial(std::initializer_list<double> coefficients) : c_(coefficients) { trim(); }
  explicit Polynomial(std::vector<double> coefficients) : c_(std::move(coefficients)) { trim(); }

  static Polynomial constant(double value) { return Polynomial({value}); }

  /// Degree of the stored coefficient vector; the zero polynomial has degree 0.
  int degree() const { return c_.empty() ? 0 : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::span<const double> coefficients() const { return c_; }
  double coefficient(int k) const { return k < static_cast<int>(c_.size()) ? c_[k] : 0.0; }

  double operator()(double t) const;
  Polynomial derivative() const;
  /// Exact integral over [a, b].
  double integral(double a, double b) const;
  /// p(length - t): the same function in the reversed coordinate.
  Polynomial reversed(double length) const;
  /// p(t + shift).
  Polynomial shifted(double shift) const;

  friend Polynomial operator+(const Polynomial &a, const Polynomial &b);
  friend Polynomial operator-(const Polynomial &a, const Polynomial &b);
  friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
  friend Polynomial operator*(double s, const Polynomial &p);
  Polynomial operator-() const { return -1.0 * *this; }

private:
  void trim();

  std::vector<double> c_;
};

/// Max coefficient difference.
double max_coefficient_difference(const Polynomial &a, const Polynomial &b);

} // namespace metgraph
