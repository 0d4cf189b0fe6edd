#pragma once
// Finite complex Fourier series f(t) = sum_k c_k e^{i w_k t} with exact
// closed-form integration; used for interaction-picture coefficients.

#include <complex>
#include <vector>

namespace thrift {

using cplx_t = std::complex<double>;

class TrigPoly {
 public:
  static constexpr double kFreqTol = 1e-12;
  static constexpr double kAmpTol = 1e-15;

  TrigPoly() = default;
  static TrigPoly constant(cplx_t c);
  static TrigPoly exponential(double omega, cplx_t c);  // c * e^{i omega t}
  static TrigPoly cosine(double omega);                 // cos(omega t)
  static TrigPoly sine(double omega);                   // sin(omega t)

  const std::vector<std::pair<double, cplx_t>>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add_term(double omega, cplx_t c);
  TrigPoly operator+(const TrigPoly& o) const;
  TrigPoly operator*(const TrigPoly& o) const;
  TrigPoly operator*(cplx_t s) const;

  cplx_t evaluate(double t) const;
  bool is_real(double tol = 1e-10) const;  // (-w, conj(c)) paired for every (w, c)

  cplx_t integrate(double a, double b) const;

 private:
  std::vector<std::pair<double, cplx_t>> terms_;  // sorted by frequency
};

// TrigPoly plus terms of the form d * t * e^{i omega t}; closed under
// antidifferentiation of TrigPoly and products with TrigPoly.
class LinTrigPoly {
 public:
  LinTrigPoly() = default;
  explicit LinTrigPoly(const TrigPoly& p) : plain_(p) {}

  void add_plain(double omega, cplx_t c) { plain_.add_term(omega, c); }
  void add_linear(double omega, cplx_t d);

  cplx_t evaluate(double t) const;
  cplx_t integrate(double a, double b) const;
  // this * p, products of t-linear terms with plain TrigPoly terms
  LinTrigPoly times(const TrigPoly& p) const;

  const TrigPoly& plain() const { return plain_; }
  const std::vector<std::pair<double, cplx_t>>& linear_terms() const { return linear_; }

 private:
  TrigPoly plain_;
  std::vector<std::pair<double, cplx_t>> linear_;
};

// Antiderivative G of f with G chosen so that constant terms map to c*t
// (t-linear part) and oscillatory terms to c/(i w) e^{i w t}.
LinTrigPoly antiderivative(const TrigPoly& f);

}  // namespace thrift
