#include "thrift/trigpoly.hpp"

#include <algorithm>
#include <cmath>

namespace thrift {

namespace {
// Merge a term into a frequency-sorted list, deduplicating within tol.
void merge_term(std::vector<std::pair<double, cplx_t>>& terms, double omega, cplx_t c,
                double ftol, double atol) {
  if (std::abs(c) <= atol) {
    // still allow cancellation against an existing entry below
  }
  auto it = std::lower_bound(terms.begin(), terms.end(), omega - ftol,
                             [](const auto& t, double w) { return t.first < w; });
  if (it != terms.end() && std::abs(it->first - omega) <= ftol) {
    it->second += c;
    if (std::abs(it->second) <= atol) terms.erase(it);
    return;
  }
  if (std::abs(c) <= atol) return;
  terms.insert(it, {omega, c});
}
}  // namespace

TrigPoly TrigPoly::constant(cplx_t c) {
  TrigPoly p;
  p.add_term(0.0, c);
  return p;
}

TrigPoly TrigPoly::exponential(double omega, cplx_t c) {
  TrigPoly p;
  p.add_term(omega, c);
  return p;
}

TrigPoly TrigPoly::cosine(double omega) {
  TrigPoly p;
  p.add_term(omega, 0.5);
  p.add_term(-omega, 0.5);
  return p;
}

TrigPoly TrigPoly::sine(double omega) {
  TrigPoly p;
  p.add_term(omega, cplx_t(0, -0.5));
  p.add_term(-omega, cplx_t(0, 0.5));
  return p;
}

void TrigPoly::add_term(double omega, cplx_t c) {
  merge_term(terms_, omega, c, kFreqTol, kAmpTol);
}

TrigPoly TrigPoly::operator+(const TrigPoly& o) const {
  TrigPoly out = *this;
  for (const auto& [w, c] : o.terms_) out.add_term(w, c);
  return out;
}

TrigPoly TrigPoly::operator*(const TrigPoly& o) const {
  TrigPoly out;
  for (const auto& [w1, c1] : terms_)
    for (const auto& [w2, c2] : o.terms_) out.add_term(w1 + w2, c1 * c2);
  return out;
}

TrigPoly TrigPoly::operator*(cplx_t s) const {
  TrigPoly out;
  for (const auto& [w, c] : terms_) out.add_term(w, c * s);
  return out;
}

cplx_t TrigPoly::evaluate(double t) const {
  cplx_t acc = 0;
  for (const auto& [w, c] : terms_) acc += c * std::exp(cplx_t(0, w * t));
  return acc;
}

bool TrigPoly::is_real(double tol) const {
  for (const auto& [w, c] : terms_) {
    cplx_t partner = 0;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), -w - kFreqTol,
                               [](const auto& t, double x) { return t.first < x; });
    if (it != terms_.end() && std::abs(it->first + w) <= kFreqTol) partner = it->second;
    if (std::abs(partner - std::conj(c)) > tol) return false;
  }
  return true;
}

cplx_t TrigPoly::integrate(double a, double b) const {
  cplx_t acc = 0;
  for (const auto& [w, c] : terms_) {
    if (std::abs(w) <= kFreqTol)
      acc += c * (b - a);
    else
      acc += c * (std::exp(cplx_t(0, w * b)) - std::exp(cplx_t(0, w * a))) / cplx_t(0, w);
  }
  return acc;
}

void LinTrigPoly::add_linear(double omega, cplx_t d) {
  merge_term(linear_, omega, d, TrigPoly::kFreqTol, TrigPoly::kAmpTol);
}

cplx_t LinTrigPoly::evaluate(double t) const {
  cplx_t acc = plain_.evaluate(t);
  for (const auto& [w, d] : linear_) acc += d * t * std::exp(cplx_t(0, w * t));
  return acc;
}

cplx_t LinTrigPoly::integrate(double a, double b) const {
  cplx_t acc = plain_.integrate(a, b);
  for (const auto& [w, d] : linear_) {
    if (std::abs(w) <= TrigPoly::kFreqTol) {
      acc += d * 0.5 * (b * b - a * a);
    } else {
      // antiderivative of t e^{iwt}: e^{iwt} (t/(iw) + 1/w^2)
      auto F = [&](double t) {
        return std::exp(cplx_t(0, w * t)) * (t / cplx_t(0, w) + 1.0 / (w * w));
      };
      acc += d * (F(b) - F(a));
    }
  }
  return acc;
}

LinTrigPoly LinTrigPoly::times(const TrigPoly& p) const {
  LinTrigPoly out(plain_ * p);
  for (const auto& [w1, d] : linear_)
    for (const auto& [w2, c] : p.terms()) out.add_linear(w1 + w2, d * c);
  return out;
}

LinTrigPoly antiderivative(const TrigPoly& f) {
  LinTrigPoly out;
  for (const auto& [w, c] : f.terms()) {
    if (std::abs(w) <= TrigPoly::kFreqTol)
      out.add_linear(0.0, c);  // c * t
    else
      out.add_plain(w, c / cplx_t(0, w));
  }
  return out;
}

}  // namespace thrift
