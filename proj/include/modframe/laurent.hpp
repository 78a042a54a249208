/*
 * Copyright 2026 the modframe authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * Laurent polynomials with complex coefficients, viewed as functions on the
 * unit circle: f(z) = sum_k c_k z^k with z = exp(2*pi*i*t).  All value types
 * here are immutable in spirit; every operation returns a fresh value.
 */

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>
#include <utility>

namespace modframe {

using cplx = std::complex<double>;

// Coefficients with modulus below this are dropped on construction.
inline constexpr double kCoeffPrune = 1e-14;

// Default tolerance for bank/frame verification.
inline constexpr double kDefaultTol = 1e-10;

class LaurentPoly {
 public:
  LaurentPoly() = default;

  explicit LaurentPoly(std::map<long, cplx> coeffs) : c_(std::move(coeffs)) {
    prune();
  }

  LaurentPoly(std::initializer_list<std::pair<const long, cplx>> coeffs)
      : c_(coeffs) {
    prune();
  }

  static LaurentPoly monomial(long k, cplx a = cplx(1.0, 0.0)) {
    return LaurentPoly({{k, a}});
  }

  static LaurentPoly constant(cplx a) { return monomial(0, a); }

  static LaurentPoly one() { return constant(cplx(1.0, 0.0)); }

  static LaurentPoly zero() { return LaurentPoly(); }

  const std::map<long, cplx>& coeffs() const { return c_; }

  cplx coeff(long k) const {
    auto it = c_.find(k);
    return it == c_.end() ? cplx(0.0, 0.0) : it->second;
  }

  bool is_zero() const { return c_.empty(); }

  // Exponent range; zero polynomial reports [0, 0].
  long min_exponent() const { return c_.empty() ? 0 : c_.begin()->first; }
  long max_exponent() const { return c_.empty() ? 0 : c_.rbegin()->first; }

  double max_abs_coeff() const {
    double m = 0.0;
    for (const auto& [k, a] : c_) m = std::max(m, std::abs(a));
    return m;
  }

  // Adjoint in C(T): star(f)(z) = conj(f(z)), i.e. c_k -> conj(c_{-k}).
  LaurentPoly star() const {
    std::map<long, cplx> out;
    for (const auto& [k, a] : c_) out[-k] = std::conj(a);
    return LaurentPoly(std::move(out));
  }

  // Value at z = exp(2*pi*i*t).
  cplx eval(double t) const {
    t -= std::floor(t);
    cplx s(0.0, 0.0);
    for (const auto& [k, a] : c_) {
      const double kt = static_cast<double>(k) * t;
      s += a * std::polar(1.0, 2.0 * std::numbers::pi * (kt - std::floor(kt)));
    }
    return s;
  }

  // Value at the exact grid point t = num/den; the angle k*num/den is reduced
  // in integer arithmetic so grid symmetries survive to full precision.
  cplx eval(long long num, long long den) const {
    if (den == 0) throw std::invalid_argument("LaurentPoly::eval: den == 0");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    cplx s(0.0, 0.0);
    for (const auto& [k, a] : c_) {
      long long r = (static_cast<long long>(k) * num) % den;
      if (r < 0) r += den;
      s += a * std::polar(1.0, 2.0 * std::numbers::pi *
                                   (static_cast<double>(r) / static_cast<double>(den)));
    }
    return s;
  }

  friend LaurentPoly operator+(const LaurentPoly& f, const LaurentPoly& g) {
    std::map<long, cplx> out = f.c_;
    for (const auto& [k, a] : g.c_) out[k] += a;
    return LaurentPoly(std::move(out));
  }

  friend LaurentPoly operator-(const LaurentPoly& f, const LaurentPoly& g) {
    std::map<long, cplx> out = f.c_;
    for (const auto& [k, a] : g.c_) out[k] -= a;
    return LaurentPoly(std::move(out));
  }

  friend LaurentPoly operator-(const LaurentPoly& f) {
    std::map<long, cplx> out;
    for (const auto& [k, a] : f.c_) out[k] = -a;
    return LaurentPoly(std::move(out));
  }

  // Convolution of coefficient sequences.
  friend LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g) {
    std::map<long, cplx> out;
    for (const auto& [k, a] : f.c_)
      for (const auto& [l, b] : g.c_) out[k + l] += a * b;
    return LaurentPoly(std::move(out));
  }

  friend LaurentPoly operator*(cplx a, const LaurentPoly& f) {
    std::map<long, cplx> out;
    for (const auto& [k, b] : f.c_) out[k] = a * b;
    return LaurentPoly(std::move(out));
  }

  friend LaurentPoly operator*(const LaurentPoly& f, cplx a) { return a * f; }

 private:
  void prune() {
    for (auto it = c_.begin(); it != c_.end();) {
      if (std::abs(it->second) < kCoeffPrune)
        it = c_.erase(it);
      else
        ++it;
    }
  }

  std::map<long, cplx> c_;
};

// Sup over k of |f_k - g_k|.
inline double coeff_distance(const LaurentPoly& f, const LaurentPoly& g) {
  return (f - g).max_abs_coeff();
}

inline bool approx_equal(const LaurentPoly& f, const LaurentPoly& g,
                         double eps = kDefaultTol) {
  return coeff_distance(f, g) <= eps;
}

// Dense random polynomial on [lo, hi], coefficients uniform on [-1,1]^2.
inline LaurentPoly random_laurent(std::mt19937_64& rng, long lo, long hi) {
  if (lo > hi) throw std::invalid_argument("random_laurent: empty range");
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::map<long, cplx> out;
  for (long k = lo; k <= hi; ++k) {
    const double re = u(rng);
    const double im = u(rng);
    out[k] = cplx(re, im);
  }
  return LaurentPoly(std::move(out));
}

}  // namespace modframe
