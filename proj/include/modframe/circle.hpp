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
 * The N-fold covering z -> z^N of the circle, its composition endomorphism
 * and averaging transfer operator on Laurent polynomials, and the filter
 * banks attached to them.  In coefficient form the endomorphism is exact
 * upsampling (k -> N*k) and the transfer operator is exact downsampling
 * (only multiples of N survive), so every identity here can be checked to
 * rounding error.
 */

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "modframe/laurent.hpp"

namespace modframe {

struct CircleSystem {
  int N;  // covering degree, at least 2

  explicit CircleSystem(int n) : N(n) {
    if (n < 2) throw std::invalid_argument("CircleSystem: N must be >= 2");
  }
};

enum class BankKind { orthonormal, parseval, unverified };

// filters[0] plays the low-pass role.
struct FilterBank {
  CircleSystem system;
  std::vector<LaurentPoly> filters;
  BankKind kind = BankKind::unverified;
};

// f(z) -> f(z^N): coefficient at k moves to N*k.
inline LaurentPoly upsample(const LaurentPoly& f, int N) {
  std::map<long, cplx> out;
  for (const auto& [k, a] : f.coeffs()) out[static_cast<long>(N) * k] = a;
  return LaurentPoly(std::move(out));
}

inline LaurentPoly upsample_pow(const LaurentPoly& f, int N, int times) {
  LaurentPoly out = f;
  for (int i = 0; i < times; ++i) out = upsample(out, N);
  return out;
}

// Averaging over N-th roots: only coefficients at multiples of N survive,
// and the one at N*k lands at k.
inline LaurentPoly downsample(const LaurentPoly& f, int N) {
  std::map<long, cplx> out;
  for (const auto& [k, a] : f.coeffs())
    if (k % N == 0) out[k / N] = a;
  return LaurentPoly(std::move(out));
}

// level-fold downsampling in closed form: coefficient at N^level * k -> k.
inline LaurentPoly downsample_pow(const LaurentPoly& f, int N, int level) {
  if (level < 0) throw std::invalid_argument("downsample_pow: negative level");
  long scale = 1;
  for (int i = 0; i < level; ++i) scale *= N;
  std::map<long, cplx> out;
  for (const auto& [k, a] : f.coeffs())
    if (k % scale == 0) out[k / scale] = a;
  return LaurentPoly(std::move(out));
}

// Module inner product at the given level: downsample_pow(star(f)*g).
inline LaurentPoly transfer_inner(const LaurentPoly& f, const LaurentPoly& g,
                                  const CircleSystem& sys, int level = 1) {
  return downsample_pow(f.star() * g, sys.N, level);
}

// Synthesis operator of the filter m: upsample then multiply.
inline LaurentPoly synthesis(const LaurentPoly& m, const LaurentPoly& f,
                             const CircleSystem& sys) {
  return m * upsample(f, sys.N);
}

// Analysis operator, the adjoint of synthesis.
inline LaurentPoly analysis(const LaurentPoly& m, const LaurentPoly& g,
                            const CircleSystem& sys) {
  return downsample(m.star() * g, sys.N);
}

// How far m is from satisfying <m, m> = 1.
inline double filter_defect(const LaurentPoly& m, const CircleSystem& sys) {
  return coeff_distance(transfer_inner(m, m, sys), LaurentPoly::one());
}

inline bool is_filter(const LaurentPoly& m, const CircleSystem& sys,
                      double eps = kDefaultTol) {
  return filter_defect(m, sys) <= eps;
}

// Deviation of m(1) from sqrt(N).  Advisory only: a filter without this
// normalization still generates a valid bank, so callers report it as a
// warning rather than a failure.
inline double lowpass_defect(const LaurentPoly& m, const CircleSystem& sys) {
  return std::abs(m.eval(0LL, 1LL) - cplx(std::sqrt(double(sys.N)), 0.0));
}

// Conjugate mirror partner for two-band systems:
// partner(z) = z * conj(m0(-z)), in coefficients
// partner_k = conj(m0_{1-k}) * (-1)^{1-k}.
inline LaurentPoly qmf_partner(const LaurentPoly& m0, const CircleSystem& sys) {
  if (sys.N != 2)
    throw std::invalid_argument("qmf_partner: defined only for N == 2");
  std::map<long, cplx> out;
  for (const auto& [j, a] : m0.coeffs()) {
    const long k = 1 - j;  // spectator index: coefficient j of m0 feeds k
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    out[k] = std::conj(a) * sign;
  }
  return LaurentPoly(std::move(out));
}

// {1, z, ..., z^{N-1}} is an orthonormal bank for any N.
inline FilterBank monomial_basis(const CircleSystem& sys) {
  std::vector<LaurentPoly> filters;
  filters.reserve(sys.N);
  for (int j = 0; j < sys.N; ++j) filters.push_back(LaurentPoly::monomial(j));
  return FilterBank{sys, std::move(filters), BankKind::orthonormal};
}

// Completion of a single filter to a normalized tight bank: append
// (1 - synthesis(m0) analysis(m0)) e_j for each basis element e_j.
// Zero elements are kept; the bank stays a valid tight frame with them.
inline FilterBank parseval_complete(const LaurentPoly& m0,
                                    const FilterBank& basis) {
  const CircleSystem& sys = basis.system;
  std::vector<LaurentPoly> filters;
  filters.reserve(basis.filters.size() + 1);
  filters.push_back(m0);
  for (const auto& e : basis.filters)
    filters.push_back(e - synthesis(m0, analysis(m0, e, sys), sys));
  return FilterBank{sys, std::move(filters), BankKind::parseval};
}

struct BankOrthoReport {
  bool ok = true;
  double max_defect = 0.0;
  std::size_t worst_i = 0;
  std::size_t worst_j = 0;
};

// Pairwise check <m_i, m_j> = delta_ij; reports the worst offender.
inline BankOrthoReport check_orthonormal_bank(const FilterBank& bank,
                                              double eps = kDefaultTol) {
  BankOrthoReport rep;
  const std::size_t n = bank.filters.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const LaurentPoly ip =
          transfer_inner(bank.filters[i], bank.filters[j], bank.system);
      const LaurentPoly expect =
          (i == j) ? LaurentPoly::one() : LaurentPoly::zero();
      const double d = coeff_distance(ip, expect);
      if (d > rep.max_defect) {
        rep.max_defect = d;
        rep.worst_i = i;
        rep.worst_j = j;
      }
    }
  }
  rep.ok = rep.max_defect <= eps;
  return rep;
}

}  // namespace modframe
