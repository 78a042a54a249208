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
 * Multi-level frames built from a filter bank.  A word (j_1, ..., j_k) over
 * the bank indices names the product m_{j_1} * up(m_{j_2}) * ... *
 * up^{k-1}(m_{j_k}); the words that start with a nonzero letter ("fresh"
 * words), together with the empty word, embed into any higher level and form
 * a normalized tight frame there.  For an orthonormal bank of size J the
 * embedded words of length <= K are exactly the J^K words of length K.
 */

#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "modframe/circle.hpp"

namespace modframe {

struct LevelElement {
  int level = 0;  // lives in the module of the level-fold covering
  LaurentPoly poly;
};

struct FrameWord {
  std::vector<int> letters;  // indices into FilterBank::filters

  bool fresh() const { return letters.empty() || letters.front() > 0; }

  std::string label() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (i) os << ',';
      os << letters[i];
    }
    os << ')';
    return os.str();
  }
};

// All fresh words of length 0..max_len over an alphabet of the given size,
// in length-lexicographic order.  Count is alphabet^max_len.
inline std::vector<FrameWord> fresh_words(int alphabet, int max_len) {
  if (alphabet < 1) throw std::invalid_argument("fresh_words: empty alphabet");
  std::vector<FrameWord> out;
  out.push_back(FrameWord{});
  if (alphabet == 1) return out;  // no fresh letter exists
  for (int len = 1; len <= max_len; ++len) {
    std::vector<int> w(len, 0);
    w[0] = 1;  // first letter nonzero keeps the word out of lower levels
    while (true) {
      out.push_back(FrameWord{w});
      int i = len - 1;
      while (i >= 0) {
        if (++w[i] < alphabet) break;
        w[i] = (i == 0) ? 1 : 0;
        --i;
      }
      if (i < 0) break;
    }
  }
  return out;
}

// Product m_{j_1} * up(m_{j_2}) * ... * up^{k-1}(m_{j_k}); the empty word
// gives the unit at level 0.
inline LevelElement word_poly(const FrameWord& w, const FilterBank& bank) {
  LaurentPoly p = LaurentPoly::one();
  for (std::size_t l = 0; l < w.letters.size(); ++l) {
    const int j = w.letters[l];
    if (j < 0 || static_cast<std::size_t>(j) >= bank.filters.size())
      throw std::invalid_argument("word_poly: letter out of range");
    p = p * upsample_pow(bank.filters[j], bank.system.N,
                         static_cast<int>(l));
  }
  return LevelElement{static_cast<int>(w.letters.size()), p};
}

// Isometric embedding into level K: prepend low-pass factors.
inline LevelElement embed(const LevelElement& x, int K, const FilterBank& bank) {
  if (K < x.level) throw std::invalid_argument("embed: target level too low");
  if (bank.filters.empty()) throw std::invalid_argument("embed: empty bank");
  const int N = bank.system.N;
  LaurentPoly p = LaurentPoly::one();
  for (int i = 0; i < K - x.level; ++i)
    p = p * upsample_pow(bank.filters[0], N, i);
  p = p * upsample_pow(x.poly, N, K - x.level);
  return LevelElement{K, p};
}

// The fresh words up to length K, all embedded at level K.
inline std::vector<LevelElement> frame_at_level(const FilterBank& bank, int K) {
  std::vector<LevelElement> out;
  for (const auto& w :
       fresh_words(static_cast<int>(bank.filters.size()), K))
    out.push_back(embed(word_poly(w, bank), K, bank));
  return out;
}

struct FrameCheck {
  bool ok = false;
  double max_error = 0.0;        // coefficient distance of the final identity
  double partial_floor = 0.0;    // most negative partial-sum evaluation seen
  std::string witness;
};

// Sum of <x,x_j><x_j,x> must reproduce <x,x>; every partial sum must stay
// below <x,x> pointwise (checked on a 256-point circle grid).
inline FrameCheck verify_frame_identity(const LaurentPoly& x,
                                        const std::vector<LevelElement>& frame,
                                        const FilterBank& bank, int K,
                                        double eps = kDefaultTol) {
  const CircleSystem& sys = bank.system;
  const LaurentPoly target = transfer_inner(x, x, sys, K);
  LaurentPoly acc = LaurentPoly::zero();
  FrameCheck res;
  const int grid = 256;
  for (std::size_t j = 0; j < frame.size(); ++j) {
    const LaurentPoly a = transfer_inner(x, frame[j].poly, sys, K);
    acc = acc + a * a.star();
    const LaurentPoly slack = target - acc;
    for (int i = 0; i < grid; ++i) {
      const cplx v = slack.eval(static_cast<long long>(i),
                                static_cast<long long>(grid));
      res.partial_floor = std::min(res.partial_floor, v.real());
      res.partial_floor = std::min(res.partial_floor, -std::abs(v.imag()));
    }
    if (res.partial_floor < -eps && res.witness.empty()) {
      std::ostringstream os;
      os << "partial sum through element " << j << " exceeds <x,x>";
      res.witness = os.str();
    }
  }
  res.max_error = coeff_distance(acc, target);
  res.ok = res.max_error <= eps && res.partial_floor >= -eps;
  if (!res.ok && res.witness.empty()) res.witness = "frame identity defect";
  return res;
}

// x must equal sum_j x_j * up^K(<x_j, x>).
inline FrameCheck verify_reconstruction(const LaurentPoly& x,
                                        const std::vector<LevelElement>& frame,
                                        const FilterBank& bank, int K,
                                        double eps = kDefaultTol) {
  const CircleSystem& sys = bank.system;
  LaurentPoly acc = LaurentPoly::zero();
  for (const auto& el : frame)
    acc = acc + el.poly * upsample_pow(transfer_inner(el.poly, x, sys, K),
                                       sys.N, K);
  FrameCheck res;
  res.max_error = coeff_distance(acc, x);
  res.ok = res.max_error <= eps;
  if (!res.ok) res.witness = "reconstruction defect";
  return res;
}

// Fresh words of length < K, embedded at K, are orthogonal to fresh words of
// length exactly K; returns the worst pairing.
inline FrameCheck complement_check(const FilterBank& bank, int K,
                                   double eps = kDefaultTol) {
  const CircleSystem& sys = bank.system;
  const int alphabet = static_cast<int>(bank.filters.size());
  std::vector<LevelElement> shallow;
  std::vector<FrameWord> shallow_words;
  std::vector<LevelElement> deep;
  std::vector<FrameWord> deep_words;
  for (const auto& w : fresh_words(alphabet, K)) {
    if (static_cast<int>(w.letters.size()) < K) {
      shallow.push_back(embed(word_poly(w, bank), K, bank));
      shallow_words.push_back(w);
    } else {
      deep.push_back(word_poly(w, bank));
      deep_words.push_back(w);
    }
  }
  FrameCheck res;
  res.ok = true;
  for (std::size_t i = 0; i < shallow.size(); ++i) {
    for (std::size_t j = 0; j < deep.size(); ++j) {
      const double d = transfer_inner(shallow[i].poly, deep[j].poly, sys, K)
                           .max_abs_coeff();
      if (d > res.max_error) {
        res.max_error = d;
        res.witness =
            shallow_words[i].label() + " vs " + deep_words[j].label();
      }
    }
  }
  res.ok = res.max_error <= eps;
  return res;
}

}  // namespace modframe
