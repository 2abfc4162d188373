#pragma once

// Alexander polynomial of a braid closure from the reduced Burau matrix.
//
// det(B(w) - I) = +-t^k (1 + t + ... + t^{n-1}) Delta(t). The determinant is
// evaluated at t = 1, 2, ... modulo word-size primes, interpolated over an
// exponent window bounded a priori, and lifted by Chinese remaindering until
// two consecutive lifts agree.

#include <algorithm>
#include <climits>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "ttk/braid.hpp"
#include "ttk/error.hpp"
#include "ttk/laurent.hpp"
#include "ttk/modular.hpp"

namespace ttk {

namespace burau {

// Row r = i-1 of the reduced generator for letter i: entries at columns
// r-1, r, r+1 as powers of t with unit coefficients, e.g. (t, -t, 1).
struct GeneratorRow {
  int exp_left, exp_mid, exp_right;
  int sign_mid;
};

inline GeneratorRow generator_row(int letter) {
  if (letter > 0) return {1, 1, 0, -1};  // t, -t, 1
  return {0, -1, -1, -1};                // 1, -t^-1, t^-1
}

// Exponent interval of every entry of B(w) - I; lo > hi marks a zero entry.
struct Support {
  int lo = 0;
  int hi = 0;
};

inline std::pair<long, long> determinant_window(const BraidWord& w) {
  const int d = w.strands() - 1;
  constexpr int empty_lo = INT_MAX / 4;
  constexpr int empty_hi = INT_MIN / 4;
  std::vector<Support> m(static_cast<std::size_t>(d * d), Support{empty_lo, empty_hi});
  for (int i = 0; i < d; ++i) m[static_cast<std::size_t>(i * d + i)] = {0, 0};
  auto at = [&](int a, int c) -> Support& { return m[static_cast<std::size_t>(a * d + c)]; };
  auto merge = [](Support x, Support y) { return Support{std::min(x.lo, y.lo), std::max(x.hi, y.hi)}; };
  auto shift = [](Support x, int k) { return x.lo > x.hi ? x : Support{x.lo + k, x.hi + k}; };

  for (int letter : w.letters()) {
    const int r = std::abs(letter) - 1;
    const GeneratorRow g = generator_row(letter);
    for (int a = 0; a < d; ++a) {
      const Support col_r = at(a, r);
      if (r - 1 >= 0) at(a, r - 1) = merge(at(a, r - 1), shift(col_r, g.exp_left));
      if (r + 1 < d) at(a, r + 1) = merge(at(a, r + 1), shift(col_r, g.exp_right));
      at(a, r) = shift(col_r, g.exp_mid);
    }
  }
  for (int i = 0; i < d; ++i) at(i, i) = merge(at(i, i), {0, 0});

  // Each term of the determinant takes one entry from every row, and from every column.
  long row_lo = 0, row_hi = 0, col_lo = 0, col_hi = 0;
  for (int a = 0; a < d; ++a) {
    int rl = INT_MAX, rh = INT_MIN, cl = INT_MAX, ch = INT_MIN;
    for (int c = 0; c < d; ++c) {
      const Support& x = at(a, c);
      if (x.lo <= x.hi) rl = std::min(rl, x.lo), rh = std::max(rh, x.hi);
      const Support& y = at(c, a);
      if (y.lo <= y.hi) cl = std::min(cl, y.lo), ch = std::max(ch, y.hi);
    }
    row_lo += rl, row_hi += rh, col_lo += cl, col_hi += ch;
  }
  return {std::max(row_lo, col_lo), std::min(row_hi, col_hi)};
}

// det(B(w)(x) - I) mod p.
inline std::uint64_t determinant_at(const BraidWord& w, std::uint64_t x, const modular::Field& f) {
  const std::size_t d = static_cast<std::size_t>(w.strands() - 1);
  if (d == 0) return 1;
  const std::uint64_t x_inv = f.inv(x);
  std::vector<std::uint64_t> m(d * d, 0);
  for (std::size_t i = 0; i < d; ++i) m[i * d + i] = 1;

  for (int letter : w.letters()) {
    const std::size_t r = static_cast<std::size_t>(std::abs(letter) - 1);
    std::uint64_t left, mid, right;
    if (letter > 0) {
      left = x, mid = f.neg(x), right = 1;
    } else {
      left = 1, mid = f.neg(x_inv), right = x_inv;
    }
    for (std::size_t a = 0; a < d; ++a) {
      std::uint64_t* row = m.data() + a * d;
      const std::uint64_t v = row[r];
      if (v == 0) continue;
      if (r >= 1) row[r - 1] = f.add(row[r - 1], f.mul(v, left));
      if (r + 1 < d) row[r + 1] = f.add(row[r + 1], f.mul(v, right));
      row[r] = f.mul(v, mid);
    }
  }
  for (std::size_t i = 0; i < d; ++i) m[i * d + i] = f.sub(m[i * d + i], 1);
  return modular::determinant(m, d, f);
}

inline constexpr std::size_t kMaxPrimes = 64;

// det(B(w) - I) as an exact Laurent polynomial in t.
inline LaurentPolynomial burau_determinant(const BraidWord& w) {
  if (w.strands() == 1) return LaurentPolynomial::constant(1);
  const auto [lo, hi] = determinant_window(w);
  if (lo > hi) return LaurentPolynomial("t");
  const std::size_t points = static_cast<std::size_t>(hi - lo + 1);

  modular::CrtAccumulator crt;
  std::vector<Integer> previous;
  for (std::size_t k = 0; k < kMaxPrimes; ++k) {
    const modular::Field f(modular::prime(k));
    std::vector<std::uint64_t> values(points);
    for (std::size_t i = 0; i < points; ++i) {
      const std::uint64_t x = i + 1;
      // x^-lo * det is an ordinary polynomial of degree < points.
      const std::uint64_t scale = lo <= 0 ? f.pow(x, static_cast<std::uint64_t>(-lo))
                                          : f.pow(f.inv(x), static_cast<std::uint64_t>(lo));
      values[i] = f.mul(scale, determinant_at(w, x, f));
    }
    crt.add(modular::interpolate_consecutive(values, f), f.prime());
    auto lifted = crt.symmetric();
    if (k >= 1 && lifted == previous) {
      LaurentPolynomial out("t");
      for (std::size_t i = 0; i < lifted.size(); ++i) out.add_term(static_cast<int>(lo + static_cast<long>(i)), lifted[i]);
      return out;
    }
    previous = std::move(lifted);
  }
  fail(ErrorKind::overflow, "Burau determinant coefficients did not stabilize");
}

// Same determinant by fraction-free elimination over Laurent polynomials.
inline LaurentPolynomial burau_determinant_exact(const BraidWord& w) {
  const int d = w.strands() - 1;
  if (d == 0) return LaurentPolynomial::constant(1);
  using P = LaurentPolynomial;
  std::vector<P> m(static_cast<std::size_t>(d * d), P("t"));
  auto at = [&](int a, int c) -> P& { return m[static_cast<std::size_t>(a * d + c)]; };
  for (int i = 0; i < d; ++i) at(i, i) = P::constant(1);
  for (int letter : w.letters()) {
    const int r = std::abs(letter) - 1;
    const GeneratorRow g = generator_row(letter);
    const P left = P::monomial(1, g.exp_left);
    const P mid = P::monomial(g.sign_mid, g.exp_mid);
    const P right = P::monomial(1, g.exp_right);
    for (int a = 0; a < d; ++a) {
      const P v = at(a, r);
      if (v.is_zero()) continue;
      if (r >= 1) at(a, r - 1) += v * left;
      if (r + 1 < d) at(a, r + 1) += v * right;
      at(a, r) = v * mid;
    }
  }
  for (int i = 0; i < d; ++i) at(i, i) -= P::constant(1);

  // Bareiss elimination with row swaps.
  P prev = P::constant(1);
  int sign = 1;
  for (int k = 0; k < d - 1; ++k) {
    int pivot = k;
    while (pivot < d && at(pivot, k).is_zero()) ++pivot;
    if (pivot == d) return P("t");
    if (pivot != k) {
      for (int c = 0; c < d; ++c) std::swap(at(pivot, c), at(k, c));
      sign = -sign;
    }
    for (int i = k + 1; i < d; ++i) {
      for (int j = k + 1; j < d; ++j) at(i, j) = (at(k, k) * at(i, j) - at(i, k) * at(k, j)).divided_by(prev);
      at(i, k) = P("t");
    }
    prev = at(k, k);
  }
  P det = at(d - 1, d - 1);
  return sign < 0 ? -det : det;
}

}  // namespace burau

// Symmetric representative with value 1 at t = 1.
inline LaurentPolynomial normalize_alexander(const LaurentPolynomial& p) {
  require(!p.is_zero(), ErrorKind::invalid_argument, "zero Alexander polynomial");
  const long span_sum = static_cast<long>(p.min_exponent()) + p.max_exponent();
  require(span_sum % 2 == 0, ErrorKind::invalid_argument, "Alexander polynomial has odd span: " + p.to_string());
  LaurentPolynomial out = p.shifted(static_cast<int>(-span_sum / 2));
  const Integer at_one = out.evaluate(1);
  require(at_one == 1 || at_one == -1, ErrorKind::invalid_argument,
          "Alexander polynomial must be +-1 at t = 1, got " + out.to_string());
  if (at_one < 0) out = -out;
  out.set_variable("t");
  return out;
}

inline LaurentPolynomial strand_sum(int strands) {
  LaurentPolynomial s("t");
  for (int i = 0; i < strands; ++i) s.add_term(i, 1);
  return s;
}

inline void require_knot(const BraidWord& w) {
  const int c = component_count(w);
  require(c == 1, ErrorKind::not_a_knot, "closure has " + std::to_string(c) + " components");
}

inline LaurentPolynomial alexander(const BraidWord& w) {
  require_knot(w);
  return normalize_alexander(burau::burau_determinant(w).divided_by(strand_sum(w.strands())));
}

// Exact-arithmetic route to the same polynomial, for small words.
inline LaurentPolynomial alexander_exact(const BraidWord& w) {
  require_knot(w);
  return normalize_alexander(burau::burau_determinant_exact(w).divided_by(strand_sum(w.strands())));
}

inline Integer knot_determinant(const LaurentPolynomial& alexander_poly) { return abs(alexander_poly.evaluate(-1)); }

}  // namespace ttk
