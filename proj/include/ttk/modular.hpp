#pragma once

// Word-size prime field arithmetic, interpolation and Chinese remaindering,
// used to recover integer polynomials from evaluations.

#include <cstdint>
#include <vector>

#include "ttk/error.hpp"
#include "ttk/laurent.hpp"

namespace ttk::modular {

class Field {
 public:
  explicit Field(std::uint64_t p) : p_(p) {}

  std::uint64_t prime() const noexcept { return p_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t out = 1;
    while (e != 0) {
      if ((e & 1U) != 0) out = mul(out, a);
      a = mul(a, a);
      e >>= 1;
    }
    return out;
  }
  std::uint64_t inv(std::uint64_t a) const {
    require(a != 0, ErrorKind::invalid_argument, "inverse of zero in prime field");
    return pow(a, p_ - 2);
  }
  // Requires p < 2^63.
  std::uint64_t from_signed(long v) const {
    const auto m = static_cast<long>(p_);
    long r = v % m;
    return static_cast<std::uint64_t>(r < 0 ? r + m : r);
  }

 private:
  std::uint64_t p_;
};

// Deterministic sequence of distinct 62-bit primes.
inline std::uint64_t prime(std::size_t index) {
  Integer start = Integer(1) << 61;
  start += Integer(static_cast<unsigned long>(index)) * (Integer(1) << 40);
  Integer p;
  mpz_nextprime(p.get_mpz_t(), start.get_mpz_t());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, p.get_mpz_t());
  return out;
}

// Determinant of a dense square matrix (row-major), destroying it.
inline std::uint64_t determinant(std::vector<std::uint64_t>& a, std::size_t n, const Field& f) {
  std::uint64_t det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot * n + col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a[pivot * n + k], a[col * n + k]);
      det = f.neg(det);
    }
    const std::uint64_t pv = a[col * n + col];
    det = f.mul(det, pv);
    const std::uint64_t pinv = f.inv(pv);
    for (std::size_t r = col + 1; r < n; ++r) {
      const std::uint64_t factor = f.mul(a[r * n + col], pinv);
      if (factor == 0) continue;
      for (std::size_t k = col; k < n; ++k) a[r * n + k] = f.sub(a[r * n + k], f.mul(factor, a[col * n + k]));
    }
  }
  return det;
}

// Coefficients c_0..c_{N-1} of the polynomial taking value ys[i] at x = i + 1.
inline std::vector<std::uint64_t> interpolate_consecutive(const std::vector<std::uint64_t>& ys, const Field& f) {
  const std::size_t n = ys.size();
  // Newton divided differences; nodes i+1 and i+1-j differ by j.
  std::vector<std::uint64_t> coef = ys;
  for (std::size_t j = 1; j < n; ++j) {
    const std::uint64_t inv_j = f.inv(j % f.prime());
    for (std::size_t i = n - 1; i >= j; --i) {
      coef[i] = f.mul(f.sub(coef[i], coef[i - 1]), inv_j);
      if (i == j) break;
    }
  }
  // poly = poly * (x - node_k) + coef[k], from the innermost term out.
  std::vector<std::uint64_t> poly(n, 0);
  for (std::size_t k = n; k-- > 0;) {
    const std::uint64_t node = (k + 1) % f.prime();
    for (std::size_t i = n - 1; i >= 1; --i) poly[i] = f.sub(poly[i - 1], f.mul(poly[i], node));
    poly[0] = f.sub(coef[k], f.mul(poly[0], node));
  }
  return poly;
}

// Incremental Chinese remaindering of coefficient vectors, with symmetric lift.
class CrtAccumulator {
 public:
  void add(const std::vector<std::uint64_t>& residues, std::uint64_t p) {
    const Integer pz = as_integer(p);
    if (values_.empty()) {
      values_.reserve(residues.size());
      for (auto r : residues) values_.push_back(as_integer(r));
      modulus_ = pz;
      return;
    }
    require(residues.size() == values_.size(), ErrorKind::invalid_argument, "residue vectors differ in length");
    Integer inv;
    mpz_invert(inv.get_mpz_t(), Integer(modulus_ % pz).get_mpz_t(), pz.get_mpz_t());
    for (std::size_t i = 0; i < values_.size(); ++i) {
      Integer diff = as_integer(residues[i]) - values_[i] % pz;
      Integer t = (diff * inv) % pz;
      if (t < 0) t += pz;
      values_[i] += modulus_ * t;
    }
    modulus_ *= pz;
  }

  std::vector<Integer> symmetric() const {
    std::vector<Integer> out;
    out.reserve(values_.size());
    const Integer half = modulus_ / 2;
    for (const auto& v : values_) out.push_back(v > half ? Integer(v - modulus_) : v);
    return out;
  }

 private:
  static Integer as_integer(std::uint64_t v) {
    Integer out;
    mpz_import(out.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return out;
  }

  std::vector<Integer> values_;
  Integer modulus_ = 1;
};

}  // namespace ttk::modular
