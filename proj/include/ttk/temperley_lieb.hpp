#pragma once

// Kauffman bracket of a braid closure through the Temperley-Lieb algebra.
//
// Each crossing acts as sigma_i -> A + A^-1 e_i (inverse: A^-1 + A e_i). The
// closure is the Markov trace, which splits over the standard modules V(n, d)
// (link states on n points with d through-lines):
//
//   Tr(x) = sum_d Delta_d(delta) * trace(x | V(n, d)),   bracket = Tr / delta,
//
// with Delta_0 = 1, Delta_1 = delta, Delta_{d+1} = delta Delta_d - Delta_{d-1}.
// Traces are accumulated one basis column at a time, so memory stays linear in
// the module dimension; the cost is sum_d dim(V(n, d))^2 = Catalan(n) columns
// steps per crossing.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <vector>

#include "ttk/braid.hpp"
#include "ttk/error.hpp"
#include "ttk/kauffman.hpp"
#include "ttk/laurent.hpp"

namespace ttk {

inline constexpr int kDefaultStrandLimit = 14;

namespace tl {

// Planar link states on `points` points with `defects` through-lines; a defect
// may not sit under a cup. partner[i] == -1 marks a defect.
class LinkStates {
 public:
  LinkStates(int points, int defects) : points_(points), defects_(defects) {
    std::vector<int> partner(points, -2);
    std::vector<int> open;
    enumerate(0, (points - defects) / 2, partner, open);
    for (std::size_t i = 0; i < states_.size(); ++i) index_.emplace(encode(states_[i]), static_cast<int>(i));
  }

  int points() const noexcept { return points_; }
  int defects() const noexcept { return defects_; }
  std::size_t size() const noexcept { return states_.size(); }
  const std::vector<int>& state(std::size_t i) const { return states_[i]; }

  int index_of(const std::vector<int>& partner) const {
    auto it = index_.find(encode(partner));
    if (it == index_.end()) fail(ErrorKind::invalid_argument, "link state outside the basis");
    return it->second;
  }

 private:
  static std::uint64_t encode(const std::vector<int>& partner) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < partner.size(); ++i) {
      const std::uint64_t code = partner[i] < 0 ? 0 : (partner[i] > static_cast<int>(i) ? 1 : 2);
      key |= code << (2 * i);
    }
    return key;
  }

  void enumerate(int pos, int cups_left, std::vector<int>& partner, std::vector<int>& open) {
    if (pos == points_) {
      if (open.empty()) states_.push_back(partner);
      return;
    }
    const int remaining = points_ - pos;
    const int defects_left = defects_ - static_cast<int>(std::count(partner.begin(), partner.begin() + pos, -1));
    if (open.empty() && defects_left > 0) {
      partner[pos] = -1;
      enumerate(pos + 1, cups_left, partner, open);
      partner[pos] = -2;
    }
    if (cups_left > 0 && static_cast<int>(open.size()) + 1 <= remaining - 1) {
      open.push_back(pos);
      enumerate(pos + 1, cups_left - 1, partner, open);
      open.pop_back();
    }
    if (!open.empty()) {
      const int a = open.back();
      open.pop_back();
      partner[a] = pos;
      partner[pos] = a;
      enumerate(pos + 1, cups_left, partner, open);
      partner[pos] = -2;
      partner[a] = -2;
      open.push_back(a);
    }
  }

  int points_;
  int defects_;
  std::vector<std::vector<int>> states_;
  std::unordered_map<std::uint64_t, int> index_;
};

enum class Weight : std::uint8_t { zero, one, loop };

struct Step {
  int target = -1;
  Weight weight = Weight::zero;
};

// steps[g][s] is e_{g+1} applied to state s.
inline std::vector<std::vector<Step>> generator_table(const LinkStates& basis) {
  const int n = basis.points();
  std::vector<std::vector<Step>> table(static_cast<std::size_t>(std::max(n - 1, 0)));
  for (int g = 0; g + 1 < n; ++g) {
    auto& row = table[static_cast<std::size_t>(g)];
    row.resize(basis.size());
    for (std::size_t s = 0; s < basis.size(); ++s) {
      std::vector<int> p = basis.state(s);
      const int i = g;
      const int j = g + 1;
      if (p[i] == j) {
        row[s] = {static_cast<int>(s), Weight::loop};
        continue;
      }
      if (p[i] == -1 && p[j] == -1) {
        row[s] = {-1, Weight::zero};
        continue;
      }
      const int a = p[i];
      const int b = p[j];
      if (a == -1) {
        p[b] = -1;
      } else if (b == -1) {
        p[a] = -1;
      } else {
        p[a] = b;
        p[b] = a;
      }
      p[i] = j;
      p[j] = i;
      row[s] = {basis.index_of(p), Weight::one};
    }
  }
  return table;
}

// Dense block of polynomials in A: one row per basis state, one column per
// exponent in a fixed window.
template <class Coeff>
class Column {
 public:
  Column(std::size_t rows, int min_exp, int max_exp)
      : rows_(rows), offset_(-min_exp), width_(static_cast<std::size_t>(max_exp - min_exp + 1)), data_(rows * width_) {}

  Coeff* row(std::size_t r) { return data_.data() + r * width_; }
  const Coeff* row(std::size_t r) const { return data_.data() + r * width_; }
  std::size_t width() const noexcept { return width_; }
  int offset() const noexcept { return offset_; }
  std::size_t rows() const noexcept { return rows_; }

  void clear_range(std::size_t lo, std::size_t hi) {
    for (std::size_t r = 0; r < rows_; ++r) std::fill(row(r) + lo, row(r) + hi + 1, Coeff(0));
  }

 private:
  std::size_t rows_;
  int offset_;
  std::size_t width_;
  std::vector<Coeff> data_;
};

inline bool add_overflows(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  return __builtin_add_overflow(a, b, &out);
}

// trace(word | V(n, d)) as coefficients indexed by exponent + offset.
template <class Coeff>
std::vector<Integer> module_trace(const BraidWord& w, const LinkStates& basis,
                                  const std::vector<std::vector<Step>>& table) {
  const int c = static_cast<int>(w.crossing_count());
  const int min_exp = -3 * c - 2;
  const int max_exp = 3 * c + 2;
  const std::size_t dim = basis.size();
  std::vector<Integer> trace(static_cast<std::size_t>(max_exp - min_exp + 1));

  // Largest number of states e_i sends to one target, for the overflow guard.
  std::int64_t fan_in = 1;
  for (const auto& row : table) {
    std::vector<std::int64_t> hits(dim, 0);
    for (const Step& s : row)
      if (s.weight != Weight::zero) fan_in = std::max(fan_in, ++hits[static_cast<std::size_t>(s.target)]);
  }
  const std::int64_t safe_bound = std::numeric_limits<std::int64_t>::max() / (4 * fan_in + 4);

  Column<Coeff> cur(dim, min_exp, max_exp);
  Column<Coeff> nxt(dim, min_exp, max_exp);
  const std::size_t zero = static_cast<std::size_t>(cur.offset());

  for (std::size_t col = 0; col < dim; ++col) {
    cur.clear_range(0, cur.width() - 1);
    cur.row(col)[zero] = Coeff(1);
    std::size_t lo = zero;
    std::size_t hi = zero;

    for (int letter : w.letters()) {
      const int g = std::abs(letter) - 1;
      const int id_shift = letter > 0 ? 1 : -1;
      const int e_shift = -id_shift;
      const auto& steps = table[static_cast<std::size_t>(g)];
      const std::size_t nlo = lo - 3;
      const std::size_t nhi = hi + 3;
      nxt.clear_range(nlo, nhi);

      for (std::size_t s = 0; s < dim; ++s) {
        const Coeff* src = cur.row(s);
        Coeff* same = nxt.row(s);
        for (std::size_t e = lo; e <= hi; ++e) same[e + id_shift] += src[e];
        const Step& st = steps[s];
        if (st.weight == Weight::zero) continue;
        Coeff* dst = nxt.row(static_cast<std::size_t>(st.target));
        if (st.weight == Weight::one) {
          for (std::size_t e = lo; e <= hi; ++e) dst[e + e_shift] += src[e];
        } else {
          for (std::size_t e = lo; e <= hi; ++e) dst[e + e_shift + 2] -= src[e];
          for (std::size_t e = lo; e <= hi; ++e) dst[e + e_shift - 2] -= src[e];
        }
      }

      // Tighten the live window and guard the next step against overflow.
      std::size_t new_lo = nhi + 1;
      std::size_t new_hi = 0;
      for (std::size_t s = 0; s < dim; ++s) {
        const Coeff* r = nxt.row(s);
        for (std::size_t e = nlo; e <= nhi; ++e) {
          if (r[e] == 0) continue;
          new_lo = std::min(new_lo, e);
          new_hi = std::max(new_hi, e);
          if constexpr (std::is_same_v<Coeff, std::int64_t>) {
            if (r[e] > safe_bound || r[e] < -safe_bound) fail(ErrorKind::overflow, "64-bit transfer coefficients");
          }
        }
      }
      std::swap(cur, nxt);
      if (new_lo > new_hi) {  // the column vanished
        lo = hi = zero;
        break;
      }
      lo = new_lo;
      hi = new_hi;
    }

    const Coeff* diag = cur.row(col);
    for (std::size_t e = lo; e <= hi; ++e) {
      if (diag[e] == 0) continue;
      if constexpr (std::is_same_v<Coeff, std::int64_t>) {
        trace[e] += Integer(static_cast<long>(diag[e]));
      } else {
        trace[e] += diag[e];
      }
    }
  }
  return trace;
}

}  // namespace tl

inline LaurentPolynomial tl_bracket(const BraidWord& w, int strand_limit = kDefaultStrandLimit) {
  const int n = w.strands();
  if (n > strand_limit)
    fail(ErrorKind::budget, std::to_string(n) + " strands exceed the Temperley-Lieb strand limit of " +
                                std::to_string(strand_limit));
  require(n <= 30, ErrorKind::budget, "Temperley-Lieb transfer supports at most 30 strands");

  const LaurentPolynomial delta = loop_value();
  const int c = static_cast<int>(w.crossing_count());
  const int min_exp = -3 * c - 2;

  LaurentPolynomial total("A");
  LaurentPolynomial cheb_prev = LaurentPolynomial::constant(1, "A");  // Delta_0
  LaurentPolynomial cheb_cur = delta;                                  // Delta_1
  for (int d = 0; d <= n; ++d) {
    const LaurentPolynomial weight = (d == 0) ? cheb_prev : cheb_cur;
    if (d > 0) {
      LaurentPolynomial next = delta * cheb_cur - cheb_prev;
      cheb_prev = std::move(cheb_cur);
      cheb_cur = std::move(next);
    }
    if ((n - d) % 2 != 0) continue;

    const tl::LinkStates basis(n, d);
    const auto table = tl::generator_table(basis);
    std::vector<Integer> trace;
    try {
      trace = tl::module_trace<std::int64_t>(w, basis, table);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::overflow) throw;
      trace = tl::module_trace<Integer>(w, basis, table);
    }
    LaurentPolynomial module("A");
    for (std::size_t i = 0; i < trace.size(); ++i) module.add_term(static_cast<int>(i) + min_exp, trace[i]);
    total += weight * module;
  }
  return total.divided_by(delta);
}

}  // namespace ttk
