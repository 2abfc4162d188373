#pragma once

// Kauffman bracket of a braid closure by direct state sum over all 2^c
// smoothings. Exponential in the crossing count; kept as an independent oracle
// for the Temperley-Lieb transfer.

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <string>
#include <vector>

#include "ttk/braid.hpp"
#include "ttk/error.hpp"
#include "ttk/laurent.hpp"

namespace ttk {

inline constexpr std::size_t kDefaultCrossingBudget = 22;

// -A^2 - A^-2, the value of a removable loop.
inline LaurentPolynomial loop_value() { return LaurentPolynomial::from_terms({{2, -1}, {-2, -1}}, "A"); }

inline LaurentPolynomial kauffman_bracket(const BraidWord& w, std::size_t budget = kDefaultCrossingBudget) {
  const std::size_t c = w.crossing_count();
  if (c > budget)
    fail(ErrorKind::budget, std::to_string(c) + " crossings exceed the state-sum budget of " + std::to_string(budget));
  const int n = w.strands();

  // Segment ids: 0..n-1 at the top, then two new ids below each crossing.
  struct Crossing {
    int top_left, top_right, bottom_left, bottom_right;
    bool positive;
  };
  std::vector<Crossing> crossings;
  crossings.reserve(c);
  std::vector<int> cur(n);
  std::iota(cur.begin(), cur.end(), 0);
  int next_id = n;
  for (int l : w.letters()) {
    const int i = std::abs(l) - 1;
    Crossing x{cur[i], cur[i + 1], next_id, next_id + 1, l > 0};
    next_id += 2;
    cur[i] = x.bottom_left;
    cur[i + 1] = x.bottom_right;
    crossings.push_back(x);
  }
  const int segments = next_id;

  std::vector<int> parent(segments);
  auto find = [&parent](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  int components = 0;
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  };

  // counts[(exponent + c) * stride + loops]
  const std::size_t stride = static_cast<std::size_t>(segments) + 1;
  std::vector<std::uint64_t> counts((2 * c + 1) * stride, 0);
  const std::uint64_t states = std::uint64_t{1} << c;
  for (std::uint64_t mask = 0; mask < states; ++mask) {
    std::iota(parent.begin(), parent.end(), 0);
    components = segments;
    for (int j = 0; j < n; ++j) unite(cur[j], j);
    long exponent = 0;
    for (std::size_t k = 0; k < c; ++k) {
      const Crossing& x = crossings[k];
      const bool vertical = ((mask >> k) & 1U) == 0;
      if (vertical) {
        unite(x.top_left, x.bottom_left);
        unite(x.top_right, x.bottom_right);
      } else {
        unite(x.top_left, x.top_right);
        unite(x.bottom_left, x.bottom_right);
      }
      // Vertical is the A-smoothing of a positive letter, the A^-1-smoothing of a negative one.
      exponent += (vertical == x.positive) ? 1 : -1;
    }
    ++counts[static_cast<std::size_t>(exponent + static_cast<long>(c)) * stride + static_cast<std::size_t>(components)];
  }

  const LaurentPolynomial delta = loop_value();
  std::vector<LaurentPolynomial> delta_powers{LaurentPolynomial::constant(1, "A")};
  LaurentPolynomial out("A");
  for (std::size_t e = 0; e <= 2 * c; ++e) {
    for (std::size_t loops = 1; loops < stride; ++loops) {
      const std::uint64_t count = counts[e * stride + loops];
      if (count == 0) continue;
      while (delta_powers.size() < loops) delta_powers.push_back(delta_powers.back() * delta);
      Integer coef;
      mpz_import(coef.get_mpz_t(), 1, 1, sizeof(count), 0, 0, &count);
      out += (coef * delta_powers[loops - 1]).shifted(static_cast<int>(e) - static_cast<int>(c));
    }
  }
  return out;
}

}  // namespace ttk
