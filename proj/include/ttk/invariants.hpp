#pragma once

// Jones and Alexander polynomials of braid closures, torus-knot closed forms,
// and the combined invariant report.

#include <cstdlib>
#include <numeric>
#include <optional>
#include <string>

#include "ttk/braid.hpp"
#include "ttk/burau.hpp"
#include "ttk/error.hpp"
#include "ttk/kauffman.hpp"
#include "ttk/laurent.hpp"
#include "ttk/temperley_lieb.hpp"

namespace ttk {

enum class JonesMethod { tl, kauffman };

inline std::string to_string(JonesMethod m) { return m == JonesMethod::tl ? "tl" : "kauffman"; }

struct InvariantLimits {
  std::size_t crossing_budget = kDefaultCrossingBudget;
  int strand_limit = kDefaultStrandLimit;
};

// V = (-A^3)^-writhe <w> with t = A^-4. Links with an even number of components
// have half-integer powers of t; those come back in the variable s = t^(1/2).
inline LaurentPolynomial jones_from_bracket(const LaurentPolynomial& bracket, long writhe) {
  LaurentPolynomial scaled = bracket.shifted(static_cast<int>(-3 * writhe));
  if (writhe % 2 != 0) scaled = -scaled;
  bool quarter = true;
  for (const auto& [e, c] : scaled.terms()) {
    require(e % 2 == 0, ErrorKind::invalid_argument, "bracket exponents of mixed parity");
    if (e % 4 != 0) quarter = false;
  }
  LaurentPolynomial out(quarter ? "t" : "s");
  for (const auto& [e, c] : scaled.terms()) out.add_term(quarter ? -e / 4 : -e / 2, c);
  return out;
}

inline LaurentPolynomial jones(const BraidWord& w, JonesMethod method = JonesMethod::tl,
                               const InvariantLimits& limits = {}) {
  const LaurentPolynomial bracket =
      method == JonesMethod::tl ? tl_bracket(w, limits.strand_limit) : kauffman_bracket(w, limits.crossing_budget);
  return jones_from_bracket(bracket, w.writhe());
}

namespace detail {

// Signs of (p, q) reduced to a mirror flag; nullopt for the unknot.
inline std::optional<std::pair<long, long>> torus_magnitudes(long p, long q, bool& mirrored) {
  mirrored = (p < 0) != (q < 0);
  const long ap = std::labs(p);
  const long aq = std::labs(q);
  if (ap <= 1 || aq <= 1) return std::nullopt;
  require(std::gcd(ap, aq) == 1, ErrorKind::invalid_argument,
          "T(" + std::to_string(p) + "," + std::to_string(q) + ") is not a knot: gcd != 1");
  return std::make_pair(ap, aq);
}

}  // namespace detail

// t^{(p-1)(q-1)/2} (1 - t^{p+1} - t^{q+1} + t^{p+q}) / (1 - t^2).
inline LaurentPolynomial torus_jones(long p, long q) {
  bool mirrored = false;
  const auto pq = detail::torus_magnitudes(p, q, mirrored);
  if (!pq) return LaurentPolynomial::constant(1);
  const auto [a, b] = *pq;
  LaurentPolynomial num("t");
  num.add_term(0, 1);
  num.add_term(static_cast<int>(a + 1), -1);
  num.add_term(static_cast<int>(b + 1), -1);
  num.add_term(static_cast<int>(a + b), 1);
  const LaurentPolynomial den = LaurentPolynomial::from_terms({{0, 1}, {2, -1}});
  LaurentPolynomial v = num.divided_by(den).shifted(static_cast<int>((a - 1) * (b - 1) / 2));
  return mirrored ? v.inverted() : v;
}

// (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)), symmetrized.
inline LaurentPolynomial torus_alexander(long p, long q) {
  bool mirrored = false;
  const auto pq = detail::torus_magnitudes(p, q, mirrored);
  if (!pq) return LaurentPolynomial::constant(1);
  const auto [a, b] = *pq;
  auto binomial = [](long e) { return LaurentPolynomial::from_terms({{static_cast<int>(e), 1}, {0, -1}}); };
  const LaurentPolynomial num = binomial(a * b) * binomial(1);
  return normalize_alexander(num.divided_by(binomial(a) * binomial(b)));
}

enum class MirrorRelation { equal, mirror, neither };

inline std::string to_string(MirrorRelation r) {
  switch (r) {
    case MirrorRelation::equal: return "equal";
    case MirrorRelation::mirror: return "mirror";
    default: return "neither";
  }
}

// g = f reports equal even when f is also its own mirror image.
inline MirrorRelation equal_up_to_mirror(const LaurentPolynomial& f, const LaurentPolynomial& g) {
  if (f == g) return MirrorRelation::equal;
  if (f.inverted() == g) return MirrorRelation::mirror;
  return MirrorRelation::neither;
}

struct InvariantReport {
  std::size_t crossings = 0;
  int strands = 0;
  int components = 0;
  std::optional<LaurentPolynomial> jones;
  std::string jones_status = "not requested";  // "computed", "skipped: <reason>"
  std::optional<LaurentPolynomial> alexander;   // knots only
  std::optional<Integer> determinant;
};

inline InvariantReport invariant_report(const BraidWord& w, bool with_jones, JonesMethod method = JonesMethod::tl,
                                        const InvariantLimits& limits = {}) {
  InvariantReport out;
  out.crossings = w.crossing_count();
  out.strands = w.strands();
  out.components = component_count(w);
  if (out.components == 1) {
    out.alexander = alexander(w);
    out.determinant = knot_determinant(*out.alexander);
  }
  if (with_jones) {
    try {
      out.jones = jones(w, method, limits);
      out.jones_status = "computed";
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::budget) throw;
      out.jones_status = std::string("skipped: ") + e.what();
    }
  }
  return out;
}

}  // namespace ttk
