#pragma once

// Twisted torus knots with Horadam parameters, surface slopes, torus-knot
// detection for three twisted torus families, and invariant-based checks of
// isotopy and mirror relations between twisted torus knots.

#include <cstdlib>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ttk/braid.hpp"
#include "ttk/error.hpp"
#include "ttk/horadam.hpp"
#include "ttk/invariants.hpp"
#include "ttk/laurent.hpp"

namespace ttk {

// Type1 K(H_{k+2}, H_k, H_{k+1}, -1)   Type2 same with +1
// Type3 K(H_{k+2}, H_{k+1}, H_k, -1)   Type4 same with +1
// Type5 K(H_{k+1}, H_k, H_{k+2}, -1)   Type6 same with +1
struct HoradamTTK {
  Integer seed_m;
  Integer seed_n;
  std::size_t k = 0;
  int type = 1;
};

// With strict = false, small terms (H_k = 1) are allowed through so that the
// degenerate ends of a reduction chain can still be built as braids.
inline TTKParams resolve(const HoradamTTK& h, bool strict = true) {
  require(h.type >= 1 && h.type <= 6, ErrorKind::invalid_argument, "Horadam knot type must be 1..6");
  require(h.seed_m >= 1 && h.seed_n >= 1 && gcd(h.seed_m, h.seed_n) == 1, ErrorKind::invalid_argument,
          "seeds must be positive and coprime");
  const auto H = horadam_terms(unit_horadam(h.seed_m, h.seed_n), h.k + 3);
  const long a = to_long(H[h.k], "H_k");
  const long b = to_long(H[h.k + 1], "H_{k+1}");
  const long c = to_long(H[h.k + 2], "H_{k+2}");
  const long twist = (h.type % 2 == 1) ? -1 : 1;
  TTKParams out;
  switch ((h.type + 1) / 2) {
    case 1: out = {c, a, b, 1, twist}; break;
    case 2: out = {c, b, a, 1, twist}; break;
    default: out = {b, a, c, 1, twist}; break;
  }
  if (strict) validate(out);
  return out;
}

// p q + n r^2.
inline Integer surface_slope(const TTKParams& k) {
  validate(k);
  require(k.cable_m == 1, ErrorKind::invalid_argument, "surface slope needs cable m = 1");
  return Integer(k.p) * k.q + Integer(k.twist_n) * k.r * k.r;
}

struct TorusMatch {
  bool matched = false;
  long a = 0;
  long b = 0;
  int family = 0;                  // which parameterized form matched, when there are several
  std::optional<long> torus_p;     // torus type, when the detection rule names one;
  std::optional<long> torus_q;     // a negative entry encodes the mirror image
};

// K(p,q,r,s), s full twists: a torus knot iff (p,q,r,s) = (ab+1, b, b-1, 1)
// with a >= 1, b >= 3.
inline TorusMatch torus_match_pos(long p, long q, long r, long s) {
  const bool scope = std::gcd(p, q) == 1 && q >= 2 && q < p && r >= 2 && r <= p + q && r != p && r % q != 0 && s >= 1;
  require(scope, ErrorKind::out_of_scope,
          "(p,q,r,s) = (" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + "," +
              std::to_string(s) + ") is outside the detection hypotheses");
  TorusMatch out;
  if (s == 1 && q >= 3 && r == q - 1 && (p - 1) % q == 0 && (p - 1) / q >= 1) {
    out.matched = true;
    out.a = (p - 1) / q;
    out.b = q;
    out.family = 1;
  }
  return out;
}

// K(p,q,p-kq,-1) with 2 <= p-kq < q: a torus knot iff (p,q,p-kq) = ((a+1)b-1, b, b-1)
// with a >= 1, b >= 3.
inline TorusMatch torus_match_neg_kq(long p, long q, long k) {
  const long r = p - k * q;
  const bool scope = std::gcd(p, q) == 1 && q >= 2 && q < p && k >= 1 && r >= 2 && r < q;
  require(scope, ErrorKind::out_of_scope,
          "(p,q,k) = (" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(k) +
              ") is outside the detection hypotheses");
  TorusMatch out;
  if (q >= 3 && r == q - 1 && (p + 1) % q == 0 && (p + 1) / q - 1 >= 1) {
    out.matched = true;
    out.a = (p + 1) / q - 1;
    out.b = q;
    out.family = 1;
  }
  return out;
}

// K(p,q,p-q,-1) with q < p-q is a torus knot iff
//   family 1: (p,q) = (aF_{b+3} - F_{b+2}, aF_{b+1} - F_b), a >= 2, b >= 1, (a,b) != (2,1), or
//   family 2: (p,q) = (aF_{b+1} + F_{b+2}, aF_{b-1} + F_b),  a, b >= 2,
// and then it is T(a+1, (-1)^b a).
inline TorusMatch torus_match_qsmall(long p, long q) {
  const bool scope = p >= 3 && q >= 2 && std::gcd(p, q) == 1 && q < p - q;
  require(scope, ErrorKind::out_of_scope,
          "(p,q) = (" + std::to_string(p) + "," + std::to_string(q) + ") is outside the detection hypotheses");
  std::vector<long> F{0, 1};
  while (F.back() <= p || F.size() < 6) F.push_back(F[F.size() - 1] + F[F.size() - 2]);
  F.push_back(F[F.size() - 1] + F[F.size() - 2]);
  F.push_back(F[F.size() - 1] + F[F.size() - 2]);

  auto found = [](long a, long b, int family) {
    TorusMatch m;
    m.matched = true;
    m.a = a;
    m.b = b;
    m.family = family;
    m.torus_p = a + 1;
    m.torus_q = (b % 2 == 0) ? a : -a;
    return m;
  };
  for (std::size_t b = 1; b + 3 < F.size() && F[b] <= p; ++b) {
    const long fb = F[b];
    if ((q + fb) % F[b + 1] == 0) {
      const long a = (q + fb) / F[b + 1];
      if (a >= 2 && !(a == 2 && b == 1) && p == a * F[b + 3] - F[b + 2]) return found(a, static_cast<long>(b), 1);
    }
    if (b >= 2 && q >= fb && (q - fb) % F[b - 1] == 0) {
      const long a = (q - fb) / F[b - 1];
      if (a >= 2 && p == a * F[b + 1] + F[b + 2]) return found(a, static_cast<long>(b), 2);
    }
  }
  return {};
}

struct TorusPairStep {
  std::size_t k = 0;
  TTKParams params;
  TorusMatch match;
  bool ok = false;
};

struct TorusPairReport {
  bool maximal = false;
  std::vector<TorusPairStep> steps;

  bool ok() const {
    for (const auto& s : steps)
      if (!s.ok) return false;
    return true;
  }
};

// For each k <= k_max, K(H_{k+2}, H_k, H_{k+1}, -1) is detected as a torus knot
// exactly when (m, n) is a maximal pair.
inline TorusPairReport torus_iff_maximal_check(const Integer& m, const Integer& n, std::size_t k_max) {
  TorusPairReport report;
  report.maximal = is_maximal_pair(m, n);
  for (std::size_t k = 0; k <= k_max; ++k) {
    TorusPairStep step;
    step.k = k;
    step.params = resolve({m, n, k, 1});
    step.match = torus_match_qsmall(step.params.p, step.params.q);
    step.ok = step.match.matched == report.maximal;
    report.steps.push_back(step);
  }
  return report;
}

struct Reduction {
  HoradamTTK knot;
  bool mirrored = true;
};

// Type1 at k is the mirror image of Type1 at k-1.
inline Reduction type1_reduce(const Integer& m, const Integer& n, std::size_t k) {
  require(k >= 1, ErrorKind::invalid_argument, "type1_reduce needs k >= 1");
  return {{m, n, k - 1, 1}, true};
}

// ---- invariant evidence ----

enum class Claim { complement_swap, full_twist_mirror, index_shift, type1_chain };

inline std::string to_string(Claim c) {
  switch (c) {
    case Claim::complement_swap: return "lemma7";
    case Claim::full_twist_mirror: return "lemma8";
    case Claim::index_shift: return "lemma9";
    default: return "prop12_1";
  }
}

inline Claim parse_claim(const std::string& s) {
  if (s == "lemma7") return Claim::complement_swap;
  if (s == "lemma8") return Claim::full_twist_mirror;
  if (s == "lemma9") return Claim::index_shift;
  if (s == "prop12_1" || s == "prop12-1") return Claim::type1_chain;
  fail(ErrorKind::invalid_argument, "unknown claim '" + s + "'");
}

struct ClaimParams {
  long p = 0;
  long q = 0;
  Integer seed_m = 0;
  Integer seed_n = 0;
  std::size_t k = 0;
};

struct Comparison {
  TTKParams left;
  TTKParams right;
  MirrorRelation expected = MirrorRelation::equal;
  bool alexander_equal = false;
  std::optional<bool> jones_holds;  // empty when skipped
  std::string jones_note;
};

struct EvidenceReport {
  Claim claim = Claim::complement_swap;
  nlohmann::ordered_json params;
  MirrorRelation expected = MirrorRelation::equal;
  std::vector<Comparison> comparisons;

  bool alexander_consistent() const {
    for (const auto& c : comparisons)
      if (!c.alexander_equal) return false;
    return true;
  }
  bool jones_consistent() const {
    for (const auto& c : comparisons)
      if (c.jones_holds == false) return false;
    return true;
  }
  bool jones_skipped() const {
    for (const auto& c : comparisons)
      if (c.jones_holds.has_value()) return false;
    return true;
  }
  bool consistent() const { return alexander_consistent() && jones_consistent(); }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json inv;
    inv["alexander"] = alexander_consistent() ? "equal" : "neither";
    if (jones_skipped())
      inv["jones"] = "skipped";
    else
      inv["jones"] = jones_consistent() ? ttk::to_string(expected) : "neither";
    nlohmann::ordered_json out;
    out["claim"] = ttk::to_string(claim);
    out["params"] = params;
    out["invariants"] = inv;
    out["verdict"] = consistent() ? "consistent" : "inconsistent";
    out["evidence"] = "invariants corroborate, they do not prove isotopy";
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& c : comparisons) {
      nlohmann::ordered_json item;
      item["left"] = c.left.to_string();
      item["right"] = c.right.to_string();
      item["expected"] = ttk::to_string(c.expected);
      item["alexander"] = c.alexander_equal ? "equal" : "neither";
      item["jones"] = c.jones_holds ? (*c.jones_holds ? ttk::to_string(c.expected) : "neither") : c.jones_note;
      list.push_back(item);
    }
    out["comparisons"] = list;
    return out;
  }
};

namespace detail {

struct KnotInvariants {
  LaurentPolynomial alexander;
  std::optional<LaurentPolynomial> jones;
  std::string jones_note;
};

inline KnotInvariants knot_invariants(const TTKParams& k, const InvariantLimits& limits) {
  const InvariantReport r = invariant_report(build_braid(k), true, JonesMethod::tl, limits);
  require(r.alexander.has_value(), ErrorKind::not_a_knot, k.to_string() + " closes to a link");
  return {*r.alexander, r.jones, r.jones_status};
}

inline bool relation_holds(MirrorRelation expected, const LaurentPolynomial& f, const LaurentPolynomial& g) {
  return expected == MirrorRelation::mirror ? f.inverted() == g : f == g;
}

inline Comparison compare(const TTKParams& left, const TTKParams& right, MirrorRelation expected,
                          const InvariantLimits& limits) {
  const KnotInvariants a = knot_invariants(left, limits);
  const KnotInvariants b = knot_invariants(right, limits);
  Comparison c{left, right, expected, a.alexander == b.alexander, std::nullopt, ""};
  if (a.jones && b.jones)
    c.jones_holds = relation_holds(expected, *a.jones, *b.jones);
  else
    c.jones_note = "skipped";
  return c;
}

}  // namespace detail

// Builds both sides of the claim, computes Alexander always and Jones within
// the limits, and records whether they agree in the claimed sense.
inline EvidenceReport verify_claim(Claim claim, const ClaimParams& in, const InvariantLimits& limits = {}) {
  EvidenceReport report;
  report.claim = claim;
  auto pq_params = [&] {
    require(in.q >= 2 && std::gcd(in.p, in.q) == 1, ErrorKind::invalid_argument, "need q >= 2 and gcd(p, q) = 1");
    report.params = {{"p", in.p}, {"q", in.q}};
  };
  auto seed_params = [&] {
    report.params = {{"m", to_long(in.seed_m)}, {"n", to_long(in.seed_n)}, {"k", in.k}};
  };
  switch (claim) {
    case Claim::complement_swap: {
      pq_params();
      require(in.p > 2 * in.q, ErrorKind::invalid_argument, "need p > 2q");
      report.expected = MirrorRelation::equal;
      report.comparisons.push_back(detail::compare({in.p, in.q, in.p - in.q, 1, 1}, {in.p, in.p - in.q, in.q, 1, 1},
                                                   MirrorRelation::equal, limits));
      break;
    }
    case Claim::full_twist_mirror: {
      pq_params();
      require(in.p > in.q, ErrorKind::invalid_argument, "need p > q");
      report.expected = MirrorRelation::mirror;
      // K(p, p+q, q, +1) is built as K(p+q, p, q, +1).
      report.comparisons.push_back(detail::compare({in.p, in.q, in.p + in.q, 1, -1}, {in.p + in.q, in.p, in.q, 1, 1},
                                                   MirrorRelation::mirror, limits));
      break;
    }
    case Claim::index_shift: {
      seed_params();
      report.expected = MirrorRelation::equal;
      const TTKParams left = resolve({in.seed_m, in.seed_n, in.k + 1, 3}, false);
      const TTKParams right = resolve({in.seed_m, in.seed_n, in.k, 6}, false);
      report.comparisons.push_back(detail::compare(left, right, MirrorRelation::equal, limits));
      break;
    }
    case Claim::type1_chain: {
      seed_params();
      require(in.k >= 1, ErrorKind::invalid_argument, "the reduction chain needs k >= 1");
      report.expected = (in.k % 2 == 1) ? MirrorRelation::mirror : MirrorRelation::equal;
      for (std::size_t j = in.k; j >= 1; --j) {
        const Reduction red = type1_reduce(in.seed_m, in.seed_n, j);
        report.comparisons.push_back(detail::compare(resolve({in.seed_m, in.seed_n, j, 1}, false), resolve(red.knot, false),
                                                     MirrorRelation::mirror, limits));
      }
      if (in.k >= 2)
        report.comparisons.push_back(detail::compare(resolve({in.seed_m, in.seed_n, in.k, 1}, false),
                                                     resolve({in.seed_m, in.seed_n, 0, 1}, false), report.expected,
                                                     limits));
      break;
    }
  }
  return report;
}

}  // namespace ttk
