#pragma once

// Horadam sequences H_0 = h0, H_1 = h1, H_k = a*H_{k-2} + b*H_{k-1}, the
// quadratic slope forms built from consecutive terms, and the Euclidean
// quotient traces that decide when an (m,n) pair embeds in a (+-1,a) sequence.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ttk/error.hpp"
#include "ttk/laurent.hpp"

namespace ttk {

struct HoradamSpec {
  Integer h0;
  Integer h1;
  Integer a = 1;
  Integer b = 1;

  bool is_unit_recursion() const { return a == 1 && b == 1; }
};

inline HoradamSpec unit_horadam(const Integer& m, const Integer& n) { return {m, n, 1, 1}; }

// Terms H_0 .. H_{count-1}.
inline std::vector<Integer> horadam_terms(const HoradamSpec& spec, std::size_t count) {
  std::vector<Integer> out;
  out.reserve(count);
  if (count > 0) out.push_back(spec.h0);
  if (count > 1) out.push_back(spec.h1);
  for (std::size_t k = 2; k < count; ++k) out.push_back(spec.a * out[k - 2] + spec.b * out[k - 1]);
  return out;
}

inline Integer horadam_term(const HoradamSpec& spec, std::size_t k) {
  if (k == 0) return spec.h0;
  Integer prev = spec.h0;
  Integer cur = spec.h1;
  for (std::size_t i = 2; i <= k; ++i) {
    Integer next = spec.a * prev + spec.b * cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

inline Integer fibonacci(std::size_t k) {
  Integer out;
  mpz_fib_ui(out.get_mpz_t(), k);
  return out;
}

// m*F_{k-1} + n*F_k, valid for k >= 1.
inline Integer closed_form_term(const Integer& m, const Integer& n, std::size_t k) {
  require(k >= 1, ErrorKind::invalid_argument, "closed form needs k >= 1");
  return m * fibonacci(k - 1) + n * fibonacci(k);
}

inline Integer invariant_s(const Integer& m, const Integer& n) { return m * m + m * n - n * n; }

// s_k = H_k^2 + H_{k-1}H_k - H_{k-1}^2, k >= 1.
inline Integer slope_s(const HoradamSpec& spec, std::size_t k) {
  require(spec.is_unit_recursion(), ErrorKind::invalid_argument, "slope forms need a = b = 1");
  require(k >= 1, ErrorKind::invalid_argument, "slope_s needs k >= 1");
  Integer hk = horadam_term(spec, k);
  Integer hp = horadam_term(spec, k - 1);
  return hk * hk + hp * hk - hp * hp;
}

// t_k = H_{k+1}^2 + H_{k+1}H_k + H_k^2, k >= 1.
inline Integer slope_t(const HoradamSpec& spec, std::size_t k) {
  require(spec.is_unit_recursion(), ErrorKind::invalid_argument, "slope forms need a = b = 1");
  require(k >= 1, ErrorKind::invalid_argument, "slope_t needs k >= 1");
  Integer hn = horadam_term(spec, k + 1);
  Integer hk = horadam_term(spec, k);
  return hn * hn + hn * hk + hk * hk;
}

struct SlopeViolation {
  int part = 0;  // 1, 2 or 3
  std::size_t k = 0;
  Integer lhs;
  Integer rhs;
};

struct SlopeRelationReport {
  std::size_t checked = 0;  // number of (part, k) identities evaluated
  std::optional<SlopeViolation> violation;

  bool ok() const { return !violation.has_value(); }
};

// Checks, for 1 <= k <= k_max:
//   (1) H_k^2 + H_{k+1}H_k - H_{k+1}^2 = (-1)^k s
//   (2) H_k^2 + H_kH_{k-1} - H_{k-1}^2 = (n^2+mn-m^2) + 2 eps_k s + 2 sum_{i<k} H_i^2
//   (3) H_k^2 + H_kH_{k-1} + H_{k-1}^2 = (2) + 2 H_{k-1}^2
// with s = m^2+mn-n^2 and eps_k = 1 for even k, 0 for odd k.
inline SlopeRelationReport check_slope_relations(const HoradamSpec& spec, std::size_t k_max) {
  require(spec.is_unit_recursion(), ErrorKind::invalid_argument, "slope relations need a = b = 1");
  require(k_max >= 2, ErrorKind::invalid_argument, "slope relations need k_max >= 2");
  const Integer& m = spec.h0;
  const Integer& n = spec.h1;
  const Integer s = invariant_s(m, n);
  const Integer base = n * n + m * n - m * m;
  const auto h = horadam_terms(spec, k_max + 2);

  SlopeRelationReport report;
  Integer square_sum = 0;  // sum_{i=1}^{k-1} H_i^2
  for (std::size_t k = 1; k <= k_max; ++k) {
    const Integer& hk = h[k];
    const Integer& hn = h[k + 1];
    const Integer& hp = h[k - 1];
    const Integer eps_s = (k % 2 == 0) ? s : Integer(0);

    Integer lhs1 = hk * hk + hn * hk - hn * hn;
    Integer rhs1 = (k % 2 == 0) ? s : Integer(-s);
    Integer lhs2 = hk * hk + hk * hp - hp * hp;
    Integer rhs2 = base + 2 * eps_s + 2 * square_sum;
    Integer lhs3 = hk * hk + hk * hp + hp * hp;
    Integer rhs3 = rhs2 + 2 * hp * hp;

    const std::pair<Integer, Integer> sides[3] = {{lhs1, rhs1}, {lhs2, rhs2}, {lhs3, rhs3}};
    for (int part = 0; part < 3; ++part) {
      ++report.checked;
      if (sides[part].first != sides[part].second) {
        report.violation = SlopeViolation{part + 1, k, sides[part].first, sides[part].second};
        return report;
      }
    }
    square_sum += hk * hk;
  }
  return report;
}

// Division chain n = q_l m + r_l, m = q_{l-1} r_l + r_{l-1}, ..., stopped at the
// first remainder equal to 1 (so r_0 = 1). Lists are ordered [x_l, ..., x_0].
struct EuclidTrace {
  std::vector<Integer> quotients;
  std::vector<Integer> remainders;

  std::size_t length() const { return quotients.size(); }  // l + 1
  const Integer& final_quotient() const { return quotients.back(); }
};

inline void require_coprime_pair(const Integer& m, const Integer& n) {
  require(m > 1, ErrorKind::invalid_argument, "need m > 1, got m = " + m.get_str());
  require(m < n, ErrorKind::invalid_argument, "need m < n, got (" + m.get_str() + ", " + n.get_str() + ")");
  Integer g = gcd(m, n);
  require(g == 1, ErrorKind::invalid_argument, "need gcd(m, n) = 1, got " + g.get_str());
}

inline EuclidTrace euclid_trace(const Integer& m, const Integer& n) {
  require_coprime_pair(m, n);
  EuclidTrace trace;
  Integer dividend = n;
  Integer divisor = m;
  while (true) {
    Integer q;
    Integer r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), dividend.get_mpz_t(), divisor.get_mpz_t());
    trace.quotients.push_back(q);
    trace.remainders.push_back(r);
    if (r == 1) break;
    dividend = std::move(divisor);
    divisor = std::move(r);
  }
  return trace;
}

inline bool is_maximal_pair(const EuclidTrace& trace) {
  for (std::size_t i = 0; i + 1 < trace.quotients.size(); ++i)
    if (trace.quotients[i] != 1) return false;
  const Integer& q0 = trace.final_quotient();
  return q0 == 1 || q0 == 2;
}

inline bool is_maximal_pair(const Integer& m, const Integer& n) { return is_maximal_pair(euclid_trace(m, n)); }

// (m, n) = (H_start, H_{start+1}) in the (sign, a; 1, 1)-Horadam sequence.
struct Embedding {
  int sign = 1;
  Integer a;
  std::size_t start_index = 1;

  friend bool operator==(const Embedding&, const Embedding&) = default;
};

// Embeds a maximal pair as consecutive terms of H_{1, a} (final quotient 1) or
// H_{-1, a} (final quotient 2). Here r_1 is the next-to-last remainder of the
// trace, read as m itself for a single-division trace. The embedding is
// confirmed by regenerating the sequence; pairs that are not maximal yield none.
inline std::optional<Embedding> embed_in_unit_sequence(const Integer& m, const Integer& n) {
  const EuclidTrace trace = euclid_trace(m, n);
  if (!is_maximal_pair(trace)) return std::nullopt;

  const std::size_t l = trace.length() - 1;
  const Integer r1 = (l == 0) ? m : trace.remainders[l - 1];
  Embedding emb;
  if (trace.final_quotient() == 1) {
    emb = {+1, r1, l + 1};
  } else {
    emb = {-1, r1 + 1, l + 2};
  }

  const auto seq = horadam_terms(unit_horadam(emb.sign, emb.a), emb.start_index + 2);
  if (seq[emb.start_index] != m || seq[emb.start_index + 1] != n)
    fail(ErrorKind::invalid_argument, "embedding regeneration failed for (" + m.get_str() + ", " + n.get_str() + ")");
  return emb;
}

// Brute-force search for (m, n) as consecutive terms of some (+-1, a)-sequence,
// a in [2, n]. Independent of the Euclidean trace; used to cross-check the
// characterization of maximal pairs.
inline std::optional<Embedding> search_unit_embedding(const Integer& m, const Integer& n) {
  for (int sign : {+1, -1}) {
    for (Integer a = 2; a <= n; ++a) {
      Integer prev = sign;
      Integer cur = a;
      for (std::size_t j = 1; cur <= n; ++j) {
        Integer next = prev + cur;
        if (cur == m && next == n) return Embedding{sign, a, j};
        prev = std::move(cur);
        cur = std::move(next);
      }
    }
  }
  return std::nullopt;
}

}  // namespace ttk
