#pragma once

// Congruence predicates for primitive/primitive and primitive/middle-Seifert
// twisted torus knots, the closed-form families that claim to list them, and
// censuses comparing the two.

#include <algorithm>
#include <compare>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ttk/braid.hpp"
#include "ttk/error.hpp"

namespace ttk {

struct Triple {
  long p = 0;
  long q = 0;
  long r = 0;

  friend auto operator<=>(const Triple&, const Triple&) = default;

  std::string to_string() const {
    return "(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + ")";
  }
};

// K(p,q,r,n) and K(q,p,r,n) are the same knot, so p > q is enforced by swapping.
inline Triple normalized(Triple t) {
  if (t.p < t.q) std::swap(t.p, t.q);
  return t;
}

inline bool is_valid_triple(const Triple& t) {
  return t.p > t.q && t.q >= 2 && std::gcd(t.p, t.q) == 1 && t.r >= 2 && t.r <= t.p + t.q;
}

inline void require_triple(const Triple& t) {
  require(is_valid_triple(t), ErrorKind::invalid_argument,
          "invalid triple " + t.to_string() + ": need p > q >= 2, gcd(p, q) = 1, 2 <= r <= p+q");
}

namespace detail {

inline long mod(long a, long m) {
  const long r = a % m;
  return r < 0 ? r + m : r;
}

// r = +-x (mod m) for some x in xs.
inline bool congruent_to_any(long r, long m, std::initializer_list<long> xs) {
  const long rr = mod(r, m);
  return std::any_of(xs.begin(), xs.end(), [&](long x) { return rr == mod(x, m) || rr == mod(-x, m); });
}

}  // namespace detail

// r = +-1 or +-q (mod p) and r = +-1 or +-p (mod q).
inline bool is_pp(const Triple& t) {
  require_triple(t);
  return detail::congruent_to_any(t.r, t.p, {1, t.q}) && detail::congruent_to_any(t.r, t.q, {1, t.p});
}

// r = +-1 or +-p (mod q).
inline bool is_primitive_Hprime(const Triple& t) {
  require_triple(t);
  return detail::congruent_to_any(t.r, t.q, {1, t.p});
}

// Least beta with 2 <= beta < p/q and r = +-beta q (mod p).
inline std::optional<long> middle_seifert_beta(const Triple& t) {
  require_triple(t);
  for (long beta = 2; beta * t.q < t.p; ++beta)
    if (detail::congruent_to_any(t.r, t.p, {beta * t.q})) return beta;
  return std::nullopt;
}

inline bool is_ps(const Triple& t) { return is_primitive_Hprime(t) && middle_seifert_beta(t).has_value(); }

// |cable_m| > 1 with a primitive/primitive triple.
inline bool is_p_hyperseifert(const TTKParams& k) {
  validate(k);
  return std::labs(k.cable_m) > 1 && is_pp(normalized({k.p, k.q, k.r}));
}

enum class Classification { pp, ps };

inline std::string to_string(Classification t) { return t == Classification::pp ? "PP" : "PS"; }

using Witness = std::vector<std::pair<std::string, long>>;

struct FamilyMatch {
  Classification kind = Classification::pp;
  int family_index = 0;
  Witness witness;

  friend bool operator==(const FamilyMatch&, const FamilyMatch&) = default;
};

using FamilyMap = std::map<Triple, std::vector<FamilyMatch>>;

namespace detail {

inline void record(FamilyMap& out, long bound, Triple t, FamilyMatch m) {
  t = normalized(t);
  if (!is_valid_triple(t) || t.p > bound) return;
  auto& list = out[t];
  if (std::find(list.begin(), list.end(), m) == list.end()) list.push_back(std::move(m));
}

}  // namespace detail

// Triples with p <= bound from the five primitive/primitive families.
inline FamilyMap pp_families(long bound) {
  require(bound >= 3, ErrorKind::invalid_argument, "pp_families needs bound >= 3");
  FamilyMap out;
  for (long p = 3; p <= bound; ++p)
    for (long q = 2; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      detail::record(out, bound, {p, q, p + q}, {Classification::pp, 1, {}});
      detail::record(out, bound, {p, q, p - q}, {Classification::pp, 2, {}});
    }
  for (long j = 1; 2 * j + 1 <= bound; ++j) {
    const long q = 2 * j + 1;
    for (long delta : {1L, -1L}) {
      for (long i = 0;; ++i) {
        const long base = 2 * i * j + i + j;
        const Triple t{base + (1 + delta) / 2, q, base + (1 - delta) / 2};
        if (t.p > bound) break;
        detail::record(out, bound, t, {Classification::pp, 3, {{"i", i}, {"j", j}, {"delta", delta}}});
      }
    }
    for (long eps : {1L, -1L}) {
      detail::record(out, bound, {3 * j + 1 + (1 + eps) / 2, q, 4 * j + 2 + eps}, {Classification::pp, 4, {{"j", j}, {"epsilon", eps}}});
      for (long k = 1; k * q + 2 * eps <= bound; ++k) {
        if (j == 1 && k == 1 && eps == -1) continue;
        detail::record(out, bound, {k * q + 2 * eps, q, k * q + eps},
                       {Classification::pp, 5, {{"j", j}, {"k", k}, {"epsilon", eps}}});
      }
    }
  }
  return out;
}

// Triples with p <= bound from the three primitive/middle-Seifert families.
inline FamilyMap ps_families(long bound) {
  require(bound >= 5, ErrorKind::invalid_argument, "ps_families needs bound >= 5");
  FamilyMap out;
  for (long p = 3; p <= bound; ++p)
    for (long q = 2; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (long k = 2; k * q < p; ++k) detail::record(out, bound, {p, q, p - k * q}, {Classification::ps, 1, {{"k", k}}});
    }
  for (long p = 3; p <= bound; ++p)
    for (long i : {1L, 2L})
      if (p % 3 == i) detail::record(out, bound, {p, 3, p + i}, {Classification::ps, 2, {{"i", i}}});
  for (long j = 1; 2 * j + 1 <= bound; ++j) {
    const long q = 2 * j + 1;
    for (long eps : {1L, -1L})
      for (long i = 1;; ++i) {
        const Triple t{i * q + j + (1 + eps) / 2, q, (i + 1) * q + eps};
        if (t.p > bound) break;
        detail::record(out, bound, t, {Classification::ps, 3, {{"i", i}, {"j", j}, {"epsilon", eps}}});
      }
  }
  return out;
}

// Family 3..5 matches whose (normalized) triple has r = p + q or r = p - q.
inline std::vector<std::pair<Triple, FamilyMatch>> pp_later_families_at_sum_or_difference(long bound) {
  std::vector<std::pair<Triple, FamilyMatch>> out;
  for (const auto& [t, ms] : pp_families(bound))
    for (const auto& m : ms)
      if (m.family_index >= 3 && (t.r == t.p + t.q || t.r == t.p - t.q)) out.emplace_back(t, m);
  return out;
}

inline std::optional<long> witness_value(const FamilyMatch& m, const std::string& name) {
  for (const auto& [k, v] : m.witness)
    if (k == name) return v;
  return std::nullopt;
}

// The two known shapes of family triples that fail the beta bound.
inline bool is_documented_ps_exception(const Triple& t, const FamilyMatch& m) {
  if (m.kind != Classification::ps) return false;
  if (m.family_index == 2) return t.p < 7;
  if (m.family_index == 3) return witness_value(m, "i") == 1;
  return false;
}

struct CensusRow {
  Triple triple;
  bool pp = false;
  std::vector<FamilyMatch> pp_families;
  bool ps = false;
  std::optional<long> ps_beta;
  std::vector<FamilyMatch> ps_families;
  std::vector<std::string> flags;

  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

struct CensusReport {
  Classification kind = Classification::pp;
  long bound = 0;
  std::vector<Triple> missing;            // predicate true, no family
  std::vector<Triple> extra;              // family triple, predicate false
  std::vector<Triple> undocumented;       // extra triples outside the known exception shapes
  std::vector<CensusRow> rows;            // every valid triple, sorted

  bool clean() const {
    return missing.empty() && (kind == Classification::pp ? extra.empty() : undocumented.empty());
  }
};

inline std::vector<Triple> valid_triples(long bound) {
  std::vector<Triple> out;
  for (long p = 3; p <= bound; ++p)
    for (long q = 2; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (long r = 2; r <= p + q; ++r) out.push_back({p, q, r});
    }
  return out;
}

// Compares one classification predicate with its family list over all valid
// triples with p <= bound. Rows carry both classifications.
inline CensusReport census(Classification kind, long bound) {
  require(bound >= (kind == Classification::pp ? 3 : 5), ErrorKind::invalid_argument, "census bound too small");
  const FamilyMap pp = pp_families(std::max(bound, 3L));
  const FamilyMap ps = ps_families(std::max(bound, 5L));
  CensusReport report;
  report.kind = kind;
  report.bound = bound;
  static const std::vector<FamilyMatch> none;

  for (const Triple& t : valid_triples(bound)) {
    CensusRow row;
    row.triple = t;
    row.pp = is_pp(t);
    row.ps_beta = middle_seifert_beta(t);
    row.ps = row.ps_beta.has_value() && is_primitive_Hprime(t);
    auto it = pp.find(t);
    row.pp_families = it == pp.end() ? none : it->second;
    it = ps.find(t);
    row.ps_families = it == ps.end() ? none : it->second;

    if (row.pp && row.pp_families.empty()) row.flags.push_back("pp_missing");
    if (!row.pp && !row.pp_families.empty()) row.flags.push_back("pp_extra");
    if (row.ps && row.ps_families.empty()) row.flags.push_back("ps_missing");
    if (!row.ps && !row.ps_families.empty()) {
      row.flags.push_back("ps_predicate_invalid");
      const bool documented = std::all_of(row.ps_families.begin(), row.ps_families.end(),
                                          [&](const FamilyMatch& m) { return is_documented_ps_exception(t, m); });
      if (!documented) row.flags.push_back("ps_undocumented");
    }

    const bool pred = kind == Classification::pp ? row.pp : row.ps;
    const bool covered = !(kind == Classification::pp ? row.pp_families : row.ps_families).empty();
    if (pred && !covered) report.missing.push_back(t);
    if (!pred && covered) {
      report.extra.push_back(t);
      if (kind == Classification::ps &&
          std::find(row.flags.begin(), row.flags.end(), "ps_undocumented") != row.flags.end())
        report.undocumented.push_back(t);
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

inline CensusReport pp_census(long bound) { return census(Classification::pp, bound); }
inline CensusReport ps_census(long bound) { return census(Classification::ps, bound); }

// ---- serialization ----

inline nlohmann::ordered_json to_json(const FamilyMatch& m) {
  nlohmann::ordered_json witness = nlohmann::ordered_json::object();
  for (const auto& [k, v] : m.witness) witness[k] = v;
  return {{"index", m.family_index}, {"witness", witness}};
}

inline nlohmann::ordered_json to_json(const CensusRow& row) {
  nlohmann::ordered_json out;
  out["p"] = row.triple.p;
  out["q"] = row.triple.q;
  out["r"] = row.triple.r;
  out["pp"] = row.pp;
  out["pp_families"] = nlohmann::ordered_json::array();
  for (const auto& m : row.pp_families) out["pp_families"].push_back(to_json(m));
  out["ps"] = row.ps;
  out["ps_beta"] = row.ps_beta ? nlohmann::ordered_json(*row.ps_beta) : nlohmann::ordered_json(nullptr);
  out["ps_families"] = nlohmann::ordered_json::array();
  for (const auto& m : row.ps_families) out["ps_families"].push_back(to_json(m));
  out["flags"] = row.flags;
  return out;
}

namespace detail {

inline std::vector<FamilyMatch> matches_from_json(const nlohmann::ordered_json& list, Classification kind) {
  std::vector<FamilyMatch> out;
  for (const auto& item : list) {
    FamilyMatch m{kind, item.at("index").get<int>(), {}};
    for (const auto& [k, v] : item.at("witness").items()) m.witness.emplace_back(k, v.get<long>());
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace detail

inline CensusRow census_row_from_json(const std::string& line) {
  try {
    const auto j = nlohmann::ordered_json::parse(line);
    CensusRow row;
    row.triple = {j.at("p").get<long>(), j.at("q").get<long>(), j.at("r").get<long>()};
    row.pp = j.at("pp").get<bool>();
    row.pp_families = detail::matches_from_json(j.at("pp_families"), Classification::pp);
    row.ps = j.at("ps").get<bool>();
    if (!j.at("ps_beta").is_null()) row.ps_beta = j.at("ps_beta").get<long>();
    row.ps_families = detail::matches_from_json(j.at("ps_families"), Classification::ps);
    row.flags = j.at("flags").get<std::vector<std::string>>();
    return row;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::invalid_argument, std::string("bad census row: ") + e.what());
  }
}

// CSV columns match the JSON keys. Family lists are written as
// "index:name=value;name=value" entries separated by '|'; flags by '|'.
inline constexpr const char* kCensusCsvHeader = "p,q,r,pp,pp_families,ps,ps_beta,ps_families,flags";

namespace detail {

inline std::string encode_matches(const std::vector<FamilyMatch>& ms) {
  std::string out;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (i) out += "|";
    out += std::to_string(ms[i].family_index) + ":";
    for (std::size_t k = 0; k < ms[i].witness.size(); ++k) {
      if (k) out += ";";
      out += ms[i].witness[k].first + "=" + std::to_string(ms[i].witness[k].second);
    }
  }
  return out;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (s.back() == sep) out.emplace_back();
  return out;
}

inline long parse_long(const std::string& s) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::logic_error&) {
    fail(ErrorKind::invalid_argument, "bad integer '" + s + "' in census CSV");
  }
  require(used == s.size(), ErrorKind::invalid_argument, "bad integer '" + s + "' in census CSV");
  return v;
}

inline bool parse_bool(const std::string& s) {
  require(s == "true" || s == "false", ErrorKind::invalid_argument, "bad boolean '" + s + "' in census CSV");
  return s == "true";
}

inline std::vector<FamilyMatch> decode_matches(const std::string& s, Classification kind) {
  std::vector<FamilyMatch> out;
  for (const auto& entry : split(s, '|')) {
    const auto colon = entry.find(':');
    require(colon != std::string::npos, ErrorKind::invalid_argument, "bad family entry '" + entry + "'");
    FamilyMatch m{kind, static_cast<int>(parse_long(entry.substr(0, colon))), {}};
    for (const auto& kv : split(entry.substr(colon + 1), ';')) {
      const auto eq = kv.find('=');
      require(eq != std::string::npos, ErrorKind::invalid_argument, "bad witness '" + kv + "'");
      m.witness.emplace_back(kv.substr(0, eq), parse_long(kv.substr(eq + 1)));
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace detail

inline std::string to_csv(const CensusRow& row) {
  std::string flags;
  for (std::size_t i = 0; i < row.flags.size(); ++i) flags += (i ? "|" : "") + row.flags[i];
  std::ostringstream out;
  out << row.triple.p << ',' << row.triple.q << ',' << row.triple.r << ',' << (row.pp ? "true" : "false") << ','
      << detail::encode_matches(row.pp_families) << ',' << (row.ps ? "true" : "false") << ','
      << (row.ps_beta ? std::to_string(*row.ps_beta) : "") << ',' << detail::encode_matches(row.ps_families) << ','
      << flags;
  return out.str();
}

inline CensusRow census_row_from_csv(const std::string& line) {
  const auto cells = detail::split(line, ',');
  require(cells.size() == 9, ErrorKind::invalid_argument, "census CSV row needs 9 cells: '" + line + "'");
  CensusRow row;
  row.triple = {detail::parse_long(cells[0]), detail::parse_long(cells[1]), detail::parse_long(cells[2])};
  row.pp = detail::parse_bool(cells[3]);
  row.pp_families = detail::decode_matches(cells[4], Classification::pp);
  row.ps = detail::parse_bool(cells[5]);
  if (!cells[6].empty()) row.ps_beta = detail::parse_long(cells[6]);
  row.ps_families = detail::decode_matches(cells[7], Classification::ps);
  row.flags = detail::split(cells[8], '|');
  return row;
}

}  // namespace ttk
