#pragma once

// Sparse Laurent polynomials in one formal variable with arbitrary-precision
// integer coefficients.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ttk/error.hpp"

namespace ttk {

using Integer = mpz_class;

inline Integer ipow(const Integer& base, unsigned long exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

inline long to_long(const Integer& v, const char* what = "value") {
  if (!v.fits_slong_p()) fail(ErrorKind::overflow, std::string(what) + " does not fit in a machine integer");
  return v.get_si();
}

class LaurentPolynomial {
 public:
  using Terms = std::map<int, Integer>;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(std::string var) : var_(std::move(var)) {}

  static LaurentPolynomial constant(const Integer& c, std::string var = "t") {
    return monomial(c, 0, std::move(var));
  }

  static LaurentPolynomial monomial(const Integer& c, int exp, std::string var = "t") {
    LaurentPolynomial p(std::move(var));
    p.add_term(exp, c);
    return p;
  }

  // Builds from (exponent, coefficient) pairs; repeated exponents accumulate.
  static LaurentPolynomial from_terms(const std::vector<std::pair<int, long>>& terms, std::string var = "t") {
    LaurentPolynomial p(std::move(var));
    for (const auto& [e, c] : terms) p.add_term(e, Integer(c));
    return p;
  }

  const std::string& variable() const noexcept { return var_; }
  void set_variable(std::string var) { var_ = std::move(var); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  int min_exponent() const {
    require(!is_zero(), ErrorKind::invalid_argument, "min_exponent of zero polynomial");
    return terms_.begin()->first;
  }

  int max_exponent() const {
    require(!is_zero(), ErrorKind::invalid_argument, "max_exponent of zero polynomial");
    return terms_.rbegin()->first;
  }

  Integer coefficient(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add_term(int exp, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exp, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  LaurentPolynomial operator-() const {
    LaurentPolynomial out(var_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }

  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial out(a.var_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
  }

  LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

  friend LaurentPolynomial operator*(const Integer& k, const LaurentPolynomial& p) {
    LaurentPolynomial out(p.var_);
    if (k == 0) return out;
    for (const auto& [e, c] : p.terms_) out.terms_.emplace(e, k * c);
    return out;
  }

  // Equality ignores the variable tag of the zero polynomial only.
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.is_zero() && b.is_zero()) return true;
    return a.var_ == b.var_ && a.terms_ == b.terms_;
  }

  // Multiplication by var^k.
  LaurentPolynomial shifted(int k) const {
    LaurentPolynomial out(var_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
    return out;
  }

  // Substitution var -> var^k; k = -1 is the mirror map t -> 1/t.
  LaurentPolynomial substitute_power(int k) const {
    require(k != 0, ErrorKind::invalid_argument, "substitute_power by 0");
    LaurentPolynomial out(var_);
    for (const auto& [e, c] : terms_) out.add_term(e * k, c);
    return out;
  }

  LaurentPolynomial inverted() const { return substitute_power(-1); }

  LaurentPolynomial pow(unsigned n) const {
    LaurentPolynomial out = constant(1, var_);
    for (unsigned i = 0; i < n; ++i) out *= *this;
    return out;
  }

  // Evaluation at an integer point; negative exponents need x = +-1.
  Integer evaluate(long x) const {
    Integer acc = 0;
    for (const auto& [e, c] : terms_) {
      if (e < 0) {
        require(x == 1 || x == -1, ErrorKind::invalid_argument, "cannot evaluate negative powers at " + std::to_string(x));
        acc += ((-e) % 2 != 0 && x == -1) ? Integer(-c) : c;
      } else {
        acc += c * ipow(Integer(x), static_cast<unsigned long>(e));
      }
    }
    return acc;
  }

  // Exact division; returns false (leaving q untouched) when d does not divide *this.
  bool divide_exact(const LaurentPolynomial& d, LaurentPolynomial& q) const {
    require(!d.is_zero(), ErrorKind::invalid_argument, "division by zero polynomial");
    LaurentPolynomial quotient(var_);
    if (is_zero()) {
      q = quotient;
      return true;
    }
    Terms rem = terms_;
    const int d_lo = d.min_exponent();
    const int d_hi = d.max_exponent();
    const Integer& lead = d.terms_.rbegin()->second;
    while (!rem.empty()) {
      const int r_hi = rem.rbegin()->first;
      if (r_hi - (d_hi - d_lo) < rem.begin()->first) return false;
      const Integer& rc = rem.rbegin()->second;
      if (!mpz_divisible_p(rc.get_mpz_t(), lead.get_mpz_t())) return false;
      Integer factor = rc / lead;
      int shift = r_hi - d_hi;
      quotient.terms_.emplace(shift, factor);
      for (const auto& [e, c] : d.terms_) {
        auto [it, inserted] = rem.try_emplace(e + shift, -factor * c);
        if (!inserted) {
          it->second -= factor * c;
          if (it->second == 0) rem.erase(it);
        }
      }
    }
    q = std::move(quotient);
    return true;
  }

  LaurentPolynomial divided_by(const LaurentPolynomial& d) const {
    LaurentPolynomial q;
    if (!divide_exact(d, q)) fail(ErrorKind::invalid_argument, "inexact division of " + to_string() + " by " + d.to_string());
    return q;
  }

  bool is_symmetric() const {
    if (is_zero()) return true;
    for (const auto& [e, c] : terms_)
      if (coefficient(-e) != c) return false;
    return true;
  }

  // Human form, increasing exponents: "-t^-1 + 1 - t".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Integer mag = abs(c);
      if (first) {
        if (c < 0) out += "-";
      } else {
        out += (c < 0) ? " - " : " + ";
      }
      first = false;
      if (e == 0) {
        out += mag.get_str();
        continue;
      }
      if (mag != 1) out += mag.get_str();
      out += var_;
      if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
  }

  // Parses the human form written by to_string(); also accepts "2*t^3".
  static LaurentPolynomial parse(const std::string& text, const std::string& var = "t") {
    std::string s;
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    require(!s.empty(), ErrorKind::invalid_argument, "empty polynomial text");
    LaurentPolynomial out(var);
    if (s == "0") return out;

    std::vector<std::string> pieces;
    std::size_t start = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
      if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '^') {
        pieces.push_back(s.substr(start, i - start));
        start = i;
      }
    }
    pieces.push_back(s.substr(start));

    for (std::string piece : pieces) {
      int sign = 1;
      if (!piece.empty() && (piece[0] == '+' || piece[0] == '-')) {
        if (piece[0] == '-') sign = -1;
        piece.erase(0, 1);
      }
      require(!piece.empty(), ErrorKind::invalid_argument, "dangling sign in '" + text + "'");
      auto vpos = piece.find(var);
      Integer coef = 1;
      int exp = 0;
      if (vpos == std::string::npos) {
        coef = parse_integer(piece, text);
      } else {
        std::string head = piece.substr(0, vpos);
        if (!head.empty() && head.back() == '*') head.pop_back();
        if (!head.empty()) coef = parse_integer(head, text);
        std::string tail = piece.substr(vpos + var.size());
        if (tail.empty()) {
          exp = 1;
        } else {
          require(tail[0] == '^' && tail.size() > 1, ErrorKind::invalid_argument, "bad exponent in '" + text + "'");
          exp = static_cast<int>(to_long(parse_integer(tail.substr(1), text), "exponent"));
        }
      }
      out.add_term(exp, sign * coef);
    }
    return out;
  }

  // Canonical JSON: {"var":"t","terms":[[exp,coef],...]}, exponents increasing.
  // Coefficients outside the 64-bit range are emitted as decimal strings.
  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [e, c] : terms_) {
      if (c.fits_slong_p())
        terms.push_back({e, c.get_si()});
      else
        terms.push_back({e, c.get_str()});
    }
    nlohmann::ordered_json out;
    out["var"] = var_;
    out["terms"] = std::move(terms);
    return out;
  }

  template <class Json>
  static LaurentPolynomial from_json(const Json& j) {
    require(j.is_object() && j.contains("var") && j.contains("terms"), ErrorKind::invalid_argument,
            "polynomial JSON needs 'var' and 'terms'");
    LaurentPolynomial out(j.at("var").template get<std::string>());
    int prev = 0;
    bool first = true;
    for (const auto& term : j.at("terms")) {
      require(term.is_array() && term.size() == 2, ErrorKind::invalid_argument, "polynomial term must be [exp, coef]");
      int e = term[0].template get<int>();
      require(first || e > prev, ErrorKind::invalid_argument, "polynomial exponents must be strictly increasing");
      Integer c = term[1].is_string() ? Integer(term[1].template get<std::string>()) : Integer(term[1].template get<long>());
      require(c != 0, ErrorKind::invalid_argument, "zero coefficient in canonical polynomial");
      out.terms_.emplace(e, c);
      prev = e;
      first = false;
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p) { return os << p.to_string(); }

 private:
  static Integer parse_integer(const std::string& s, const std::string& context) {
    require(!s.empty(), ErrorKind::invalid_argument, "missing number in '" + context + "'");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    require(i < s.size(), ErrorKind::invalid_argument, "missing digits in '" + context + "'");
    for (std::size_t k = i; k < s.size(); ++k)
      require(std::isdigit(static_cast<unsigned char>(s[k])) != 0, ErrorKind::invalid_argument,
              "unexpected '" + s + "' in '" + context + "'");
    return Integer(s[0] == '+' ? s.substr(1) : s);
  }

  std::string var_ = "t";
  Terms terms_;
};

}  // namespace ttk
