#pragma once

// Braid words and the twisted torus knot braids.
//
// Letter i > 0 is sigma_i, the positive crossing where strand i passes over
// strand i+1; letter -i is its inverse. Words are read left to right, top to
// bottom.

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "ttk/error.hpp"

namespace ttk {

class BraidWord {
 public:
  BraidWord() = default;

  BraidWord(int strands, std::vector<int> letters) : strands_(strands), letters_(std::move(letters)) {
    require(strands_ >= 1, ErrorKind::invalid_argument, "braid needs at least one strand");
    for (int l : letters_) check_letter(l);
  }

  int strands() const noexcept { return strands_; }
  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t crossing_count() const noexcept { return letters_.size(); }

  long writhe() const {
    long w = 0;
    for (int l : letters_) w += (l > 0) ? 1 : -1;
    return w;
  }

  void push_back(int letter) {
    check_letter(letter);
    letters_.push_back(letter);
  }

  BraidWord& append(const BraidWord& other) {
    require(other.strands_ <= strands_, ErrorKind::invalid_argument, "appending a wider braid");
    letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
    return *this;
  }

  BraidWord inverse() const {
    std::vector<int> out(letters_.rbegin(), letters_.rend());
    for (int& l : out) l = -l;
    return BraidWord(strands_, std::move(out));
  }

  // Word repeated |k| times; negative k repeats the inverse.
  BraidWord power(long k) const {
    const BraidWord base = (k < 0) ? inverse() : *this;
    BraidWord out(strands_, {});
    out.letters_.reserve(base.letters_.size() * static_cast<std::size_t>(std::labs(k)));
    for (long i = 0; i < std::labs(k); ++i) out.append(base);
    return out;
  }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

  // "B<n>: l1 l2 ... lk"; an empty word is "B<n>:".
  std::string to_string() const {
    std::string out = "B" + std::to_string(strands_) + ":";
    for (int l : letters_) out += " " + std::to_string(l);
    return out;
  }

  static BraidWord parse(const std::string& text) {
    std::istringstream in(text);
    std::string head;
    in >> head;
    require(head.size() >= 3 && head.front() == 'B' && head.back() == ':', ErrorKind::invalid_argument,
            "braid text must start with 'B<n>:', got '" + text + "'");
    int strands = 0;
    try {
      std::size_t used = 0;
      strands = std::stoi(head.substr(1, head.size() - 2), &used);
      require(used == head.size() - 2, ErrorKind::invalid_argument, "bad strand count in '" + text + "'");
    } catch (const std::logic_error&) {
      fail(ErrorKind::invalid_argument, "bad strand count in '" + text + "'");
    }
    std::vector<int> letters;
    std::string tok;
    while (in >> tok) {
      std::size_t used = 0;
      int l = 0;
      try {
        l = std::stoi(tok, &used);
      } catch (const std::logic_error&) {
        fail(ErrorKind::invalid_argument, "bad braid letter '" + tok + "'");
      }
      require(used == tok.size(), ErrorKind::invalid_argument, "bad braid letter '" + tok + "'");
      letters.push_back(l);
    }
    return BraidWord(strands, std::move(letters));
  }

 private:
  void check_letter(int l) const {
    require(l != 0 && std::abs(l) <= strands_ - 1, ErrorKind::invalid_argument,
            "letter " + std::to_string(l) + " out of range for " + std::to_string(strands_) + " strands");
  }

  int strands_ = 1;
  std::vector<int> letters_;
};

inline BraidWord mirror(const BraidWord& w) {
  std::vector<int> out = w.letters();
  for (int& l : out) l = -l;
  return BraidWord(w.strands(), std::move(out));
}

// perm[i] is the bottom position reached by the strand entering at top position i.
inline std::vector<int> closure_permutation(const BraidWord& w) {
  std::vector<int> at(w.strands());  // at[position] = starting strand
  std::iota(at.begin(), at.end(), 0);
  for (int l : w.letters()) {
    int i = std::abs(l) - 1;
    std::swap(at[i], at[i + 1]);
  }
  std::vector<int> perm(w.strands());
  for (int pos = 0; pos < w.strands(); ++pos) perm[at[pos]] = pos;
  return perm;
}

inline int component_count(const BraidWord& w) {
  const auto perm = closure_permutation(w);
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) seen[j] = true;
  }
  return cycles;
}

// sigma_{k-1} ... sigma_1 on the given number of strands; empty for k <= 1.
inline BraidWord descending_cycle(int strands, int k) {
  std::vector<int> letters;
  for (int i = k - 1; i >= 1; --i) letters.push_back(i);
  return BraidWord(strands, std::move(letters));
}

inline BraidWord torus_braid(int p, long q) {
  require(p >= 2, ErrorKind::invalid_argument, "torus braid needs p >= 2");
  return descending_cycle(p, p).power(q);
}

// K(p, q, r, cable_m, twist_n). Only cable_m = +-1 has a braid realization here.
struct TTKParams {
  long p = 0;
  long q = 0;
  long r = 0;
  long cable_m = 1;
  long twist_n = 1;

  friend bool operator==(const TTKParams&, const TTKParams&) = default;

  std::string to_string() const {
    std::string out = "K(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r);
    if (cable_m != 1) out += "," + std::to_string(cable_m);
    return out + "," + std::to_string(twist_n) + ")";
  }
};

// Parameter rules for a twisted torus knot: p, q >= 2 coprime, 2 <= r <= p+q,
// cable_m and twist_n nonzero and coprime.
inline void validate(const TTKParams& k) {
  const std::string name = k.to_string();
  require(k.p >= 2 && k.q >= 2, ErrorKind::invalid_argument, name + ": need p, q >= 2");
  require(std::gcd(k.p, k.q) == 1, ErrorKind::invalid_argument, name + ": need gcd(p, q) = 1");
  require(k.r >= 2 && k.r <= k.p + k.q, ErrorKind::invalid_argument, name + ": need 2 <= r <= p+q");
  require(k.cable_m != 0 && k.twist_n != 0, ErrorKind::invalid_argument, name + ": m and n must be nonzero");
  require(std::gcd(k.cable_m, k.twist_n) == 1, ErrorKind::invalid_argument, name + ": need gcd(m, n) = 1");
}

// (sigma_{p-1}...sigma_1)^q (sigma_{r-1}...sigma_1)^{n r}: the twist block is n
// full twists on r strands. Degenerate q = 1 or r = 1 words (the smallest
// members of the Fibonacci family) are built by the same rule.
inline BraidWord ttk_braid(const TTKParams& k) {
  const std::string name = k.to_string();
  require(k.cable_m == 1, ErrorKind::invalid_argument, name + ": braid needs cable m = 1");
  require(k.p >= 2 && k.q >= 1 && k.r >= 1, ErrorKind::invalid_argument, name + ": need p >= 2, q >= 1, r >= 1");
  require(std::gcd(k.p, k.q) == 1, ErrorKind::invalid_argument, name + ": need gcd(p, q) = 1");
  require(k.twist_n != 0, ErrorKind::invalid_argument, name + ": twist n must be nonzero");
  require(k.r <= k.p, ErrorKind::unsupported_range, name + ": this construction needs r <= p");
  const int strands = static_cast<int>(k.p);
  BraidWord w = torus_braid(strands, k.q);
  w.append(descending_cycle(strands, static_cast<int>(k.r)).power(k.twist_n * k.r));
  return w;
}

// Product over i = q down to 1 of sigma_i sigma_{i+1} ... sigma_{i+p-1}: the
// leftmost q strands cross the rightmost p strands. Its closure alone is T(p, q).
inline BraidWord bundle_crossing_block(int q, int p) {
  require(q >= 1 && p >= 1, ErrorKind::invalid_argument, "crossing block needs p, q >= 1");
  BraidWord w(p + q, {});
  for (int i = q; i >= 1; --i)
    for (int j = i; j <= i + p - 1; ++j) w.push_back(j);
  return w;
}

// r = p + q: n(p+q) copies of sigma_{p+q-1}...sigma_1, then the crossing block.
inline BraidWord ttk_braid_full(const TTKParams& k) {
  const std::string name = k.to_string();
  require(k.cable_m == 1, ErrorKind::invalid_argument, name + ": braid needs cable m = 1");
  require(k.p >= 1 && k.q >= 1, ErrorKind::invalid_argument, name + ": need p, q >= 1");
  require(k.r == k.p + k.q, ErrorKind::invalid_argument, name + ": full construction needs r = p+q");
  require(std::gcd(k.p, k.q) == 1, ErrorKind::invalid_argument, name + ": need gcd(p, q) = 1");
  require(k.twist_n != 0, ErrorKind::invalid_argument, name + ": twist n must be nonzero");
  const int strands = static_cast<int>(k.r);
  BraidWord w = descending_cycle(strands, strands).power(k.twist_n * k.r);
  w.append(bundle_crossing_block(static_cast<int>(k.q), static_cast<int>(k.p)));
  return w;
}

// Chooses a construction: r <= p directly, r <= q after the (p, q) swap, or
// r = p+q; anything else is the unsupported p < r < p+q range.
inline BraidWord build_braid(const TTKParams& k) {
  if (k.r <= k.p) return ttk_braid(k);
  if (k.r <= k.q) {
    TTKParams swapped = k;
    std::swap(swapped.p, swapped.q);
    return ttk_braid(swapped);
  }
  if (k.r == k.p + k.q) return ttk_braid_full(k);
  fail(ErrorKind::unsupported_range, k.to_string() + ": no braid construction for max(p,q) < r < p+q");
}

}  // namespace ttk
