#pragma once

#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace braidforge {

// A word in the Artin generators sigma_1 .. sigma_{n-1} of the braid group on
// `strands` strands.  Letters are signed indices: +i stands for sigma_i and -i
// for its inverse.  The empty word is the identity.
struct BraidWord {
  int strands = 2;
  std::vector<int> letters;

  bool operator==(const BraidWord&) const = default;
};

namespace words {

inline void check_strands(int strands) {
  if (strands < 2) throw Error("braid index must be at least 2, got " + std::to_string(strands));
}

inline void check_letter(int v, int strands) {
  if (v == 0) throw Error("generator index 0 is not a braid letter");
  int a = v < 0 ? -v : v;
  if (a > strands - 1)
    throw Error("generator index " + std::to_string(v) + " out of range for " +
                std::to_string(strands) + " strands");
}

inline BraidWord make_word(int strands, std::vector<int> letters) {
  check_strands(strands);
  for (int v : letters) check_letter(v, strands);
  return BraidWord{strands, std::move(letters)};
}

// Parses whitespace-separated signed integers, e.g. "1 -2 1".
inline BraidWord parse_braid(std::string_view text, int strands) {
  check_strands(strands);
  BraidWord w{strands, {}};
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    int v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
      throw Error("malformed braid letter '" + tok + "'");
    check_letter(v, strands);
    w.letters.push_back(v);
  }
  return w;
}

inline std::string to_text(const BraidWord& w) {
  std::string out;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w.letters[i]);
  }
  return out;
}

inline BraidWord concat(const BraidWord& u, const BraidWord& v) {
  if (u.strands != v.strands) throw Error("cannot concatenate words with different strand counts");
  BraidWord w = u;
  w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
  return w;
}

inline BraidWord invert(const BraidWord& u) {
  BraidWord w{u.strands, {}};
  w.letters.reserve(u.letters.size());
  for (auto it = u.letters.rbegin(); it != u.letters.rend(); ++it) w.letters.push_back(-*it);
  return w;
}

// Cancels adjacent inverse pairs until none remain.
inline BraidWord free_reduce(const BraidWord& u) {
  BraidWord w{u.strands, {}};
  for (int v : u.letters) {
    if (!w.letters.empty() && w.letters.back() == -v)
      w.letters.pop_back();
    else
      w.letters.push_back(v);
  }
  return w;
}

inline int exponent_sum(const BraidWord& u) {
  int e = 0;
  for (int v : u.letters) e += v > 0 ? 1 : -1;
  return e;
}

inline BraidWord power(const BraidWord& u, int k) {
  BraidWord base = k < 0 ? invert(u) : u;
  int reps = k < 0 ? -k : k;
  BraidWord w{u.strands, {}};
  for (int i = 0; i < reps; ++i) w = concat(w, base);
  return w;
}

// g w g^{-1}
inline BraidWord conjugate(const BraidWord& g, const BraidWord& w) {
  return concat(concat(g, w), invert(g));
}

}  // namespace words
}  // namespace braidforge
