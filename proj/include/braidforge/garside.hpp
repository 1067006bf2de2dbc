#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "words.hpp"

/*
  Garside structure of the braid monoid.

  Conventions used throughout this header:

  - Permutations are stored as image vectors on 0-based positions: perm[i] is
    the final position of the strand that starts at position i.

  - Products read left to right, matching diagram concatenation: (u v) means
    u first, then v.  On permutations this is perm(uv)[i] = perm(v)[perm(u)[i]].

  - A simple element (permutation braid) is a positive braid in which any two
    strands cross at most once.  Strands starting at i < j cross exactly when
    the permutation inverts the pair, so simples correspond one-to-one with
    permutations and the word length of a simple equals its inversion count.

  - sigma_i divides a simple p on the left iff p inverts the adjacent pair
    (i, i+1); stripping the atom swaps the entries at positions i-1, i of the
    image vector, and appending it on the right swaps the values i-1, i.

  The half twist Delta is the order-reversing permutation.  Left divisibility
  of simples is inversion-set containment, and common divisors can be peeled
  greedily: any atom dividing both x and y divides their meet.
*/

namespace braidforge::garside {

using Perm = std::vector<int>;

inline Perm perm_identity(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

inline Perm perm_delta(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = n - 1 - i;
  return p;
}

inline bool perm_is_identity(const Perm& p) {
  for (int i = 0; i < (int)p.size(); ++i)
    if (p[i] != i) return false;
  return true;
}

// u first, then v.
inline Perm perm_compose(const Perm& u, const Perm& v) {
  Perm r(u.size());
  for (size_t i = 0; i < u.size(); ++i) r[i] = v[u[i]];
  return r;
}

inline Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[p[i]] = (int)i;
  return r;
}

inline int inversion_count(const Perm& p) {
  int c = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++c;
  return c;
}

// Conjugation by Delta maps sigma_i to sigma_{n-i}; on permutations this is
// q[a] = n-1-p[n-1-a].
inline Perm perm_flip(const Perm& p) {
  int n = (int)p.size();
  Perm q(n);
  for (int a = 0; a < n; ++a) q[a] = n - 1 - p[n - 1 - a];
  return q;
}

// sigma_i <=_L p, with 1-based generator index i.
inline bool has_left_atom(const Perm& p, int i) { return p[i - 1] > p[i]; }

// p = sigma_i . rest; returns rest.
inline Perm strip_left_atom(Perm p, int i) {
  std::swap(p[i - 1], p[i]);
  return p;
}

// p . sigma_i
inline Perm append_atom(Perm p, int i) {
  for (auto& v : p)
    if (v == i - 1)
      v = i;
    else if (v == i)
      v = i - 1;
  return p;
}

struct SimpleFactor {
  int strands = 2;
  Perm image;

  bool operator==(const SimpleFactor&) const = default;
};

inline SimpleFactor simple_identity(int n) { return {n, perm_identity(n)}; }
inline SimpleFactor simple_delta(int n) { return {n, perm_delta(n)}; }
inline bool is_identity(const SimpleFactor& f) { return perm_is_identity(f.image); }
inline bool is_delta(const SimpleFactor& f) { return f.image == perm_delta(f.strands); }

// Greedy common-atom peeling.  Any atom dividing both arguments divides the
// meet, so the order of peeling does not matter; smallest index keeps it
// deterministic.
inline Perm perm_left_meet(Perm x, Perm y) {
  int n = (int)x.size();
  Perm m = perm_identity(n);
  for (;;) {
    int found = 0;
    for (int i = 1; i < n; ++i) {
      if (has_left_atom(x, i) && has_left_atom(y, i)) {
        found = i;
        break;
      }
    }
    if (!found) return m;
    m = append_atom(std::move(m), found);
    x = strip_left_atom(std::move(x), found);
    y = strip_left_atom(std::move(y), found);
  }
}

inline Perm perm_right_meet(const Perm& x, const Perm& y) {
  return perm_inverse(perm_left_meet(perm_inverse(x), perm_inverse(y)));
}

// partial(x) = x^{-1} Delta, the simple completing x to the half twist on the
// right.
inline Perm perm_right_complement(const Perm& x) {
  int n = (int)x.size();
  Perm inv = perm_inverse(x);
  Perm r(n);
  for (int a = 0; a < n; ++a) r[a] = n - 1 - inv[a];
  return r;
}

// Delta x^{-1}, completing x on the left.
inline Perm perm_left_complement(const Perm& x) {
  int n = (int)x.size();
  Perm inv = perm_inverse(x);
  Perm r(n);
  for (int a = 0; a < n; ++a) r[a] = inv[n - 1 - a];
  return r;
}

// Joins come from meets through the complement anti-isomorphism:
// x v y = lcomp(rmeet(rcomp(x), rcomp(y))).
inline Perm perm_left_join(const Perm& x, const Perm& y) {
  return perm_left_complement(perm_right_meet(perm_right_complement(x), perm_right_complement(y)));
}

inline SimpleFactor left_meet(const SimpleFactor& x, const SimpleFactor& y) {
  return {x.strands, perm_left_meet(x.image, y.image)};
}
inline SimpleFactor right_meet(const SimpleFactor& x, const SimpleFactor& y) {
  return {x.strands, perm_right_meet(x.image, y.image)};
}
inline SimpleFactor left_join(const SimpleFactor& x, const SimpleFactor& y) {
  return {x.strands, perm_left_join(x.image, y.image)};
}
inline SimpleFactor right_complement(const SimpleFactor& x) {
  return {x.strands, perm_right_complement(x.image)};
}
inline SimpleFactor left_complement(const SimpleFactor& x) {
  return {x.strands, perm_left_complement(x.image)};
}

struct PositiveBraid {
  int strands = 2;
  std::vector<int> letters;  // 1-based generator indices, all positive

  bool operator==(const PositiveBraid&) const = default;
};

inline PositiveBraid make_positive(int strands, std::vector<int> letters) {
  words::check_strands(strands);
  for (int v : letters) {
    if (v <= 0) throw Error("positive braid words take positive generator indices");
    words::check_letter(v, strands);
  }
  return PositiveBraid{strands, std::move(letters)};
}

inline Perm perm_of_positive(const PositiveBraid& a) {
  Perm p = perm_identity(a.strands);
  for (int i : a.letters) p = append_atom(std::move(p), i);
  return p;
}

// Shortest positive word for a simple, by peeling the smallest left atom.
inline PositiveBraid simple_word(const SimpleFactor& f) {
  PositiveBraid w{f.strands, {}};
  Perm p = f.image;
  for (;;) {
    int found = 0;
    for (int i = 1; i < f.strands; ++i)
      if (has_left_atom(p, i)) {
        found = i;
        break;
      }
    if (!found) break;
    w.letters.push_back(found);
    p = strip_left_atom(std::move(p), found);
  }
  return w;
}

// Accepts the word iff each pair of strands crosses at most once; the result
// is the simple with the word's permutation.
inline std::optional<SimpleFactor> simple_from_word(const PositiveBraid& a) {
  int n = a.strands;
  Perm pos = perm_identity(n);  // pos[k] = strand currently at position k
  std::vector<bool> crossed((size_t)n * n, false);
  for (int i : a.letters) {
    int u = pos[i - 1], v = pos[i];
    int lo = std::min(u, v), hi = std::max(u, v);
    if (crossed[(size_t)lo * n + hi]) return std::nullopt;
    crossed[(size_t)lo * n + hi] = true;
    std::swap(pos[i - 1], pos[i]);
  }
  return SimpleFactor{n, perm_inverse(pos)};
}

inline PositiveBraid delta_word(int n) { return simple_word(simple_delta(n)); }

// A pair (f, g) of simples is left weighted when no atom can migrate from g
// into f, i.e. partial(f) meet g is trivial.  This is equivalent to f being
// the maximal simple prefix of f g.
inline bool is_left_weighted(const SimpleFactor& f, const SimpleFactor& g) {
  return perm_is_identity(perm_left_meet(perm_right_complement(f.image), g.image));
}

// Left-greedy normal form of a positive word by local sliding: each pass moves
// the movable part C = partial(f_i) meet f_{i+1} leftward.  A word is in
// normal form exactly when every adjacent pair is left weighted, and each
// slide moves length strictly leftward, so the passes terminate.
inline std::vector<SimpleFactor> normal_form_positive(const PositiveBraid& a) {
  int n = a.strands;
  std::vector<Perm> fs;
  fs.reserve(a.letters.size());
  for (int i : a.letters) fs.push_back(append_atom(perm_identity(n), i));

  long long budget = 4 + (long long)fs.size() * (long long)fs.size() * 8 + 64;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < fs.size(); ++i) {
      Perm c = perm_left_meet(perm_right_complement(fs[i]), fs[i + 1]);
      if (!perm_is_identity(c)) {
        fs[i + 1] = perm_compose(perm_inverse(c), fs[i + 1]);
        fs[i] = perm_compose(fs[i], c);
        changed = true;
      }
      if (--budget < 0) throw std::logic_error("normal form sliding failed to settle");
    }
    fs.erase(std::remove_if(fs.begin(), fs.end(), perm_is_identity), fs.end());
  }

  std::vector<SimpleFactor> out;
  out.reserve(fs.size());
  for (auto& p : fs) out.push_back({n, std::move(p)});
  return out;
}

inline PositiveBraid word_of_simples(int n, const std::vector<SimpleFactor>& fs) {
  PositiveBraid w{n, {}};
  for (const auto& f : fs) {
    PositiveBraid fw = simple_word(f);
    w.letters.insert(w.letters.end(), fw.letters.begin(), fw.letters.end());
  }
  return w;
}

// Maximal simple prefix of a positive braid, with the corresponding remainder.
inline std::pair<SimpleFactor, PositiveBraid> pi_partial(const PositiveBraid& a) {
  auto nf = normal_form_positive(a);
  if (nf.empty()) return {simple_identity(a.strands), PositiveBraid{a.strands, {}}};
  SimpleFactor head = nf.front();
  std::vector<SimpleFactor> tail(nf.begin() + 1, nf.end());
  return {head, word_of_simples(a.strands, tail)};
}

inline SimpleFactor pi_left(const PositiveBraid& a) { return pi_partial(a).first; }
inline PositiveBraid partial_left(const PositiveBraid& a) { return pi_partial(a).second; }

// Canonical group form a^{-1} b with a, b positive and no common prefix.
// `negative` lists the normal form of a reversed, so reading negative then
// positive left to right spells the element.
struct GarsideNormalForm {
  int strands = 2;
  std::vector<SimpleFactor> negative;
  std::vector<SimpleFactor> positive;

  bool operator==(const GarsideNormalForm&) const = default;
};

inline int canonical_length(const GarsideNormalForm& nf) {
  return (int)(nf.negative.size() + nf.positive.size());
}

inline GarsideNormalForm group_normal_form(const BraidWord& w) {
  int n = w.strands;
  // Push every inverse letter into a global Delta^{-p} prefix:
  // sigma_i^{-1} = Delta^{-1} lcomp(sigma_i), and moving a positive word P
  // past Delta^{-1} flips its letters.
  long long p = 0;
  std::vector<int> P;
  for (int v : w.letters) {
    if (v > 0) {
      P.push_back(v);
    } else {
      ++p;
      for (auto& x : P) x = n - x;
      SimpleFactor lc = {n, perm_left_complement(append_atom(perm_identity(n), -v))};
      PositiveBraid lw = simple_word(lc);
      P.insert(P.end(), lw.letters.begin(), lw.letters.end());
    }
  }

  std::vector<SimpleFactor> fs = normal_form_positive(PositiveBraid{n, std::move(P)});
  size_t lead = 0;
  while (p > 0 && lead < fs.size() && is_delta(fs[lead])) {
    --p;
    ++lead;
  }
  fs.erase(fs.begin(), fs.begin() + lead);

  GarsideNormalForm nf;
  nf.strands = n;
  if (p == 0) {
    nf.positive = std::move(fs);
    return nf;
  }

  // Cancel the common prefix of Delta^p and the remaining positive part.  The
  // maximal divisor of a positive braid that divides Delta^m is the product of
  // the first m normal factors, so with m = min(p, #factors):
  //   (f_1 ... f_m)^{-1} Delta^p
  //     = partial(f_m) . tau(partial(f_{m-1})) ... tau^{m-1}(partial(f_1)) . Delta^{p-m}
  // where tau is conjugation by Delta.
  long long q = (long long)fs.size();
  long long m = std::min(p, q);
  std::vector<int> neg_word;
  for (long long j = m; j >= 1; --j) {
    Perm g = perm_right_complement(fs[(size_t)j - 1].image);
    if ((m - j) % 2 == 1) g = perm_flip(g);
    PositiveBraid gw = simple_word({n, g});
    neg_word.insert(neg_word.end(), gw.letters.begin(), gw.letters.end());
  }
  PositiveBraid dw = delta_word(n);
  for (long long i = 0; i < p - m; ++i)
    neg_word.insert(neg_word.end(), dw.letters.begin(), dw.letters.end());

  std::vector<SimpleFactor> neg = normal_form_positive(PositiveBraid{n, std::move(neg_word)});
  std::reverse(neg.begin(), neg.end());
  nf.negative = std::move(neg);
  nf.positive.assign(fs.begin() + (size_t)m, fs.end());
  return nf;
}

inline BraidWord word_of(const GarsideNormalForm& nf) {
  BraidWord w{nf.strands, {}};
  for (const auto& f : nf.negative) {
    PositiveBraid fw = simple_word(f);
    for (auto it = fw.letters.rbegin(); it != fw.letters.rend(); ++it) w.letters.push_back(-*it);
  }
  for (const auto& f : nf.positive) {
    PositiveBraid fw = simple_word(f);
    w.letters.insert(w.letters.end(), fw.letters.begin(), fw.letters.end());
  }
  return w;
}

inline bool equals(const BraidWord& u, const BraidWord& v) {
  if (u.strands != v.strands) throw Error("cannot compare words with different strand counts");
  if (words::exponent_sum(u) != words::exponent_sum(v)) return false;
  return group_normal_form(u) == group_normal_form(v);
}

}  // namespace braidforge::garside
