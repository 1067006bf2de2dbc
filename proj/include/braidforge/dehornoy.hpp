#pragma once

#include <cstdlib>
#include <vector>

#include "words.hpp"

/*
  Dehornoy's ordering, set up so that the distinguished generator of a braid
  word is the one with the LARGEST index: an element of B_n is sigma_k-positive
  when it can be written as alpha_0 sigma_k alpha_1 ... sigma_k alpha_l with
  every alpha_j using only generators of index below k.  Every nontrivial braid
  is sigma_k-positive or sigma_k-negative for exactly one k (the level of the
  filtration B_2 < B_3 < ... it genuinely lives in), which gives a left
  invariant total order: u < v iff u^{-1}v is sigma-positive.

  The decision procedure is handle reduction.  A sigma_k-handle is a subword
  sigma_k^e alpha sigma_k^{-e} with alpha below k; removing it rewrites each
  sigma_{k-1}^d inside alpha as sigma_{k-1}^{-e} sigma_k^d sigma_{k-1}^e, an
  equality that follows from the braid relation.  Reducing a handle is only
  safe when no (k-1)-handle is nested inside it, so the loop below always
  descends to an innermost handle first.  A word with no sigma_k-handle has all
  its sigma_k letters of one sign, and a word that reduces to nothing is
  trivial.  Reduction sequences of nested-free handles terminate; the step
  budget is a guard against implementation bugs, not a semantic limit.
*/

namespace braidforge::dehornoy {

enum class Kind { Identity, Positive, Negative };

struct Verdict {
  Kind kind = Kind::Identity;
  int index = 0;  // the k of sigma_k-positive / negative; 0 for the identity
  BraidWord certificate;  // handle-free witness word, equal to the input
};

namespace detail {

inline int abs_index(int v) { return v < 0 ? -v : v; }

// Positions of the first adjacent opposite-sign pair of +-k letters, or
// {-1,-1}.  Letters between two adjacent k-occurrences have index below k
// by construction.
inline std::pair<int, int> first_handle(const std::vector<int>& ls, int k) {
  int prev = -1;
  for (int i = 0; i < (int)ls.size(); ++i) {
    if (abs_index(ls[i]) != k) continue;
    if (prev >= 0 && ls[prev] == -ls[i]) return {prev, i};
    prev = i;
  }
  return {-1, -1};
}

// Looks for a (k-1)-handle strictly inside (i1, i2).
inline std::pair<int, int> nested_handle(const std::vector<int>& ls, int i1, int i2, int k) {
  if (k < 2) return {-1, -1};
  int prev = -1;
  for (int i = i1 + 1; i < i2; ++i) {
    if (abs_index(ls[i]) != k - 1) continue;
    if (prev >= 0 && ls[prev] == -ls[i]) return {prev, i};
    prev = i;
  }
  return {-1, -1};
}

// Replaces the handle at [i1, i2] (both letters of index k, opposite signs,
// nothing of index >= k between them, no nested (k-1)-handle).
inline void substitute(std::vector<int>& ls, int i1, int i2, int k) {
  int e = ls[i1] > 0 ? 1 : -1;
  std::vector<int> out;
  out.reserve(ls.size() + 4);
  out.insert(out.end(), ls.begin(), ls.begin() + i1);
  for (int i = i1 + 1; i < i2; ++i) {
    int v = ls[i];
    if (abs_index(v) == k - 1) {
      int d = v > 0 ? 1 : -1;
      out.push_back(-e * (k - 1));
      out.push_back(d * k);
      out.push_back(e * (k - 1));
    } else {
      out.push_back(v);
    }
  }
  out.insert(out.end(), ls.begin() + i2 + 1, ls.end());
  ls = std::move(out);
}

inline void free_reduce_inplace(std::vector<int>& ls) {
  std::vector<int> out;
  out.reserve(ls.size());
  for (int v : ls) {
    if (!out.empty() && out.back() == -v)
      out.pop_back();
    else
      out.push_back(v);
  }
  ls = std::move(out);
}

}  // namespace detail

inline Verdict main_verdict(const BraidWord& w) {
  using namespace detail;
  std::vector<int> ls = words::free_reduce(w).letters;
  long long budget = 1'000'000;

  for (;;) {
    if (ls.empty()) return {Kind::Identity, 0, BraidWord{w.strands, {}}};
    int k = 0;
    for (int v : ls) k = std::max(k, abs_index(v));

    for (;;) {
      auto [i1, i2] = first_handle(ls, k);
      if (i1 < 0) break;
      // Descend to an innermost handle before substituting.
      int level = k;
      for (;;) {
        auto [j1, j2] = nested_handle(ls, i1, i2, level);
        if (j1 < 0) break;
        i1 = j1;
        i2 = j2;
        --level;
      }
      substitute(ls, i1, i2, level);
      free_reduce_inplace(ls);
      if (--budget < 0) throw std::logic_error("handle reduction exceeded its step budget");
    }

    bool has_k = false, positive = false;
    for (int v : ls)
      if (abs_index(v) == k) {
        has_k = true;
        positive = v > 0;
        break;
      }
    if (has_k)
      return {positive ? Kind::Positive : Kind::Negative, k, BraidWord{w.strands, ls}};
    // The top generator vanished entirely; rerun at the next level down.
  }
}

inline bool is_dehornoy_positive(const BraidWord& w) {
  return main_verdict(w).kind == Kind::Positive;
}

enum class Ordering { LT, EQ, GT };

struct CompareResult {
  Ordering order = Ordering::EQ;
  BraidWord certificate;  // sigma-consistent form of u^{-1} v
};

inline CompareResult compare(const BraidWord& u, const BraidWord& v) {
  if (u.strands != v.strands) throw Error("cannot compare words with different strand counts");
  Verdict d = main_verdict(words::concat(words::invert(u), v));
  switch (d.kind) {
    case Kind::Positive: return {Ordering::LT, d.certificate};
    case Kind::Negative: return {Ordering::GT, d.certificate};
    default: return {Ordering::EQ, d.certificate};
  }
}

}  // namespace braidforge::dehornoy
