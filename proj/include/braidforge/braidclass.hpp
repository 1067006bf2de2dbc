#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "garside.hpp"
#include "words.hpp"

namespace braidforge::braidclass {


// How many powers of f are tried when looking for a cycle in the orbit of a
// candidate parabolic.  Conjugation is invertible, so a finite orbit is purely
// periodic and must return to its starting point.
inline constexpr int kOrbitCap = 16;

// Generator subset X of {1..n-1}, sorted, defining the standard parabolic
// generated by the sigma_i with i in X.
inline std::vector<int> check_support(int strands, std::vector<int> X) {
  std::sort(X.begin(), X.end());
  X.erase(std::unique(X.begin(), X.end()), X.end());
  for (int i : X)
    if (i < 1 || i > strands - 1) throw Error("support index out of range");
  return X;
}

// Block id per strand: strands i-1 and i share a block exactly when generator
// i is in X.
inline std::vector<int> strand_blocks(int strands, const std::vector<int>& X) {
  std::set<int> xs(X.begin(), X.end());
  std::vector<int> block(strands, 0);
  int b = 0;
  for (int j = 1; j < strands; ++j) {
    if (!xs.count(j)) ++b;
    block[j] = b;
  }
  return block;
}

// h lies in the standard parabolic on X iff every factor of its canonical
// form permutes strands within the X-blocks.  Standard parabolic submonoids
// are closed under divisors and meets, so the canonical form of a parabolic
// element never leaves the parabolic; checking factors is exact, not a
// heuristic.
inline bool parabolic_membership(const BraidWord& h, const std::vector<int>& X) {
  std::vector<int> sup = check_support(h.strands, X);
  std::vector<int> block = strand_blocks(h.strands, sup);
  auto ok = [&](const garside::SimpleFactor& f) {
    for (int a = 0; a < h.strands; ++a)
      if (block[f.image[a]] != block[a]) return false;
    return true;
  };
  garside::GarsideNormalForm nf = garside::group_normal_form(h);
  for (const auto& f : nf.negative)
    if (!ok(f)) return false;
  for (const auto& f : nf.positive)
    if (!ok(f)) return false;
  return true;
}

// Conjugate g (B_n)_X g^{-1} of a standard parabolic; a proper nontrivial one.
struct ParabolicRep {
  int strands = 2;
  BraidWord conjugator;
  std::vector<int> support;
};

inline ParabolicRep make_parabolic(int strands, BraidWord conjugator, std::vector<int> support) {
  if (conjugator.strands != strands) throw Error("conjugator strand count mismatch");
  std::vector<int> X = check_support(strands, std::move(support));
  if (X.empty()) throw Error("parabolic support must be nonempty");
  if ((int)X.size() == strands - 1) throw Error("parabolic support must be proper");
  return {strands, std::move(conjugator), std::move(X)};
}

// Whether h normalizes the parabolic: conjugating each generator of the
// parabolic by h, in both directions, stays inside it.
inline bool normalizes(const BraidWord& h, const ParabolicRep& p) {
  if (h.strands != p.strands) throw Error("strand count mismatch");
  BraidWord c = words::concat(words::concat(words::invert(p.conjugator), h), p.conjugator);
  for (int x : p.support) {
    BraidWord gen = words::make_word(p.strands, {x});
    if (!parabolic_membership(words::conjugate(c, gen), p.support)) return false;
    if (!parabolic_membership(words::conjugate(words::invert(c), gen), p.support)) return false;
  }
  return true;
}

struct PeriodicWitness {
  int m = 0;
  long long k = 0;  // f^m = Delta^{2k}
};

/*
  Periodic braids are exactly the roots of the central powers Delta^{2k}.  The
  exponent 2k is forced by exponent sums: e(Delta^2) = n(n-1), so k =
  m e(f) / (n(n-1)) must be an integer, and m ranges over 1..n(n-1).
*/
inline std::optional<PeriodicWitness> is_periodic(const BraidWord& f) {
  int n = f.strands;
  long long total = (long long)n * (n - 1);
  long long e = words::exponent_sum(f);
  for (int m = 1; m <= total; ++m) {
    if ((m * e) % total != 0) continue;
    long long k = m * e / total;
    BraidWord lhs = words::power(f, m);
    BraidWord rhs = words::power(BraidWord{n, garside::delta_word(n).letters}, (int)(2 * k));
    if (garside::equals(lhs, rhs)) return PeriodicWitness{m, k};
  }
  return std::nullopt;
}

enum class ClassKind { Periodic, Reducible, NoWitnessFound };

inline const char* class_kind_name(ClassKind k) {
  switch (k) {
    case ClassKind::Periodic: return "Periodic";
    case ClassKind::Reducible: return "Reducible";
    default: return "NoWitnessFound";
  }
}

struct ClassVerdict {
  ClassKind kind = ClassKind::NoWitnessFound;
  int m = 0;
  long long k = 0;      // Periodic: f^m = Delta^{2k}
  ParabolicRep witness;  // Reducible
  int orbit = 0;         // Reducible: least j <= kOrbitCap with f^j normalizing
  int radius = 0;
};

namespace detail {

inline std::string nf_key(const garside::GarsideNormalForm& nf) {
  std::string key;
  for (const auto& f : nf.negative) {
    key.push_back('~');
    for (int v : f.image) key += std::to_string(v) + ",";
  }
  for (const auto& f : nf.positive) {
    key.push_back('+');
    for (int v : f.image) key += std::to_string(v) + ",";
  }
  return key;
}

// Positive braids of canonical length <= radius, as words, in a canonical
// order: by canonical length, then by normal-form key.  An element of
// canonical length j first appears as a product of j simple factors, so
// breadth-first products with dedup enumerate exactly these.
inline std::vector<BraidWord> conjugator_candidates(int n, int radius) {
  std::vector<garside::SimpleFactor> simples;
  garside::Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  do {
    if (!garside::perm_is_identity(p)) simples.push_back({n, p});
  } while (std::next_permutation(p.begin(), p.end()));

  std::vector<BraidWord> out;
  std::set<std::string> seen;
  std::vector<std::pair<std::string, BraidWord>> level;
  BraidWord ident{n, {}};
  seen.insert(detail::nf_key(garside::group_normal_form(ident)));
  level.emplace_back("", ident);
  out.push_back(ident);
  for (int j = 1; j <= radius; ++j) {
    std::vector<std::pair<std::string, BraidWord>> next;
    for (const auto& [key, u] : level)
      for (const auto& s : simples) {
        garside::PositiveBraid sw = garside::simple_word(s);
        BraidWord v = words::concat(u, BraidWord{n, sw.letters});
        std::string vkey = nf_key(garside::group_normal_form(v));
        if (seen.insert(vkey).second) next.emplace_back(vkey, v);
      }
    std::sort(next.begin(), next.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [key, v] : next) out.push_back(v);
    level = std::move(next);
  }
  return out;
}

inline std::vector<std::vector<int>> support_candidates(int n) {
  std::vector<std::vector<int>> out;
  int gens = n - 1;
  for (int mask = 1; mask + 1 < (1 << gens); ++mask) {
    std::vector<int> X;
    for (int i = 1; i <= gens; ++i)
      if (mask & (1 << (i - 1))) X.push_back(i);
    out.push_back(std::move(X));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/*
  Algebraic classification: Periodic when a small power is central, otherwise
  a bounded search for a proper parabolic with finite f-orbit.  The orbit of a
  parabolic P is finite iff some power of f normalizes P, and every parabolic
  conjugated by an element of canonical length <= radius arises as
  u (B_n)_X u^{-1} with u a positive product of at most `radius` simple
  factors (central Delta^2 acts trivially and a single Delta just relabels the
  generators).  NoWitnessFound reports the exhausted radius and claims nothing
  more.
*/
inline ClassVerdict classify(const BraidWord& f, int radius) {
  if (radius < 0) throw Error("search radius must be nonnegative");
  ClassVerdict v;
  v.radius = radius;
  if (auto p = is_periodic(f)) {
    v.kind = ClassKind::Periodic;
    v.m = p->m;
    v.k = p->k;
    return v;
  }
  std::vector<BraidWord> gs = detail::conjugator_candidates(f.strands, radius);
  std::vector<std::vector<int>> xs = detail::support_candidates(f.strands);
  for (const auto& g : gs)
    for (const auto& X : xs) {
      ParabolicRep rep = make_parabolic(f.strands, g, X);
      for (int j = 1; j <= kOrbitCap; ++j) {
        if (normalizes(words::power(f, j), rep)) {
          v.kind = ClassKind::Reducible;
          v.witness = rep;
          v.orbit = j;
          return v;
        }
      }
    }
  v.kind = ClassKind::NoWitnessFound;
  return v;
}

}  // namespace braidforge::braidclass
