#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "coxeter.hpp"
#include "errors.hpp"

namespace braidforge::krammer {

using coxeter::CoxeterGraph;
using coxeter::GroupWord;
using coxeter::RootSystem;

inline constexpr int kDefaultMMax = 512;
inline constexpr int kDefaultDepth = 20;
inline constexpr double kClosureHeightCap = 24;
// Steps a scan must stay outside the window, with growing height, before the
// orbit counts as decisively escaped in that direction.
inline constexpr int kEscapeStreak = 8;

namespace detail {

template <class K>
bool vec_eq(const typename RootSystem<K>::Vec& a, const typename RootSystem<K>::Vec& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

template <class K>
typename RootSystem<K>::Vec negated(typename RootSystem<K>::Vec x) {
  for (auto& c : x) c = K(0) - c;
  return x;
}

// Coefficient sum as a double; roots have uniformly signed coefficients, so
// this is the usual height up to sign.
template <class K>
double height_of(const typename RootSystem<K>::Vec& x) {
  double h = 0;
  for (const auto& c : x) h += c.to_double();
  return std::fabs(h);
}

}  // namespace detail

// A root separates two group elements when their images of it lie on opposite
// sides of the hyperplane, i.e. have strictly opposite signs.
template <class K>
bool separates(const RootSystem<K>& rs, const typename RootSystem<K>::Vec& alpha,
               const GroupWord& u, const GroupWord& v) {
  return rs.vec_sign(rs.act(u, alpha)) * rs.vec_sign(rs.act(v, alpha)) < 0;
}

enum class OrbitKind { Periodic, Even, Odd, Unknown };

inline const char* orbit_kind_name(OrbitKind k) {
  switch (k) {
    case OrbitKind::Periodic: return "Periodic";
    case OrbitKind::Even: return "Even";
    case OrbitKind::Odd: return "Odd";
    default: return "Unknown";
  }
}

struct OrbitVerdict {
  OrbitKind kind = OrbitKind::Unknown;
  int period = 0;           // Periodic: least m >= 1 with w^m a = a
  int count = 0;            // Even/Odd: separation events inside the scan
  std::vector<int> events;  // m where w^m a and w^{m+1} a have opposite signs
  int scanned_back = 0, scanned_fwd = 0;
};

/*
  Classifies the orbit m |-> w^m a.  Separation events between consecutive
  powers force the orbit point into the finite window Phi_w u -Phi_w (a sign
  flip under one application of w means exactly that), so once the orbit has
  left the window for good in both directions the event count is complete and
  its parity decides Even vs Odd.  Leaving "for good" is tested by the
  kEscapeStreak heuristic: kEscapeStreak consecutive points outside the window
  whose height exceeds everything in it.  If either direction exhausts m_max
  first the verdict is Unknown rather than a guess.
*/
template <class K>
OrbitVerdict orbit_classify(const RootSystem<K>& rs, const GroupWord& w,
                            const typename RootSystem<K>::Vec& alpha, int m_max = kDefaultMMax) {
  using Vec = typename RootSystem<K>::Vec;
  if (m_max < 1) throw Error("orbit scan bound must be at least 1");
  if (rs.vec_sign(alpha) == 0) throw Error("the zero vector is not a root");

  auto inv = rs.inversion_set(w);
  std::set<Vec, typename RootSystem<K>::VecLess> window(inv.begin(), inv.end());
  double window_height = 0;
  for (const auto& r : inv) window_height = std::max(window_height, detail::height_of<K>(r));
  auto in_window = [&](const Vec& x) {
    if (rs.vec_sign(x) >= 0) return window.count(x) > 0;
    return window.count(detail::negated<K>(x)) > 0;
  };

  struct Scan {
    bool decisive = false;
    int reached = 0;
    int period = 0;  // nonzero on a revisit of alpha
    std::vector<int> signs;
  };
  auto scan = [&](const GroupWord& step) {
    Scan r;
    Vec cur = alpha;
    int streak = 0;
    try {
      for (int m = 1; m <= m_max; ++m) {
        cur = rs.act(step, cur);
        r.reached = m;
        if (detail::vec_eq<K>(cur, alpha)) {
          r.period = m;
          return r;
        }
        r.signs.push_back(rs.vec_sign(cur));
        bool escaped = !in_window(cur) && detail::height_of<K>(cur) > window_height;
        streak = escaped ? streak + 1 : 0;
        if (streak >= kEscapeStreak) {
          r.decisive = true;
          return r;
        }
      }
    } catch (const OverflowError&) {
      // Coefficients outgrew exact arithmetic: certainly not periodic, but
      // this direction stays formally indecisive.
    }
    return r;
  };

  Scan fwd = scan(w);
  if (fwd.period) return {OrbitKind::Periodic, fwd.period, 0, {}, 0, fwd.reached};
  Scan back = scan(coxeter::inverse_word(w));
  if (back.period) return {OrbitKind::Periodic, back.period, 0, {}, back.reached, fwd.reached};

  OrbitVerdict v;
  v.scanned_back = (int)back.signs.size();
  v.scanned_fwd = (int)fwd.signs.size();
  // Sign sequence over m in [-scanned_back, scanned_fwd]; events at every
  // consecutive flip.
  std::vector<int> signs;
  for (auto it = back.signs.rbegin(); it != back.signs.rend(); ++it) signs.push_back(*it);
  signs.push_back(rs.vec_sign(alpha));
  for (int s : fwd.signs) signs.push_back(s);
  for (size_t i = 0; i + 1 < signs.size(); ++i)
    if (signs[i] != signs[i + 1]) v.events.push_back((int)i - v.scanned_back);
  v.count = (int)v.events.size();
  if (fwd.decisive && back.decisive)
    v.kind = v.count % 2 == 0 ? OrbitKind::Even : OrbitKind::Odd;
  else
    v.kind = OrbitKind::Unknown;
  return v;
}

template <class K>
struct OddRootReport {
  std::vector<typename RootSystem<K>::Vec> roots;  // decisively Odd
  int unknown = 0;                                 // indecisive candidates
};

// Every positive root of BFS depth <= depth whose orbit verdict is Odd.
template <class K>
OddRootReport<K> odd_roots(const RootSystem<K>& rs, const GroupWord& w, int depth = kDefaultDepth,
                           int m_max = kDefaultMMax) {
  OddRootReport<K> out;
  for (const auto& cand : rs.positive_roots(depth)) {
    OrbitVerdict v = orbit_classify(rs, w, cand.coeffs, m_max);
    if (v.kind == OrbitKind::Odd) out.roots.push_back(cand.coeffs);
    if (v.kind == OrbitKind::Unknown) ++out.unknown;
  }
  return out;
}

// Multiplies length-reducing generators onto the right until the element dies;
// the peeled letters, reversed, are a reduced word for it.
template <class K>
GroupWord reduced_word(const RootSystem<K>& rs, GroupWord w) {
  GroupWord peeled;
  for (;;) {
    int descent = -1;
    for (int s = 0; s < rs.rank() && descent < 0; ++s)
      if (rs.vec_sign(rs.act(w, rs.simple_root(s))) < 0) descent = s;
    if (descent < 0) break;
    w.push_back(descent);
    peeled.push_back(descent);
  }
  return GroupWord(peeled.rbegin(), peeled.rend());
}

// Least k <= m_max with w^k fixing every simple root (hence w^k = 1, the
// representation being faithful); nullopt when none is found or exact
// arithmetic overflows first.
template <class K>
std::optional<int> finite_order(const RootSystem<K>& rs, const GroupWord& w, int m_max) {
  using Vec = typename RootSystem<K>::Vec;
  std::vector<Vec> img;
  for (int s = 0; s < rs.rank(); ++s) img.push_back(rs.simple_root(s));
  try {
    for (int k = 1; k <= m_max; ++k) {
      bool ident = true;
      for (int s = 0; s < rs.rank(); ++s) {
        img[s] = rs.act(w, img[s]);
        if (!detail::vec_eq<K>(img[s], rs.simple_root(s))) ident = false;
      }
      if (ident) return k;
    }
  } catch (const OverflowError&) {
  }
  return std::nullopt;
}

// Closes a set of unit roots under reflecting each in each, keeping positive
// representatives and discarding anything taller than the cap.
template <class K>
std::vector<typename RootSystem<K>::Vec> reflection_closure(
    const RootSystem<K>& rs, const std::vector<typename RootSystem<K>::Vec>& seeds,
    double height_cap = kClosureHeightCap) {
  using Vec = typename RootSystem<K>::Vec;
  std::set<Vec, typename RootSystem<K>::VecLess> cl;
  for (const auto& s : seeds) {
    Vec x = s;
    if (rs.vec_sign(x) < 0) x = detail::negated<K>(x);
    if (detail::height_of<K>(x) <= height_cap) cl.insert(x);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Vec> cur(cl.begin(), cl.end());
    for (const auto& mirror : cur)
      for (const auto& x : cur) {
        Vec y = rs.reflect_in_root(mirror, x);
        if (rs.vec_sign(y) < 0) y = detail::negated<K>(y);
        if (detail::height_of<K>(y) > height_cap) continue;
        if (cl.insert(y).second) grew = true;
      }
  }
  return std::vector<Vec>(cl.begin(), cl.end());
}

enum class EssentialKind { CertifiedEssential, NotEssential, Inconclusive };

inline const char* essential_kind_name(EssentialKind k) {
  switch (k) {
    case EssentialKind::CertifiedEssential: return "CertifiedEssential";
    case EssentialKind::NotEssential: return "NotEssential";
    default: return "Inconclusive";
  }
}

template <class K>
struct EssentialVerdict {
  using Vec = typename RootSystem<K>::Vec;
  EssentialKind kind = EssentialKind::Inconclusive;
  std::string reason;        // NotEssential: "proper-support" or "finite-order"
  int order = 0;             // finite-order witness: w^order = 1
  GroupWord reduced;
  std::vector<int> support;  // vertices of the reduced word, sorted
  std::vector<Vec> odd;      // decisively odd roots found within bounds
  int unknown = 0;
  int closure_size = 0;
  int depth = 0, m_max = 0;
};

/*
  Semi-decision of essentiality (not lying in any proper parabolic), for a
  connected indefinite graph.

  Sound negatives: a reduced word whose support misses a vertex places the
  element in a standard proper parabolic; a detected finite order places it,
  the group being infinite, in a conjugate of a finite (hence proper)
  parabolic.

  Positive certificate: reflections in odd roots are motions the element
  genuinely performs infinitely often; if the reflections in the closure of
  the odd roots under each other reach every simple reflection, they generate
  the whole group and the element is essential.  Reflecting mirrors in each
  other stays inside the reflection subgroup they generate (r_{r_b(c)} =
  r_b r_c r_b), so the closure never overshoots.  When the bounded search
  leaves some simple root unreached the verdict is Inconclusive, never a
  denial.
*/
template <class K>
EssentialVerdict<K> essential_certificate(const RootSystem<K>& rs, const GroupWord& w,
                                          int depth = kDefaultDepth, int m_max = kDefaultMMax) {
  const CoxeterGraph& g = rs.graph();
  if (coxeter::components(g).size() != 1) throw Error("essential certification needs a connected graph");
  if (coxeter::classify_type<K>(g) != coxeter::GroupType::Indefinite)
    throw Error("essential certification applies to indefinite type only");

  EssentialVerdict<K> out;
  out.depth = depth;
  out.m_max = m_max;
  out.reduced = reduced_word(rs, w);
  {
    std::set<int> sup(out.reduced.begin(), out.reduced.end());
    out.support.assign(sup.begin(), sup.end());
  }
  if ((int)out.support.size() < g.rank()) {
    out.kind = EssentialKind::NotEssential;
    out.reason = "proper-support";
    return out;
  }
  if (auto k = finite_order(rs, out.reduced, m_max)) {
    out.kind = EssentialKind::NotEssential;
    out.reason = "finite-order";
    out.order = *k;
    return out;
  }

  OddRootReport<K> odd = odd_roots(rs, out.reduced, depth, m_max);
  out.odd = odd.roots;
  out.unknown = odd.unknown;
  auto closure = reflection_closure(rs, odd.roots);
  out.closure_size = (int)closure.size();
  std::set<typename RootSystem<K>::Vec, typename RootSystem<K>::VecLess> cl(closure.begin(),
                                                                            closure.end());
  bool all = true;
  for (int s = 0; s < g.rank(); ++s)
    if (!cl.count(rs.simple_root(s))) all = false;
  out.kind = all ? EssentialKind::CertifiedEssential : EssentialKind::Inconclusive;
  return out;
}

}  // namespace braidforge::krammer
