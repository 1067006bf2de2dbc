#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "coxeter.hpp"
#include "errors.hpp"
#include "scalars.hpp"

namespace braidforge::surface {

using coxeter::CoxeterGraph;

inline void check_small_type(const CoxeterGraph& g) {
  for (int s = 0; s < g.rank(); ++s)
    for (int t = s + 1; t < g.rank(); ++t)
      if (g.bond[s][t] != 2 && g.bond[s][t] != 3)
        throw Error("surface construction needs a small-type graph (bonds 2 or 3)");
}

// A total order on the vertices: order[i] = vertex at position i.  The same
// order drives relative positions in stars, the gluing, and intersection
// signs.
inline std::vector<int> default_order(const CoxeterGraph& g) {
  std::vector<int> o(g.rank());
  std::iota(o.begin(), o.end(), 0);
  return o;
}

inline std::vector<int> order_positions(const CoxeterGraph& g, const std::vector<int>& order) {
  if ((int)order.size() != g.rank()) throw Error("vertex order must list every vertex once");
  std::vector<int> pos(g.rank(), -1);
  for (int i = 0; i < (int)order.size(); ++i) {
    int v = order[i];
    if (v < 0 || v >= g.rank() || pos[v] >= 0)
      throw Error("vertex order must list every vertex once");
    pos[v] = i;
  }
  return pos;
}

struct Star {
  std::vector<int> members;  // St_s sorted by the order
  int k = 1;                 // |St_s|
  std::map<int, int> pos;    // pos[t] = relative position of t in the star
};

// St_s = {s} with its bonded (m = 3) neighbors, sorted by the order; the
// relative position of t is its index minus the index of s.
inline Star star_positions(const CoxeterGraph& g, const std::vector<int>& order, int s) {
  check_small_type(g);
  std::vector<int> posn = order_positions(g, order);
  Star st;
  for (int t = 0; t < g.rank(); ++t)
    if (t == s || g.bond[s][t] == 3) st.members.push_back(t);
  std::sort(st.members.begin(), st.members.end(),
            [&](int a, int b) { return posn[a] < posn[b]; });
  st.k = (int)st.members.size();
  int j = 0;
  while (st.members[j] != s) ++j;
  for (int i = 0; i < st.k; ++i) st.pos[st.members[i]] = i - j;
  return st;
}

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

// Union-find tracking a relative orientation (+1/-1) to the root; no path
// compression, the complexes here are tiny.
struct SignedUnionFind {
  std::vector<int> parent;
  std::vector<int> rel;  // parity to parent: 0 same orientation, 1 opposite
  explicit SignedUnionFind(int n) : parent(n), rel(n, 0) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::pair<int, int> find(int x) const {
    int par = 0;
    while (parent[x] != x) {
      par ^= rel[x];
      x = parent[x];
    }
    return {x, par};
  }
  void unite(int a, int b, int parity) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) {
      if ((pa ^ pb) != parity) throw Error("inconsistent edge identification");
      return;
    }
    parent[rb] = ra;
    rel[rb] = pa ^ pb ^ parity;
  }
};

}  // namespace detail

struct SurfaceModel {
  CoxeterGraph graph;
  std::vector<int> order;
  std::vector<int> k;  // k_s per vertex

  long long vertices = 0, edges = 0, faces = 0;
  long long chi = 0;
  int bonds = 0;       // number of m = 3 bonds (= glued square pairs)
  int boundary = 0;    // boundary components
  long long genus = 0; // summed over components
  int components = 1;
  long long h1_rank = 0;       // rank of H_1 of the whole surface
  int curve_span_rank = 0;     // rank of span{[a_s]} inside H_1
};

/*
  Builds the quotient square complex.  Annulus An_s is a ring of 2 k_s unit
  squares; a bond m_st = 3 (s before t in the order) glues square 2 pos(t:s)
  of An_s onto square 2 pos(s:t) of An_t by (2p+x, y) -> (2q+1-y, x).  That
  map carries the four sides of the s-square onto the four sides of the
  t-square:

      H(s,a,0) -> +V(t,b+1)      V(s,a)   -> -H(t,b,0)
      H(s,a,1) -> +V(t,b)        V(s,a+1) -> -H(t,b,1)

  (a = 2p, b = 2q, x-coordinates cyclic).  Vertices merge accordingly, the two
  squares become one face, and every invariant is read off the quotient:
  boundary edges are the sides used by exactly one face, boundary components
  are cycles of those sides, and genus comes from 2 - 2g - b = chi per
  component.
*/
inline SurfaceModel build_surface(const CoxeterGraph& g, const std::vector<int>& order) {
  check_small_type(g);
  std::vector<int> posn = order_positions(g, order);
  int n = g.rank();

  SurfaceModel m;
  m.graph = g;
  m.order = order;

  std::vector<Star> stars;
  for (int s = 0; s < n; ++s) stars.push_back(star_positions(g, order, s));
  for (int s = 0; s < n; ++s) m.k.push_back(stars[s].k);

  // Global ids.  Per annulus s with ring length L = 2 k_s:
  //   vertex (x, y): vb[s] + 2 x + y            (x mod L, y in {0,1})
  //   edge H(x, y):  eb[s] + 2 x + y            (from (x,y) to (x+1,y))
  //   edge V(x):     eb[s] + 2 L + x            (from (x,0) to (x,1))
  //   face (x):      fb[s] + x
  std::vector<int> vb(n + 1, 0), eb(n + 1, 0), fb(n + 1, 0);
  for (int s = 0; s < n; ++s) {
    int L = 2 * stars[s].k;
    vb[s + 1] = vb[s] + 2 * L;
    eb[s + 1] = eb[s] + 3 * L;
    fb[s + 1] = fb[s] + L;
  }
  auto ring = [&](int s) { return 2 * stars[s].k; };
  auto vtx = [&](int s, int x, int y) {
    int L = ring(s);
    return vb[s] + 2 * (((x % L) + L) % L) + y;
  };
  auto eh = [&](int s, int x, int y) {
    int L = ring(s);
    return eb[s] + 2 * (((x % L) + L) % L) + y;
  };
  auto ev = [&](int s, int x) {
    int L = ring(s);
    return eb[s] + 2 * L + (((x % L) + L) % L);
  };

  detail::UnionFind vu(vb[n]);
  detail::SignedUnionFind eu(eb[n]);
  detail::UnionFind fu(fb[n]);

  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      if (g.bond[s][t] != 3 || posn[s] >= posn[t]) continue;
      ++m.bonds;
      int a = 2 * stars[s].pos.at(t);
      int b = 2 * stars[t].pos.at(s);
      vu.unite(vtx(s, a, 0), vtx(t, b + 1, 0));
      vu.unite(vtx(s, a + 1, 0), vtx(t, b + 1, 1));
      vu.unite(vtx(s, a, 1), vtx(t, b, 0));
      vu.unite(vtx(s, a + 1, 1), vtx(t, b, 1));
      eu.unite(eh(s, a, 0), ev(t, b + 1), 0);
      eu.unite(eh(s, a, 1), ev(t, b), 0);
      eu.unite(ev(s, a), eh(t, b, 0), 1);
      eu.unite(ev(s, a + 1), eh(t, b, 1), 1);
      int La = ring(s), Lb = ring(t);
      fu.unite(fb[s] + (((a % La) + La) % La), fb[t] + (((b % Lb) + Lb) % Lb));
    }

  // Class counting.
  std::map<int, int> vclass, eclass, fclass;
  for (int i = 0; i < vb[n]; ++i) vclass.emplace(vu.find(i), (int)vclass.size());
  for (int i = 0; i < eb[n]; ++i) eclass.emplace(eu.find(i).first, (int)eclass.size());
  for (int i = 0; i < fb[n]; ++i) fclass.emplace(fu.find(i), (int)fclass.size());
  m.vertices = (long long)vclass.size();
  m.edges = (long long)eclass.size();
  m.faces = (long long)fclass.size();
  if (m.faces != fb[n] - m.bonds) throw Error("face count disagrees with gluing count");
  m.chi = m.vertices - m.edges + m.faces;
  if (m.chi != -(long long)m.bonds) throw Error("Euler characteristic cross-check failed");

  // One representative square per face class drives incidence and boundary.
  std::vector<std::array<int, 4>> face_sides;  // representative's four side edges
  {
    std::set<int> done;
    for (int s = 0; s < n; ++s)
      for (int x = 0; x < ring(s); ++x) {
        int root = fu.find(fb[s] + x);
        if (!done.insert(root).second) continue;
        face_sides.push_back({eh(s, x, 0), ev(s, x + 1), eh(s, x, 1), ev(s, x)});
      }
  }
  std::vector<int> incidence(eclass.size(), 0);
  for (const auto& sides : face_sides)
    for (int e : sides) ++incidence[eclass.at(eu.find(e).first)];
  for (int c : incidence)
    if (c != 1 && c != 2) throw Error("edge bordered by more than two faces");

  // Endpoints of an edge class, from any member (classes share endpoints as
  // unordered pairs).
  std::vector<std::pair<int, int>> ends(eclass.size(), {-1, -1});
  for (int s = 0; s < n; ++s) {
    int L = ring(s);
    for (int x = 0; x < L; ++x) {
      for (int y = 0; y < 2; ++y)
        ends[eclass.at(eu.find(eh(s, x, y)).first)] = {
            vclass.at(vu.find(vtx(s, x, y))), vclass.at(vu.find(vtx(s, x + 1, y)))};
      ends[eclass.at(eu.find(ev(s, x)).first)] = {vclass.at(vu.find(vtx(s, x, 0))),
                                                  vclass.at(vu.find(vtx(s, x, 1)))};
    }
  }

  // Boundary subgraph: edges used by exactly one face; every vertex on it
  // must have exactly two boundary edge-ends, and its components are the
  // boundary circles.
  {
    std::vector<int> deg(vclass.size(), 0);
    detail::UnionFind bu((int)vclass.size());
    std::set<int> on_boundary;
    for (size_t e = 0; e < incidence.size(); ++e) {
      if (incidence[e] != 1) continue;
      auto [u, v] = ends[e];
      ++deg[u];
      ++deg[v];
      bu.unite(u, v);
      on_boundary.insert(u);
      on_boundary.insert(v);
    }
    for (int u : on_boundary)
      if (deg[u] != 2) throw Error("boundary is not a disjoint union of circles");
    std::set<int> comps;
    for (int u : on_boundary) comps.insert(bu.find(u));
    m.boundary = (int)comps.size();
  }

  // Connected components of the surface and genus per component.
  {
    detail::UnionFind cu((int)vclass.size());
    for (const auto& [u, v] : ends) cu.unite(u, v);
    std::set<int> comps;
    for (size_t i = 0; i < vclass.size(); ++i) comps.insert(cu.find((int)i));
    m.components = (int)comps.size();

    // Per component: chi, boundary circles, then 2 - 2g - b = chi.
    std::map<int, long long> cchi;
    std::map<int, int> cb;
    for (size_t i = 0; i < vclass.size(); ++i) cchi[cu.find((int)i)] += 1;
    for (size_t e = 0; e < ends.size(); ++e) cchi[cu.find(ends[e].first)] -= 1;
    for (const auto& sides : face_sides) {
      int v0 = ends[eclass.at(eu.find(sides[0]).first)].first;
      cchi[cu.find(v0)] += 1;
    }
    {
      detail::UnionFind bu((int)vclass.size());
      for (size_t e = 0; e < incidence.size(); ++e) {
        if (incidence[e] != 1) continue;
        bu.unite(ends[e].first, ends[e].second);
      }
      std::map<int, std::set<int>> circles;  // component -> boundary circle roots
      for (size_t e = 0; e < incidence.size(); ++e)
        if (incidence[e] == 1)
          circles[cu.find(ends[e].first)].insert(bu.find(ends[e].first));
      for (const auto& [comp, set] : circles) cb[comp] = (int)set.size();
    }
    long long gsum = 0;
    for (const auto& [comp, chi] : cchi) {
      long long b = cb.count(comp) ? cb[comp] : 0;
      long long twog = 2 - b - chi;
      if (twog < 0 || twog % 2 != 0) throw Error("component genus is not a nonnegative integer");
      gsum += twog / 2;
    }
    m.genus = gsum;
    m.h1_rank = (long long)m.components - m.chi;
  }

  // Rank of the span of the curve classes [a_s] inside H_1, over the
  // rationals: rank(boundaries | curves) - rank(boundaries).
  {
    using exact::Rational;
    size_t E = eclass.size();
    auto col_of_face = [&](const std::array<int, 4>& sides) {
      // Counterclockwise: bottom + right - top - left, signs composed with
      // each side's orientation relative to its class root.
      std::vector<Rational> col(E, Rational(0));
      int orient[4] = {1, 1, -1, -1};
      for (int i = 0; i < 4; ++i) {
        auto [root, par] = eu.find(sides[i]);
        col[eclass.at(root)] += Rational(orient[i] * (par ? -1 : 1));
      }
      return col;
    };
    std::vector<std::vector<Rational>> cols;
    for (const auto& sides : face_sides) cols.push_back(col_of_face(sides));
    size_t nfaces = cols.size();
    for (int s = 0; s < n; ++s) {
      std::vector<Rational> col(E, Rational(0));
      for (int x = 0; x < ring(s); ++x) {
        auto [root, par] = eu.find(eh(s, x, 0));
        col[eclass.at(root)] += Rational(par ? -1 : 1);
      }
      cols.push_back(col);
    }
    auto rank_of = [&](size_t ncols) {
      std::vector<std::vector<Rational>> M;
      for (size_t c = 0; c < ncols; ++c) M.push_back(cols[c]);
      int r = 0;
      for (size_t e = 0; e < E; ++e) {
        size_t piv = M.size();
        for (size_t c = r; c < M.size(); ++c)
          if (M[c][e].sign() != 0) {
            piv = c;
            break;
          }
        if (piv == M.size()) continue;
        std::swap(M[r], M[piv]);
        for (size_t c = 0; c < M.size(); ++c) {
          if ((int)c == r || M[c][e].sign() == 0) continue;
          Rational f = M[c][e] / M[r][e];
          for (size_t i = e; i < E; ++i) M[c][i] -= f * M[r][i];
        }
        ++r;
        if (r == (int)M.size()) break;
      }
      return r;
    };
    int rank_b = rank_of(nfaces);
    int rank_bc = rank_of(cols.size());
    m.curve_span_rank = rank_bc - rank_b;
  }

  return m;
}

// Antisymmetric intersection matrix of the curves a_s: a single transverse
// crossing for each m = 3 bond, signed by the order.
inline std::vector<std::vector<long long>> intersection_matrix(const CoxeterGraph& g,
                                                               const std::vector<int>& order) {
  check_small_type(g);
  std::vector<int> posn = order_positions(g, order);
  int n = g.rank();
  std::vector<std::vector<long long>> J(n, std::vector<long long>(n, 0));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (g.bond[s][t] == 3) J[s][t] = posn[s] < posn[t] ? 1 : -1;
  return J;
}

using Mat = std::vector<std::vector<long long>>;

inline Mat mat_identity(int n) {
  Mat I(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

inline Mat mat_mul(const Mat& A, const Mat& B) {
  int n = (int)A.size();
  Mat C(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (A[i][k] == 0) continue;
      for (int j = 0; j < n; ++j) C[i][j] += A[i][k] * B[k][j];
    }
  return C;
}

// Transvection x -> x + J(x, e_s) e_s; with J(x, e_s) = sum_b x_b J_{b s},
// its matrix is the identity plus the row update M[s][b] += J[b][s].
inline Mat transvection(const CoxeterGraph& g, const std::vector<int>& order, int s, int dir = 1) {
  Mat J = intersection_matrix(g, order);
  int n = g.rank();
  Mat M = mat_identity(n);
  for (int b = 0; b < n; ++b) M[s][b] += dir * J[b][s];
  return M;
}

// Matrix of a word in the Artin generators; letters are signed 1-based
// positions in the chosen order, e.g. -2 for the inverse of the generator at
// the second position.
inline Mat homological_rep(const CoxeterGraph& g, const std::vector<int>& order,
                           const std::vector<int>& word) {
  check_small_type(g);
  int n = g.rank();
  Mat M = mat_identity(n);
  for (int letter : word) {
    int idx = letter > 0 ? letter : -letter;
    if (idx < 1 || idx > n) throw Error("representation letter out of range");
    int s = order[idx - 1];
    M = mat_mul(M, transvection(g, order, s, letter > 0 ? 1 : -1));
  }
  return M;
}

struct RelationReport {
  bool ok = true;
  std::vector<std::string> failures;
};

// Checks the defining Artin relations on the transvection matrices: braid
// relation across every m = 3 bond, commutation across every m = 2 pair.
inline RelationReport verify_artin_relations(const CoxeterGraph& g, const std::vector<int>& order) {
  check_small_type(g);
  RelationReport rep;
  int n = g.rank();
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t) {
      Mat A = transvection(g, order, s);
      Mat B = transvection(g, order, t);
      bool good;
      if (g.bond[s][t] == 3)
        good = mat_mul(mat_mul(A, B), A) == mat_mul(mat_mul(B, A), B);
      else
        good = mat_mul(A, B) == mat_mul(B, A);
      if (!good) {
        rep.ok = false;
        rep.failures.push_back(g.labels[s] + "-" + g.labels[t]);
      }
    }
  return rep;
}

}  // namespace braidforge::surface
