#pragma once

#include <array>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "scalars.hpp"

namespace braidforge::coxeter {

constexpr int kInfiniteBond = -1;

// Labeled graph presentation: bond[s][t] is the order of st, with 1 on the
// diagonal, 2 when s and t commute (no edge drawn), and kInfiniteBond for an
// infinite bond.
struct CoxeterGraph {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> bond;

  int rank() const { return (int)labels.size(); }

  int vertex(const std::string& label) const {
    for (int i = 0; i < rank(); ++i)
      if (labels[i] == label) return i;
    throw Error("unknown vertex label '" + label + "'");
  }
};

inline CoxeterGraph make_graph(std::vector<std::string> labels,
                               const std::vector<std::tuple<std::string, std::string, int>>& bonds) {
  CoxeterGraph g;
  g.labels = std::move(labels);
  int n = g.rank();
  if (n == 0) throw Error("empty vertex set");
  std::set<std::string> seen(g.labels.begin(), g.labels.end());
  if ((int)seen.size() != n) throw Error("duplicate vertex label");
  g.bond.assign(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) g.bond[i][i] = 1;
  for (const auto& [a, b, m] : bonds) {
    int s = g.vertex(a), t = g.vertex(b);
    if (s == t) throw Error("bond from vertex '" + a + "' to itself");
    if (m != kInfiniteBond && m < 2) throw Error("bond order must be at least 2 or infinite");
    if (g.bond[s][t] != 2) throw Error("duplicate bond between '" + a + "' and '" + b + "'");
    g.bond[s][t] = g.bond[t][s] = m;
  }
  return g;
}

/*
  Graph file format:

    # comment
    vertices: a b c
    bond a b 3
    bond b c inf

  Unlisted pairs commute (order 2).
*/
inline CoxeterGraph parse_graph(std::istream& in) {
  std::vector<std::string> labels;
  std::vector<std::tuple<std::string, std::string, int>> bonds;
  std::string line;
  bool have_vertices = false;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (!have_vertices) {
      if (head != "vertices:") throw Error("graph file must start with a 'vertices:' line");
      std::string lab;
      while (ls >> lab) labels.push_back(lab);
      if (labels.empty()) throw Error("empty vertex list");
      have_vertices = true;
      continue;
    }
    if (head != "bond") throw Error("unrecognized graph line '" + head + "'");
    std::string a, b, ms;
    if (!(ls >> a >> b >> ms)) throw Error("bond line needs two labels and an order");
    int m;
    if (ms == "inf")
      m = kInfiniteBond;
    else {
      try {
        m = std::stoi(ms);
      } catch (...) {
        throw Error("malformed bond order '" + ms + "'");
      }
    }
    bonds.emplace_back(a, b, m);
  }
  if (!have_vertices) throw Error("graph file has no 'vertices:' line");
  return make_graph(std::move(labels), bonds);
}

inline CoxeterGraph parse_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open graph file '" + path + "'");
  return parse_graph(in);
}

enum class ScalarMode { Rational, Quadratic, Float };

inline const char* mode_name(ScalarMode m) {
  switch (m) {
    case ScalarMode::Rational: return "rational";
    case ScalarMode::Quadratic: return "quadratic";
    default: return "float";
  }
}

// Smallest exact mode able to represent every bond; float if a bond of order
// 7 or more appears.
inline ScalarMode select_scalar_mode(const CoxeterGraph& g) {
  ScalarMode mode = ScalarMode::Rational;
  for (int s = 0; s < g.rank(); ++s)
    for (int t = s + 1; t < g.rank(); ++t) {
      int m = g.bond[s][t];
      if (m >= 4 && m <= 6) mode = std::max(mode, ScalarMode::Quadratic);
      if (m >= 7) mode = std::max(mode, ScalarMode::Float);
    }
  return mode;
}

// Words in the standard generators, stored as 0-based vertex indices; they
// act right to left.
using GroupWord = std::vector<int>;

inline GroupWord parse_group_word(const CoxeterGraph& g, const std::string& text) {
  GroupWord w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) w.push_back(g.vertex(tok));
  return w;
}

inline GroupWord inverse_word(const GroupWord& w) { return GroupWord(w.rbegin(), w.rend()); }

// Alternating word a b a b ... of length m, both orders of the generators
// giving the defining relation omega(a,b:m) = omega(b,a:m).
inline GroupWord relation_word(int a, int b, int m) {
  if (m == kInfiniteBond) throw Error("no relation word for an infinite bond");
  if (m < 2) throw Error("relation word needs order at least 2");
  GroupWord w;
  for (int i = 0; i < m; ++i) w.push_back(i % 2 == 0 ? a : b);
  return w;
}

inline GroupWord relation_word(const CoxeterGraph& g, int a, int b) {
  return relation_word(a, b, g.bond[a][b]);
}

inline std::vector<std::vector<int>> components(const CoxeterGraph& g) {
  int n = g.rank();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s}, verts;
    comp[s] = (int)out.size();
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      verts.push_back(u);
      for (int v = 0; v < n; ++v)
        if (comp[v] < 0 && u != v && (g.bond[u][v] >= 3 || g.bond[u][v] == kInfiniteBond)) {
          comp[v] = comp[s];
          stack.push_back(v);
        }
    }
    std::sort(verts.begin(), verts.end());
    out.push_back(std::move(verts));
  }
  return out;
}

enum class GroupType { Finite, Affine, Indefinite };

inline const char* type_name(GroupType t) {
  switch (t) {
    case GroupType::Finite: return "Finite";
    case GroupType::Affine: return "Affine";
    default: return "Indefinite";
  }
}

// ---------------------------------------------------------------------------
// Recognition against the classified families of connected diagrams.  Both
// classifications (finite and affine) are complete, so anything that matches
// neither list is indefinite.  Used as an independent cross-check of the
// bilinear-form signature.

struct CatalogClass {
  GroupType type;
  std::string family;
};

namespace detail {

inline CatalogClass catalog_connected(const CoxeterGraph& g, const std::vector<int>& comp) {
  int V = (int)comp.size();
  auto bond = [&](int i, int j) { return g.bond[comp[i]][comp[j]]; };

  if (V == 1) return {GroupType::Finite, "A1"};

  int inf_bonds = 0, edges = 0;
  std::vector<int> deg(V, 0);
  for (int i = 0; i < V; ++i)
    for (int j = i + 1; j < V; ++j) {
      int m = bond(i, j);
      if (m == kInfiniteBond) ++inf_bonds;
      if (m >= 3 || m == kInfiniteBond) {
        ++edges;
        ++deg[i];
        ++deg[j];
      }
    }

  if (inf_bonds) {
    if (V == 2) return {GroupType::Affine, "A~1"};
    return {GroupType::Indefinite, "-"};
  }
  if (V == 2) {
    int m = bond(0, 1);
    if (m == 3) return {GroupType::Finite, "A2"};
    if (m == 4) return {GroupType::Finite, "B2"};
    if (m == 6) return {GroupType::Finite, "G2"};
    return {GroupType::Finite, "I2(" + std::to_string(m) + ")"};
  }

  if (edges > V - 1) {
    bool pure_cycle = edges == V;
    for (int i = 0; i < V && pure_cycle; ++i) {
      if (deg[i] != 2) pure_cycle = false;
      for (int j = i + 1; j < V; ++j)
        if (bond(i, j) != 2 && bond(i, j) != 3) pure_cycle = false;
    }
    if (pure_cycle) return {GroupType::Affine, "A~" + std::to_string(V - 1)};
    return {GroupType::Indefinite, "-"};
  }

  // From here on the component is a tree.
  int maxdeg = 0;
  for (int d : deg) maxdeg = std::max(maxdeg, d);

  auto all_bonds_simple = [&]() {
    for (int i = 0; i < V; ++i)
      for (int j = i + 1; j < V; ++j)
        if (bond(i, j) > 3) return false;
    return true;
  };

  if (maxdeg >= 5) return {GroupType::Indefinite, "-"};
  if (maxdeg == 4) {
    if (V == 5 && edges == 4 && all_bonds_simple()) return {GroupType::Affine, "D~4"};
    return {GroupType::Indefinite, "-"};
  }

  if (maxdeg <= 2) {
    // Path: collect the label sequence from one endpoint.
    int start = 0;
    for (int i = 0; i < V; ++i)
      if (deg[i] == 1) start = i;
    std::vector<int> seq;
    {
      int prev = -1, cur = start;
      for (int step = 0; step + 1 < V; ++step) {
        int nxt = -1;
        for (int j = 0; j < V; ++j)
          if (j != cur && j != prev && bond(cur, j) >= 3) nxt = j;
        seq.push_back(bond(cur, nxt));
        prev = cur;
        cur = nxt;
      }
    }
    auto matches = [&](std::vector<int> pat) {
      if (pat == seq) return true;
      std::reverse(pat.begin(), pat.end());
      return pat == seq;
    };
    int n_heavy = 0;
    for (int m : seq)
      if (m > 3) ++n_heavy;
    if (n_heavy == 0) return {GroupType::Finite, "A" + std::to_string(V)};
    if (n_heavy == 1) {
      int heavy = 0;
      for (int m : seq) heavy = std::max(heavy, m);
      std::vector<int> end_heavy(seq.size(), 3);
      end_heavy.front() = heavy;
      if (heavy == 4 && matches(end_heavy)) return {GroupType::Finite, "B" + std::to_string(V)};
      if (heavy == 4 && V == 4 && matches({3, 4, 3})) return {GroupType::Finite, "F4"};
      if (heavy == 4 && V == 5 && matches({3, 3, 4, 3})) return {GroupType::Affine, "F~4"};
      if (heavy == 5 && V == 3 && matches({5, 3})) return {GroupType::Finite, "H3"};
      if (heavy == 5 && V == 4 && matches({5, 3, 3})) return {GroupType::Finite, "H4"};
      if (heavy == 6 && matches(std::vector<int>{3, 6}) && V == 3)
        return {GroupType::Affine, "G~2"};
      return {GroupType::Indefinite, "-"};
    }
    if (n_heavy == 2) {
      std::vector<int> cc(seq.size(), 3);
      cc.front() = cc.back() = 4;
      if (seq == cc) return {GroupType::Affine, "C~" + std::to_string(V - 1)};
    }
    return {GroupType::Indefinite, "-"};
  }

  // maxdeg == 3
  std::vector<int> branches;
  for (int i = 0; i < V; ++i)
    if (deg[i] == 3) branches.push_back(i);

  if ((int)branches.size() >= 3) return {GroupType::Indefinite, "-"};
  if ((int)branches.size() == 2) {
    if (!all_bonds_simple()) return {GroupType::Indefinite, "-"};
    for (int b : branches) {
      int leaves = 0;
      for (int j = 0; j < V; ++j)
        if (j != b && bond(b, j) >= 3 && deg[j] == 1) ++leaves;
      if (leaves != 2) return {GroupType::Indefinite, "-"};
    }
    return {GroupType::Affine, "D~" + std::to_string(V - 1)};
  }

  // Single degree-3 vertex: walk the three arms.
  int b0 = branches[0];
  std::vector<std::pair<int, std::vector<int>>> arms;  // (length, labels outward)
  for (int j = 0; j < V; ++j) {
    if (j == b0 || bond(b0, j) < 3) continue;
    std::vector<int> labels{bond(b0, j)};
    int prev = b0, cur = j;
    for (;;) {
      int nxt = -1;
      for (int t = 0; t < V; ++t)
        if (t != prev && t != cur && bond(cur, t) >= 3) nxt = t;
      if (nxt < 0) break;
      labels.push_back(bond(cur, nxt));
      prev = cur;
      cur = nxt;
    }
    arms.emplace_back((int)labels.size(), labels);
  }
  std::sort(arms.begin(), arms.end());
  std::array<int, 3> L{arms[0].first, arms[1].first, arms[2].first};

  int n_heavy = 0, heavy = 0;
  bool heavy_terminal_long_arm = false;
  for (const auto& [len, labels] : arms)
    for (size_t i = 0; i < labels.size(); ++i)
      if (labels[i] > 3) {
        ++n_heavy;
        heavy = labels[i];
        heavy_terminal_long_arm = len == L[2] && i + 1 == labels.size();
      }

  if (n_heavy == 0) {
    if (L[0] == 1 && L[1] == 1) return {GroupType::Finite, "D" + std::to_string(V)};
    if (L == std::array<int, 3>{1, 2, 2}) return {GroupType::Finite, "E6"};
    if (L == std::array<int, 3>{1, 2, 3}) return {GroupType::Finite, "E7"};
    if (L == std::array<int, 3>{1, 2, 4}) return {GroupType::Finite, "E8"};
    if (L == std::array<int, 3>{2, 2, 2}) return {GroupType::Affine, "E~6"};
    if (L == std::array<int, 3>{1, 3, 3}) return {GroupType::Affine, "E~7"};
    if (L == std::array<int, 3>{1, 2, 5}) return {GroupType::Affine, "E~8"};
    return {GroupType::Indefinite, "-"};
  }
  if (n_heavy == 1 && heavy == 4 && L[0] == 1 && L[1] == 1 && heavy_terminal_long_arm)
    return {GroupType::Affine, "B~" + std::to_string(V - 1)};
  return {GroupType::Indefinite, "-"};
}

}  // namespace detail

inline CatalogClass catalog_component(const CoxeterGraph& g, const std::vector<int>& comp) {
  return detail::catalog_connected(g, comp);
}

inline GroupType catalog_classify(const CoxeterGraph& g) {
  GroupType worst = GroupType::Finite;
  for (const auto& comp : components(g))
    worst = std::max(worst, detail::catalog_connected(g, comp).type);
  return worst;
}

// ---------------------------------------------------------------------------
// Signature of a symmetric matrix by congruence elimination (exact scalars).

template <class K>
std::array<int, 3> gram_signature(std::vector<std::vector<K>> A) {
  int n = (int)A.size();
  std::vector<char> done(n, 0);
  int pos = 0, neg = 0, zero = 0, remaining = n;
  while (remaining > 0) {
    int piv = -1;
    for (int i = 0; i < n; ++i)
      if (!done[i] && A[i][i].sign() != 0) {
        piv = i;
        break;
      }
    if (piv >= 0) {
      (A[piv][piv].sign() > 0 ? pos : neg) += 1;
      done[piv] = 1;
      --remaining;
      std::vector<K> f(n, K(0));
      for (int j = 0; j < n; ++j)
        if (!done[j]) f[j] = A[j][piv] / A[piv][piv];
      for (int j = 0; j < n; ++j)
        if (!done[j])
          for (int k = 0; k < n; ++k)
            if (!done[k]) A[j][k] -= f[j] * A[piv][k];
      continue;
    }
    int i0 = -1, j0 = -1;
    for (int i = 0; i < n && i0 < 0; ++i)
      if (!done[i])
        for (int j = i + 1; j < n; ++j)
          if (!done[j] && A[i][j].sign() != 0) {
            i0 = i;
            j0 = j;
            break;
          }
    if (i0 < 0) {
      zero += remaining;
      break;
    }
    // Zero diagonal with a nonzero off-diagonal entry: a hyperbolic pair.
    ++pos;
    ++neg;
    done[i0] = done[j0] = 1;
    remaining -= 2;
    K b = A[i0][j0];
    std::vector<std::vector<K>> old = A;
    for (int j = 0; j < n; ++j)
      if (!done[j])
        for (int k = 0; k < n; ++k)
          if (!done[k]) A[j][k] -= (old[j][i0] * old[j0][k] + old[j][j0] * old[i0][k]) / b;
  }
  return {pos, neg, zero};
}

// Eigenvalue signs via cyclic Jacobi sweeps (float scalars).
inline std::array<int, 3> jacobi_signature(std::vector<std::vector<double>> A) {
  int n = (int)A.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += A[i][j] * A[i][j];
    if (off < 1e-24) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::fabs(A[p][q]) < 1e-15) continue;
        double theta = (A[q][q] - A[p][p]) / (2 * A[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1));
        double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = A[k][p], akq = A[k][q];
          A[k][p] = c * akp - s * akq;
          A[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = A[p][k], aqk = A[q][k];
          A[p][k] = c * apk - s * aqk;
          A[q][k] = s * apk + c * aqk;
        }
      }
  }
  int pos = 0, neg = 0, zero = 0;
  for (int i = 0; i < n; ++i) {
    if (A[i][i] > 1e-9)
      ++pos;
    else if (A[i][i] < -1e-9)
      ++neg;
    else
      ++zero;
  }
  return {pos, neg, zero};
}

template <class K>
std::vector<std::vector<K>> gram_matrix(const CoxeterGraph& g) {
  int n = g.rank();
  std::vector<std::vector<K>> B(n, std::vector<K>(n, K(0)));
  for (int s = 0; s < n; ++s) {
    B[s][s] = K(1);
    for (int t = 0; t < n; ++t) {
      if (s == t) continue;
      auto e = K::minus_cos_pi_over(g.bond[s][t]);
      if (!e)
        throw Error(std::string("bond of order ") + std::to_string(g.bond[s][t]) +
                    " is not representable in " + K::mode_name() + " scalar mode");
      B[s][t] = *e;
    }
  }
  return B;
}

inline GroupType type_of_signature(const std::array<int, 3>& sig) {
  if (sig[1] > 0) return GroupType::Indefinite;
  if (sig[2] > 0) return GroupType::Affine;
  return GroupType::Finite;
}

// Positive / affine / indefinite character of the bilinear form, componentwise
// with the worst class winning.  In float mode the verdict is cross-checked
// against the diagram catalogs; a mismatch means the tolerance lied and is
// reported as an error.
template <class K>
GroupType classify_type(const CoxeterGraph& g) {
  auto B = gram_matrix<K>(g);
  GroupType worst = GroupType::Finite;
  for (const auto& comp : components(g)) {
    int m = (int)comp.size();
    GroupType t;
    if constexpr (std::is_same_v<K, exact::Approx>) {
      std::vector<std::vector<double>> S(m, std::vector<double>(m));
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) S[i][j] = B[comp[i]][comp[j]].to_double();
      t = type_of_signature(jacobi_signature(std::move(S)));
      GroupType fromcat = detail::catalog_connected(g, comp).type;
      if (fromcat != t)
        throw Error("float-mode classification disagrees with the diagram catalog");
    } else {
      std::vector<std::vector<K>> S(m, std::vector<K>(m, K(0)));
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) S[i][j] = B[comp[i]][comp[j]];
      t = type_of_signature(gram_signature(std::move(S)));
    }
    worst = std::max(worst, t);
  }
  return worst;
}

// ---------------------------------------------------------------------------
// The standard reflection representation and its root system.

template <class K>
class RootSystem {
 public:
  using Vec = std::vector<K>;

  struct VecLess {
    bool operator()(const Vec& a, const Vec& b) const {
      for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (b[i] < a[i]) return false;
      }
      return false;
    }
  };

  struct Root {
    Vec coeffs;
    int depth = 0;
  };

  explicit RootSystem(CoxeterGraph g) : g_(std::move(g)), gram_(gram_matrix<K>(g_)) {}

  const CoxeterGraph& graph() const { return g_; }
  int rank() const { return g_.rank(); }
  const std::vector<std::vector<K>>& gram() const { return gram_; }

  Vec simple_root(int s) const {
    Vec x(rank(), K(0));
    x[s] = K(1);
    return x;
  }

  K inner(const Vec& x, const Vec& y) const {
    K acc(0);
    for (int i = 0; i < rank(); ++i) {
      if (x[i].is_zero()) continue;
      for (int j = 0; j < rank(); ++j) acc += x[i] * gram_[i][j] * y[j];
    }
    return acc;
  }

  // rho_s(x) = x - 2 <x, alpha_s> alpha_s
  Vec reflect(int s, Vec x) const {
    K c(0);
    for (int t = 0; t < rank(); ++t) c += x[t] * gram_[t][s];
    x[s] -= (K(2) * c);
    return x;
  }

  // Words act right to left: act(s_1 ... s_k, x) = rho_{s_1}(... rho_{s_k}(x)).
  Vec act(const GroupWord& w, Vec x) const {
    for (auto it = w.rbegin(); it != w.rend(); ++it) x = reflect(*it, std::move(x));
    return x;
  }

  // +1 for a positive root, -1 for a negative one; mixed signs never occur on
  // genuine roots and are reported as an error.
  int vec_sign(const Vec& x) const {
    bool pos = false, neg = false;
    for (const auto& c : x) {
      int s = c.sign();
      if (s > 0) pos = true;
      if (s < 0) neg = true;
    }
    if (pos && neg) throw Error("vector with mixed coefficient signs is not a root");
    return pos ? 1 : neg ? -1 : 0;
  }

  // All positive roots w alpha_s with l(w) < depth, tagged with the first
  // length reaching them.
  std::vector<Root> positive_roots(int depth) const {
    if (depth < 1) throw Error("root enumeration depth must be at least 1");
    return bfs_roots(depth);
  }

  // Unbounded enumeration; only terminates (and is only allowed) in finite
  // type.
  std::vector<Root> all_positive_roots() const {
    if (classify_type<K>(g_) != GroupType::Finite)
      throw Error("full root enumeration requires finite type");
    return bfs_roots(-1);
  }

  // Phi_w, computed by appending letters on the right:
  //   Phi_{ws} = s(Phi_w \ {alpha_s}), plus alpha_s when alpha_s was absent.
  std::vector<Vec> inversion_set(const GroupWord& w) const {
    std::set<Vec, VecLess> cur;
    for (int s : w) {
      Vec alpha = simple_root(s);
      std::set<Vec, VecLess> next;
      bool had = cur.count(alpha) > 0;
      for (const auto& beta : cur) {
        if (!(VecLess{}(beta, alpha) || VecLess{}(alpha, beta))) continue;
        next.insert(reflect(s, beta));
      }
      if (!had) next.insert(alpha);
      cur = std::move(next);
    }
    return std::vector<Vec>(cur.begin(), cur.end());
  }

  long long length(const GroupWord& w) const { return (long long)inversion_set(w).size(); }

  // +1 when l(ws) > l(w), i.e. w alpha_s stays positive; -1 otherwise.
  int descent_step(const GroupWord& w, int s) const {
    int sg = vec_sign(act(w, simple_root(s)));
    return sg >= 0 ? 1 : -1;
  }

  // Reflection in an arbitrary unit root.
  Vec reflect_in_root(const Vec& beta, Vec x) const {
    if (!(inner(beta, beta) == K(1))) throw Error("reflection requires a unit root");
    K c = inner(x, beta);
    for (int i = 0; i < rank(); ++i) x[i] -= K(2) * c * beta[i];
    return x;
  }

 private:
  std::vector<Root> bfs_roots(int depth) const {
    std::map<Vec, int, VecLess> seen;
    std::vector<Root> out;
    std::vector<Vec> frontier;
    for (int s = 0; s < rank(); ++s) {
      Vec a = simple_root(s);
      if (seen.emplace(a, 0).second) {
        out.push_back({a, 0});
        frontier.push_back(a);
      }
    }
    int layer = 0;
    while (!frontier.empty() && (depth < 0 || layer + 1 < depth)) {
      ++layer;
      std::vector<Vec> next;
      for (const auto& x : frontier)
        for (int s = 0; s < rank(); ++s) {
          Vec y = reflect(s, x);
          if (vec_sign(y) < 0) continue;
          if (seen.emplace(y, layer).second) {
            out.push_back({y, layer});
            next.push_back(y);
          }
        }
      frontier = std::move(next);
    }
    return out;
  }

  CoxeterGraph g_;
  std::vector<std::vector<K>> gram_;
};

}  // namespace braidforge::coxeter
