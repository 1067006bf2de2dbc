#pragma once

#include <atomic>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "braidclass.hpp"
#include "coxeter.hpp"
#include "dehornoy.hpp"
#include "errors.hpp"
#include "garside.hpp"
#include "krammer.hpp"
#include "surface.hpp"
#include "words.hpp"

namespace braidforge::cli {

// ---------------------------------------------------------------------------
// Output helpers.  All primary output is one key=value record per line.

inline std::string factor_code(const garside::SimpleFactor& f) {
  if (garside::is_delta(f)) return "D";
  std::string s;
  for (int v : garside::simple_word(f).letters) s += std::to_string(v);
  return s;
}

// Canonical form as a dotted factor list: "~" marks inverted factors, "D" the
// half twist, "e" the identity.  sigma_1 sigma_2 sigma_1 sigma_1 in B_3 reads
// "D.1".
inline std::string factors_code(const garside::GarsideNormalForm& nf) {
  std::vector<std::string> parts;
  for (const auto& f : nf.negative) parts.push_back("~" + factor_code(f));
  for (const auto& f : nf.positive) parts.push_back(factor_code(f));
  if (parts.empty()) return "e";
  std::string s = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) s += "." + parts[i];
  return s;
}

template <class K>
std::string coeffs_text(const std::vector<K>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].to_string();
  }
  return s;
}

template <class T>
std::string join(const std::vector<T>& v, const std::string& sep) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    if constexpr (std::is_same_v<T, std::string>)
      s += v[i];
    else
      s += std::to_string(v[i]);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Scalar-mode resolution and dispatch.

inline coxeter::ScalarMode resolve_mode(const coxeter::CoxeterGraph& g) {
  const char* env = std::getenv("BRAIDFORGE_SCALAR_MODE");
  std::string v = env ? env : "auto";
  if (v == "auto") return coxeter::select_scalar_mode(g);
  if (v == "rational") return coxeter::ScalarMode::Rational;
  if (v == "quadratic") return coxeter::ScalarMode::Quadratic;
  if (v == "float") return coxeter::ScalarMode::Float;
  throw UsageError("unknown scalar mode '" + v + "' (use auto, rational, quadratic, float)");
}

template <class F>
decltype(auto) with_scalar(coxeter::ScalarMode m, F&& f) {
  switch (m) {
    case coxeter::ScalarMode::Rational:
      return std::forward<F>(f).template operator()<exact::Rational>();
    case coxeter::ScalarMode::Quadratic:
      return std::forward<F>(f).template operator()<exact::Quad>();
    default:
      return std::forward<F>(f).template operator()<exact::Approx>();
  }
}

// ---------------------------------------------------------------------------
// Subcommand bodies.

inline void run_normal_form(int strands, const std::string& word, std::ostream& out) {
  BraidWord w = words::parse_braid(word, strands);
  garside::GarsideNormalForm nf = garside::group_normal_form(w);
  out << "strands=" << strands << "\n";
  out << "factors=" << factors_code(nf) << "\n";
  out << "canonical_length=" << garside::canonical_length(nf) << "\n";
  out << "exponent_sum=" << words::exponent_sum(w) << "\n";
  out << "word=" << words::to_text(garside::word_of(nf)) << "\n";
}

inline void run_compare(int strands, const std::string& u, const std::string& v,
                        std::ostream& out) {
  dehornoy::CompareResult r =
      dehornoy::compare(words::parse_braid(u, strands), words::parse_braid(v, strands));
  const char* name = r.order == dehornoy::Ordering::LT   ? "LT"
                     : r.order == dehornoy::Ordering::GT ? "GT"
                                                         : "EQ";
  out << "order=" << name << "\n";
  out << "certificate=" << words::to_text(r.certificate) << "\n";
}

inline void run_classify(int strands, const std::string& word, int radius, std::ostream& out) {
  BraidWord f = words::parse_braid(word, strands);
  braidclass::ClassVerdict v = braidclass::classify(f, radius);
  out << "strands=" << strands << "\n";
  out << "radius=" << radius << "\n";
  out << "verdict=" << braidclass::class_kind_name(v.kind) << "\n";
  if (v.kind == braidclass::ClassKind::Periodic) {
    out << "m=" << v.m << "\n";
    out << "k=" << v.k << "\n";
  }
  if (v.kind == braidclass::ClassKind::Reducible) {
    out << "conjugator=" << words::to_text(v.witness.conjugator) << "\n";
    out << "support=" << join(v.witness.support, ",") << "\n";
    out << "orbit=" << v.orbit << "\n";
  }
}

inline void run_roots(const std::string& graph_file, int depth, bool full, std::ostream& out) {
  coxeter::CoxeterGraph g = coxeter::parse_graph_file(graph_file);
  coxeter::ScalarMode mode = resolve_mode(g);
  out << "mode=" << coxeter::mode_name(mode) << "\n";
  with_scalar(mode, [&]<class K>() {
    coxeter::RootSystem<K> rs(g);
    out << "type=" << coxeter::type_name(coxeter::classify_type<K>(g)) << "\n";
    auto roots = full ? rs.all_positive_roots() : rs.positive_roots(depth);
    if (full)
      out << "full=1\n";
    else
      out << "depth=" << depth << "\n";
    out << "count=" << roots.size() << "\n";
    for (const auto& r : roots) out << "root=" << coeffs_text(r.coeffs) << ":" << r.depth << "\n";
  });
}

inline void run_inversions(const std::string& graph_file, const std::string& word,
                           std::ostream& out) {
  coxeter::CoxeterGraph g = coxeter::parse_graph_file(graph_file);
  coxeter::ScalarMode mode = resolve_mode(g);
  out << "mode=" << coxeter::mode_name(mode) << "\n";
  with_scalar(mode, [&]<class K>() {
    coxeter::RootSystem<K> rs(g);
    coxeter::GroupWord w = coxeter::parse_group_word(g, word);
    auto inv = rs.inversion_set(w);
    out << "length=" << inv.size() << "\n";
    for (const auto& r : inv) out << "root=" << coeffs_text(r) << "\n";
  });
}

inline void run_essential(const std::string& graph_file, const std::string& word, int depth,
                          int mmax, std::ostream& out) {
  coxeter::CoxeterGraph g = coxeter::parse_graph_file(graph_file);
  coxeter::ScalarMode mode = resolve_mode(g);
  out << "mode=" << coxeter::mode_name(mode) << "\n";
  out << "depth=" << depth << "\n";
  out << "mmax=" << mmax << "\n";
  with_scalar(mode, [&]<class K>() {
    coxeter::RootSystem<K> rs(g);
    coxeter::GroupWord w = coxeter::parse_group_word(g, word);
    krammer::EssentialVerdict<K> v = krammer::essential_certificate(rs, w, depth, mmax);
    out << "verdict=" << krammer::essential_kind_name(v.kind) << "\n";
    if (v.kind == krammer::EssentialKind::NotEssential) out << "reason=" << v.reason << "\n";
    if (v.order > 0) out << "order=" << v.order << "\n";
    std::vector<std::string> sup, red;
    for (int s : v.support) sup.push_back(g.labels[s]);
    for (int s : v.reduced) red.push_back(g.labels[s]);
    out << "support=" << join(sup, ",") << "\n";
    out << "reduced=" << join(red, " ") << "\n";
    if (v.kind != krammer::EssentialKind::NotEssential) {
      out << "odd_count=" << v.odd.size() << "\n";
      out << "unknown=" << v.unknown << "\n";
      out << "closure=" << v.closure_size << "\n";
      if (v.kind == krammer::EssentialKind::CertifiedEssential)
        for (const auto& r : v.odd) out << "odd_root=" << coeffs_text(r) << "\n";
    }
  });
}

inline std::vector<int> parse_order(const coxeter::CoxeterGraph& g, const std::string& csv) {
  if (csv.empty()) return surface::default_order(g);
  std::vector<int> order;
  std::string cur;
  std::istringstream in(csv);
  while (std::getline(in, cur, ','))
    if (!cur.empty()) order.push_back(g.vertex(cur));
  surface::order_positions(g, order);  // validates it is a permutation
  return order;
}

inline void run_surface(const std::string& graph_file, const std::string& order_csv,
                        const std::string& rep_word, std::ostream& out) {
  coxeter::CoxeterGraph g = coxeter::parse_graph_file(graph_file);
  std::vector<int> order = parse_order(g, order_csv);
  std::vector<std::string> labels;
  for (int v : order) labels.push_back(g.labels[v]);
  out << "order=" << join(labels, ",") << "\n";

  if (!rep_word.empty()) {
    std::vector<int> word;
    std::istringstream in(rep_word);
    std::string tok;
    while (in >> tok) {
      int v;
      try {
        v = std::stoi(tok);
      } catch (...) {
        throw Error("malformed representation letter '" + tok + "'");
      }
      word.push_back(v);
    }
    surface::Mat M = surface::homological_rep(g, order, word);
    for (const auto& row : M) out << "row=" << join(row, ",") << "\n";
    return;
  }

  surface::SurfaceModel m = surface::build_surface(g, order);
  out << "genus=" << m.genus << "\n";
  out << "boundary=" << m.boundary << "\n";
  out << "chi=" << m.chi << "\n";
  out << "components=" << m.components << "\n";
  out << "h1_rank=" << m.h1_rank << "\n";
  out << "curve_span_rank=" << m.curve_span_rank << "\n";
  for (const auto& row : surface::intersection_matrix(g, order)) out << "J=" << join(row, ",") << "\n";
  surface::RelationReport rel = surface::verify_artin_relations(g, order);
  if (rel.ok)
    out << "relations=ok\n";
  else
    out << "relations=failed:" << join(rel.failures, ",") << "\n";
}

// ---------------------------------------------------------------------------
// One parsed invocation (no batch handling here).

inline int run_one(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact braid, Garside, and Coxeter computations", "braidforge"};
  app.require_subcommand(1);

  int strands = 2;
  std::string word, word2, graph_file, order_csv, rep_word;
  int depth = 4;
  int kdepth = krammer::kDefaultDepth;
  int mmax = krammer::kDefaultMMax;
  int radius = 2;
  bool full = false;

  CLI::App* nf = app.add_subcommand("normal-form", "canonical form of a braid word");
  nf->add_option("--strands", strands, "number of strands")->required();
  nf->add_option("word", word, "braid word, signed generator indices")->required();

  CLI::App* cmp = app.add_subcommand("compare", "order two braid words");
  cmp->add_option("--strands", strands, "number of strands")->required();
  cmp->add_option("u", word, "left braid word")->required();
  cmp->add_option("v", word2, "right braid word")->required();

  CLI::App* cls = app.add_subcommand("classify", "periodic / reducible search for a braid");
  cls->add_option("--strands", strands, "number of strands")->required();
  cls->add_option("word", word, "braid word")->required();
  cls->add_option("--radius", radius, "conjugator canonical-length bound");

  CLI::App* rts = app.add_subcommand("roots", "enumerate positive roots");
  rts->add_option("--graph", graph_file, "graph file")->required();
  rts->add_option("--depth", depth, "enumeration depth");
  rts->add_flag("--full", full, "enumerate all positive roots (finite type only)");

  CLI::App* inv = app.add_subcommand("inversions", "inversion set and length of a word");
  inv->add_option("--graph", graph_file, "graph file")->required();
  inv->add_option("--word", word, "word as space-separated vertex labels")->required();

  CLI::App* ess = app.add_subcommand("essential", "essential-element certification");
  ess->add_option("--graph", graph_file, "graph file")->required();
  ess->add_option("--word", word, "word as space-separated vertex labels")->required();
  ess->add_option("--depth", kdepth, "root enumeration depth");
  ess->add_option("--mmax", mmax, "orbit scan bound");

  CLI::App* srf = app.add_subcommand("surface", "monodromy surface invariants");
  srf->add_option("--graph", graph_file, "graph file (small type)")->required();
  srf->add_option("--order", order_csv, "vertex order as comma-separated labels");
  srf->add_option("--rep", rep_word, "print the matrix of this word instead (signed positions)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(std::move(rev));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error=" << e.what() << "\n";
    return 2;
  }

  try {
    if (*nf) run_normal_form(strands, word, out);
    if (*cmp) run_compare(strands, word, word2, out);
    if (*cls) run_classify(strands, word, radius, out);
    if (*rts) run_roots(graph_file, depth, full, out);
    if (*inv) run_inversions(graph_file, word, out);
    if (*ess) run_essential(graph_file, word, kdepth, mmax, out);
    if (*srf) run_surface(graph_file, order_csv, rep_word, out);
  } catch (const UsageError& e) {
    err << "error=" << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error=" << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error=" << e.what() << "\n";
    return 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Batch front end: each nonblank line of the file is one request, with
// double quotes grouping words.  Requests run (possibly concurrently) and
// print strictly in file order.

inline std::vector<std::string> split_request(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool inq = false, token = false;
  for (char c : line) {
    if (c == '"') {
      inq = !inq;
      token = true;
      continue;
    }
    if (!inq && std::isspace((unsigned char)c)) {
      if (token || !cur.empty()) out.push_back(cur);
      cur.clear();
      token = false;
      continue;
    }
    cur += c;
    token = true;
  }
  if (inq) throw UsageError("unterminated quote in batch line");
  if (token || !cur.empty()) out.push_back(cur);
  return out;
}

inline int run_batch(const std::string& path, int jobs, std::ostream& out, std::ostream& err) {
  if (jobs < 1) throw UsageError("--jobs must be at least 1");
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open batch file '" + path + "'");
  std::vector<std::vector<std::string>> requests;
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::vector<std::string> toks = split_request(line);
    if (!toks.empty()) requests.push_back(std::move(toks));
  }

  std::vector<std::string> bodies(requests.size());
  std::vector<int> codes(requests.size(), 0);
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t i; (i = next.fetch_add(1)) < requests.size();) {
      std::ostringstream o;
      codes[i] = run_one(requests[i], o, o);
      bodies[i] = o.str();
    }
  };
  if (jobs == 1 || requests.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    int n = std::min<int>(jobs, (int)requests.size());
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  int overall = 0;
  for (size_t i = 0; i < requests.size(); ++i) {
    out << "request=" << i << "\n" << bodies[i] << "status=" << codes[i] << "\n";
    overall = std::max(overall, codes[i]);
  }
  (void)err;
  return overall;
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  // Batch mode bypasses subcommand parsing: braidforge --batch FILE [--jobs N]
  if (!args.empty() && args[0] == "--batch") {
    try {
      if (args.size() != 2 && args.size() != 4) throw UsageError("usage: --batch FILE [--jobs N]");
      std::string path = args[1];
      int jobs = 1;
      if (args.size() == 4) {
        if (args[2] != "--jobs") throw UsageError("usage: --batch FILE [--jobs N]");
        try {
          jobs = std::stoi(args[3]);
        } catch (...) {
          throw UsageError("malformed --jobs value");
        }
      }
      return run_batch(path, jobs, out, err);
    } catch (const UsageError& e) {
      err << "error=" << e.what() << "\n";
      return 2;
    }
  }
  return run_one(args, out, err);
}

}  // namespace braidforge::cli
