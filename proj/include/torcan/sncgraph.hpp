#pragma once

// Weighted dual graphs of simple-normal-crossing curve configurations:
// vertices are irreducible components with self-intersection weights, edges
// are intersection points (multiplicity = number of points). Provides the
// blow-up/contraction calculus on such graphs, Gram matrices of
// intersection forms, exact form comparison, and the shipped figure
// fixtures with their derived boundary graphs.

#include "torcan/intmat.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <fstream>
#include <map>
#include <tuple>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace torcan {

class WeightedDualGraph {
 public:
  WeightedDualGraph() = default;

  void add_vertex(const std::string& label, Integer weight) {
    if (label.empty())
      throw std::invalid_argument("add_vertex: empty label");
    if (index_.count(label))
      throw std::invalid_argument("add_vertex: duplicate label " + label);
    index_.emplace(label, labels_.size());
    labels_.push_back(label);
    weights_.push_back(std::move(weight));
  }

  void add_edge(const std::string& a, const std::string& b,
                const Integer& multiplicity = 1) {
    require(a);
    require(b);
    if (a == b)
      throw std::invalid_argument("add_edge: loop at " + a +
                                  " (components are smooth)");
    if (multiplicity < 1)
      throw std::invalid_argument("add_edge: multiplicity must be >= 1");
    edges_[key(a, b)] += multiplicity;
  }

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  bool has_vertex(const std::string& label) const {
    return index_.count(label) != 0;
  }

  const Integer& weight(const std::string& label) const {
    return weights_[require(label)];
  }

  Integer edge_multiplicity(const std::string& a, const std::string& b) const {
    require(a);
    require(b);
    auto it = edges_.find(key(a, b));
    return it == edges_.end() ? Integer(0) : it->second;
  }

  // Neighbors with multiplicities, in vertex insertion order.
  std::vector<std::pair<std::string, Integer>> neighbors(
      const std::string& label) const {
    require(label);
    std::vector<std::pair<std::string, Integer>> out;
    for (const std::string& other : labels_) {
      if (other == label) continue;
      auto it = edges_.find(key(label, other));
      if (it != edges_.end()) out.push_back({other, it->second});
    }
    return out;
  }

  // Edges as (a, b, multiplicity), endpoints and list ordered by vertex
  // insertion order.
  std::vector<std::tuple<std::string, std::string, Integer>> edge_list()
      const {
    std::vector<std::tuple<std::string, std::string, Integer>> out;
    for (std::size_t i = 0; i < labels_.size(); ++i)
      for (std::size_t j = i + 1; j < labels_.size(); ++j) {
        auto it = edges_.find(key(labels_[i], labels_[j]));
        if (it != edges_.end())
          out.push_back({labels_[i], labels_[j], it->second});
      }
    return out;
  }

  void set_weight(const std::string& label, Integer w) {
    weights_[require(label)] = std::move(w);
  }

  void remove_vertex(const std::string& label) {
    std::size_t pos = require(label);
    labels_.erase(labels_.begin() + pos);
    weights_.erase(weights_.begin() + pos);
    index_.erase(label);
    for (auto& [other, idx] : index_)
      if (idx > pos) --idx;
    for (auto it = edges_.begin(); it != edges_.end();)
      if (it->first.first == label || it->first.second == label)
        it = edges_.erase(it);
      else
        ++it;
  }

  // Removes one copy of the edge (erasing it when the multiplicity drops
  // to zero).
  void remove_edge_copy(const std::string& a, const std::string& b) {
    require(a);
    require(b);
    auto it = edges_.find(key(a, b));
    if (it == edges_.end())
      throw std::invalid_argument("remove_edge_copy: no edge " + a + " " + b);
    if (--it->second == 0) edges_.erase(it);
  }

  // First label of the form e1, e2, ... not yet in use.
  std::string fresh_label() const {
    for (std::size_t i = 1;; ++i) {
      std::string candidate = "e" + std::to_string(i);
      if (!index_.count(candidate)) return candidate;
    }
  }

  friend bool operator==(const WeightedDualGraph& a,
                         const WeightedDualGraph& b) {
    return a.labels_ == b.labels_ && a.weights_ == b.weights_ &&
           a.edges_ == b.edges_;
  }
  friend bool operator!=(const WeightedDualGraph& a,
                         const WeightedDualGraph& b) {
    return !(a == b);
  }

 private:
  std::size_t require(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end())
      throw std::invalid_argument("unknown vertex label " + label);
    return it->second;
  }

  static std::pair<std::string, std::string> key(const std::string& a,
                                                 const std::string& b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
  }

  std::vector<std::string> labels_;  // insertion order
  std::vector<Integer> weights_;
  std::map<std::string, std::size_t> index_;
  std::map<std::pair<std::string, std::string>, Integer> edges_;
};

// Blow up a point on the component v lying on no other component: a new
// (-1) vertex appears joined to v, and v drops by 1.
inline WeightedDualGraph blow_up_point(const WeightedDualGraph& g,
                                       const std::string& v,
                                       const std::string& new_label = "") {
  WeightedDualGraph out = g;
  std::string e = new_label.empty() ? out.fresh_label() : new_label;
  out.add_vertex(e, -1);
  out.set_weight(v, g.weight(v) - 1);
  out.add_edge(v, e);
  return out;
}

// Blow up one of the intersection points of a and b: one copy of the edge
// is replaced by a new (-1) vertex joined to both, and both endpoints drop
// by 1.
inline WeightedDualGraph blow_up_edge(const WeightedDualGraph& g,
                                      const std::string& a,
                                      const std::string& b,
                                      const std::string& new_label = "") {
  WeightedDualGraph out = g;
  out.remove_edge_copy(a, b);
  std::string e = new_label.empty() ? out.fresh_label() : new_label;
  out.add_vertex(e, -1);
  out.set_weight(a, g.weight(a) - 1);
  out.set_weight(b, g.weight(b) - 1);
  out.add_edge(a, e);
  out.add_edge(b, e);
  return out;
}

// Contract the (-1) vertex v: each neighbor u meeting v in m_u points
// gains m_u^2, and each unordered neighbor pair (u, w) gains m_u * m_w
// intersection points.
inline WeightedDualGraph contract(const WeightedDualGraph& g,
                                  const std::string& v) {
  if (g.weight(v) != -1)
    throw std::invalid_argument("contract: vertex " + v +
                                " does not have weight -1");
  std::vector<std::pair<std::string, Integer>> nbrs = g.neighbors(v);
  WeightedDualGraph out = g;
  out.remove_vertex(v);
  for (const auto& [u, m] : nbrs) out.set_weight(u, g.weight(u) + m * m);
  for (std::size_t i = 0; i < nbrs.size(); ++i)
    for (std::size_t j = i + 1; j < nbrs.size(); ++j)
      out.add_edge(nbrs[i].first, nbrs[j].first,
                   nbrs[i].second * nbrs[j].second);
  return out;
}

// Subgraph on the given vertices (in the given order) with all edges
// between them.
inline WeightedDualGraph induced_subgraph(
    const WeightedDualGraph& g, const std::vector<std::string>& vertices) {
  WeightedDualGraph out;
  for (const std::string& v : vertices) out.add_vertex(v, g.weight(v));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      Integer m = g.edge_multiplicity(vertices[i], vertices[j]);
      if (m > 0) out.add_edge(vertices[i], vertices[j], m);
    }
  return out;
}

// Gram matrix of the intersection form on an ordered set of components:
// diagonal = self-intersections, off-diagonal = intersection counts.
struct IntersectionForm {
  IntMatrix gram;
  std::vector<std::string> basis_labels;

  IntersectionForm(IntMatrix g, std::vector<std::string> labels)
      : gram(std::move(g)), basis_labels(std::move(labels)) {
    if (gram.rows() != gram.cols() || gram.rows() != basis_labels.size())
      throw std::invalid_argument("IntersectionForm: size mismatch");
    if (!(gram == gram.transpose()))
      throw std::invalid_argument("IntersectionForm: gram is not symmetric");
  }

  std::size_t size() const { return basis_labels.size(); }
};

inline IntersectionForm intersection_matrix(
    const WeightedDualGraph& g, const std::vector<std::string>& subset) {
  IntMatrix gram(subset.size(), subset.size());
  for (std::size_t i = 0; i < subset.size(); ++i) {
    gram(i, i) = g.weight(subset[i]);
    for (std::size_t j = i + 1; j < subset.size(); ++j)
      gram(i, j) = gram(j, i) = g.edge_multiplicity(subset[i], subset[j]);
  }
  return IntersectionForm(std::move(gram), subset);
}

inline IntersectionForm intersection_matrix(const WeightedDualGraph& g) {
  return intersection_matrix(g, g.labels());
}

struct FormInvariants {
  std::size_t rank = 0;                   // rank of the Gram matrix
  Integer determinant;                    // of the Gram matrix
  std::vector<Integer> smith_invariants;  // nonzero invariant factors
};

inline FormInvariants form_invariants(const IntersectionForm& f) {
  SmithDecomposition d = smith_normal_form(f.gram);
  FormInvariants inv;
  inv.smith_invariants = d.invariant_factors();
  inv.rank = inv.smith_invariants.size();
  inv.determinant = determinant(f.gram);
  return inv;
}

// Outcome of an exact comparison of two intersection forms. Equivalence
// here means a bijection of basis labels matching weights and all pairwise
// intersection numbers; a true verdict always carries such a bijection.
struct FormComparison {
  bool isomorphic = false;
  std::string reason;  // matched invariant summary, or the failing screen
  // bijection[i] = index in f2 of the image of basis vector i of f1.
  std::optional<std::vector<std::size_t>> bijection;
};

namespace detail {

inline bool extend_bijection(const IntMatrix& g1, const IntMatrix& g2,
                             std::vector<std::size_t>& map,
                             std::vector<bool>& used, std::size_t i) {
  const std::size_t n = g1.rows();
  if (i == n) return true;
  for (std::size_t c = 0; c < n; ++c) {
    if (used[c] || g1(i, i) != g2(c, c)) continue;
    bool ok = true;
    for (std::size_t j = 0; j < i && ok; ++j)
      ok = g1(i, j) == g2(c, map[j]);
    if (!ok) continue;
    map[i] = c;
    used[c] = true;
    if (extend_bijection(g1, g2, map, used, i + 1)) return true;
    used[c] = false;
  }
  return false;
}

}  // namespace detail

inline FormComparison compare_forms(const IntersectionForm& f1,
                                    const IntersectionForm& f2) {
  FormComparison out;
  // Invariant screens, cheapest first. "rank" compares the number of basis
  // vectors (the lattices must agree before the forms can); the rank of the
  // Gram matrix is screened separately below.
  if (f1.size() != f2.size()) {
    out.reason = "rank " + std::to_string(f1.size()) + " != rank " +
                 std::to_string(f2.size());
    return out;
  }
  FormInvariants i1 = form_invariants(f1), i2 = form_invariants(f2);
  if (i1.rank != i2.rank) {
    out.reason = "gram rank " + std::to_string(i1.rank) + " != gram rank " +
                 std::to_string(i2.rank);
    return out;
  }
  if (i1.determinant != i2.determinant) {
    out.reason = "determinant " + i1.determinant.str() + " != determinant " +
                 i2.determinant.str();
    return out;
  }
  if (i1.smith_invariants != i2.smith_invariants) {
    out.reason = "smith invariants differ";
    return out;
  }
  std::vector<Integer> w1, w2;
  for (std::size_t i = 0; i < f1.size(); ++i) w1.push_back(f1.gram(i, i));
  for (std::size_t i = 0; i < f2.size(); ++i) w2.push_back(f2.gram(i, i));
  std::sort(w1.begin(), w1.end());
  std::sort(w2.begin(), w2.end());
  if (w1 != w2) {
    out.reason = "weight multisets differ";
    return out;
  }
  // Exhaustive weight-preserving search for a basis bijection.
  std::vector<std::size_t> map(f1.size());
  std::vector<bool> used(f1.size(), false);
  if (detail::extend_bijection(f1.gram, f2.gram, map, used, 0)) {
    out.isomorphic = true;
    out.reason = "isomorphic (explicit basis bijection)";
    out.bijection = map;
    return out;
  }
  out.reason = "equal invariants but no basis bijection exists";
  return out;
}

inline bool forms_isomorphic(const IntersectionForm& f1,
                             const IntersectionForm& f2) {
  return compare_forms(f1, f2).isomorphic;
}

// ---------------------------------------------------------------------------
// Fixture file format: one vertex per line `label weight`, then edges
// `label label [multiplicity]`; `#` starts a comment; UTF-8, newline-
// delimited. A two-token line whose tokens are both existing vertex labels
// is an edge of multiplicity 1; otherwise it declares a vertex.

inline WeightedDualGraph parse_graph(std::istream& in) {
  WeightedDualGraph g;
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("parse_graph: line " + std::to_string(lineno) +
                                ": " + what);
  };
  auto parse_int = [&](const std::string& tok) {
    try {
      return Integer(tok);
    } catch (const std::exception&) {
      fail("expected an integer, got '" + tok + "'");
      return Integer(0);  // unreachable
    }
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (std::size_t hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() == 2 && g.has_vertex(tok[0]) && g.has_vertex(tok[1]))
      g.add_edge(tok[0], tok[1]);
    else if (tok.size() == 2)
      g.add_vertex(tok[0], parse_int(tok[1]));
    else if (tok.size() == 3)
      g.add_edge(tok[0], tok[1], parse_int(tok[2]));
    else
      fail("expected 'label weight' or 'label label [multiplicity]'");
  }
  return g;
}

inline WeightedDualGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

// Rendering in the same file format (vertices, blank line, edges).
inline std::string to_string(const WeightedDualGraph& g) {
  std::string out;
  for (const std::string& v : g.labels())
    out += v + " " + g.weight(v).str() + "\n";
  out += "\n";
  for (const auto& [a, b, m] : g.edge_list()) {
    out += a + " " + b;
    if (m != 1) out += " " + m.str();
    out += "\n";
  }
  return out;
}

inline std::string default_fixture_dir() {
  if (const char* env = std::getenv("TORCAN_FIXTURE_DIR")) return env;
#ifdef TORCAN_DEFAULT_FIXTURE_DIR
  return TORCAN_DEFAULT_FIXTURE_DIR;
#else
  return "fixtures";
#endif
}

// Shipped configurations: "fig1" and "fig2" load the two resolved-pencil
// graphs from data files; "B1" and "B2" are the corresponding boundary
// graphs, derived on the fly by applying the contraction sequences and
// restricting to the boundary components.
inline WeightedDualGraph load_fixture(
    const std::string& name, const std::string& dir = default_fixture_dir()) {
  auto from_file = [&](const std::string& base) {
    std::string path = dir + "/" + base + ".graph";
    std::ifstream in(path);
    if (!in)
      throw std::runtime_error("load_fixture: cannot open " + path);
    return parse_graph(in);
  };
  if (name == "fig1") return from_file("fig1");
  if (name == "fig2") return from_file("fig2");
  if (name == "B1") {
    WeightedDualGraph g = contract(from_file("fig1"), "L_z");
    return induced_subgraph(
        g, {"D1", "H_inf_1", "H_0_1", "E_inf_3", "E_inf_1", "E_0_1", "E_0_2",
            "E_inf_2", "E_0_3"});
  }
  if (name == "B2") {
    WeightedDualGraph g = from_file("fig2");
    for (const std::string& v : {"C1", "E_0_4", "E_0_3", "E_0_2", "E_0_1"})
      g = contract(g, v);
    return induced_subgraph(
        g, {"D2", "H_inf_2", "H_0_2", "E_inf_1", "E_0_5", "C0", "E_0_6",
            "E_0_7", "E_0_8", "E_0_9"});
  }
  throw std::invalid_argument("load_fixture: unknown fixture " + name);
}

}  // namespace torcan
