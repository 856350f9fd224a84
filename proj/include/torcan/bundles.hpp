#pragma once

// Classes of principal torus bundles over a fixed base, encoded as n-tuples
// of elements of a finite abelian group G (one per torus factor), together
// with the change-of-fiber-coordinates action of GL(n, Z), orbit decision by
// exhaustive breadth-first closure, explicit cylinder-style witness pairs,
// and exhaustive counterexample search.
//
// Action convention (column form): a matrix M in GL(n, Z) sends the class
// c = (c_1, ..., c_n) to c' with c'_i = sum_j M(i, j) * c_j. The row
// convention used elsewhere is the transpose of this one; conjugating by the
// transpose identifies the two actions, so orbits are unaffected.

#include "torcan/abelian.hpp"
#include "torcan/intmat.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace torcan {

class BundleClass {
 public:
  BundleClass(FinAbGroup group, std::vector<GroupElement> components)
      : group_(std::move(group)), components_(std::move(components)) {
    if (components_.empty())
      throw std::invalid_argument("BundleClass: need at least one component");
    for (const GroupElement& e : components_)
      if (e.group() != group_)
        throw std::invalid_argument(
            "BundleClass: component in the wrong group");
  }

  const FinAbGroup& group() const { return group_; }
  std::size_t n() const { return components_.size(); }
  const std::vector<GroupElement>& components() const { return components_; }
  const GroupElement& component(std::size_t i) const {
    return components_.at(i);
  }

  std::vector<Integer> flatten() const {
    std::vector<Integer> flat;
    flat.reserve(n() * group_.rank());
    for (const GroupElement& e : components_)
      for (const Integer& c : e.coords()) flat.push_back(c);
    return flat;
  }

  friend bool operator==(const BundleClass& a, const BundleClass& b) {
    return a.group_ == b.group_ && a.components_ == b.components_;
  }
  friend bool operator!=(const BundleClass& a, const BundleClass& b) {
    return !(a == b);
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < components_.size(); ++i) {
      if (i) s += ",";
      s += components_[i].to_string();
    }
    return s + ")";
  }

 private:
  FinAbGroup group_;
  std::vector<GroupElement> components_;
};

// Convenience constructors for cyclic groups: class (r_1, ..., r_n) in Z/d.
inline BundleClass cyclic_class(const Integer& d,
                                const std::vector<Integer>& residues) {
  FinAbGroup g = FinAbGroup::cyclic(d);
  std::vector<GroupElement> comps;
  for (const Integer& r : residues)
    comps.push_back(g.trivial() ? GroupElement::zero(g) : GroupElement(g, {r}));
  return BundleClass(g, std::move(comps));
}

inline BundleClass act(const UnimodularMatrix& m, const BundleClass& c) {
  if (m.size() != c.n())
    throw std::invalid_argument("act: matrix size does not match class size");
  std::vector<GroupElement> out;
  out.reserve(c.n());
  for (std::size_t i = 0; i < c.n(); ++i) {
    GroupElement acc = GroupElement::zero(c.group());
    for (std::size_t j = 0; j < c.n(); ++j)
      acc = acc + c.component(j).scaled(m.matrix()(i, j));
    out.push_back(std::move(acc));
  }
  return BundleClass(c.group(), std::move(out));
}

// Appends `extra` trivial components (trivial torus factors).
inline BundleClass pad(const BundleClass& c, std::size_t extra) {
  std::vector<GroupElement> comps = c.components();
  for (std::size_t i = 0; i < extra; ++i)
    comps.push_back(GroupElement::zero(c.group()));
  return BundleClass(c.group(), std::move(comps));
}

// Concatenation (c1, c2) as one class of length n1 + n2.
inline BundleClass joint_class(const BundleClass& c1, const BundleClass& c2) {
  if (c1.group() != c2.group())
    throw std::invalid_argument("joint_class: group mismatch");
  std::vector<GroupElement> comps = c1.components();
  for (const GroupElement& e : c2.components()) comps.push_back(e);
  return BundleClass(c1.group(), std::move(comps));
}

inline Subgroup class_subgroup(const BundleClass& c) {
  return subgroup_generated(c.group(), c.components());
}

inline bool same_subgroup(const BundleClass& c1, const BundleClass& c2) {
  if (c1.group() != c2.group())
    throw std::invalid_argument("same_subgroup: group mismatch");
  return subgroups_equal(class_subgroup(c1), class_subgroup(c2));
}

// Total-space Picard group: G modulo the subgroup the components generate.
inline FinAbGroup total_space_picard(const BundleClass& c) {
  return quotient_group(c.group(), class_subgroup(c));
}

// A finite set of automorphisms of G acting diagonally on classes. Each
// generator is a rank x rank integer matrix acting on coordinates; it must
// descend to G (f_j * column j lands in the relation lattice) and be
// bijective, checked exactly via surjectivity of the induced endomorphism.
class AutAction {
 public:
  static AutAction trivial(const FinAbGroup& g) { return AutAction(g, {}); }

  AutAction(FinAbGroup group, std::vector<IntMatrix> generators)
      : group_(std::move(group)), gens_(std::move(generators)) {
    const std::size_t k = group_.rank();
    const std::vector<Integer>& f = group_.invariant_factors();
    for (const IntMatrix& m : gens_) {
      if (m.rows() != k || m.cols() != k)
        throw std::invalid_argument(
            "AutAction: generator size does not match the group rank");
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < k; ++i)
          if ((f[j] * m(i, j)) % f[i] != 0)
            throw std::invalid_argument(
                "AutAction: generator does not descend to the group");
      // Surjective endomorphism of a finite group is bijective; surjectivity
      // means the columns of m together with the relations span Z^k.
      if (k > 0) {
        IntMatrix wide = hconcat(m, IntMatrix::diagonal(f));
        SmithDecomposition d = smith_normal_form(wide);
        std::vector<Integer> inv = d.invariant_factors();
        bool unit = inv.size() == k;
        for (const Integer& x : inv) unit = unit && (x == 1);
        if (!unit)
          throw std::invalid_argument(
              "AutAction: generator is not invertible on the group");
      }
    }
  }

  const FinAbGroup& group() const { return group_; }
  std::size_t size() const { return gens_.size(); }
  const IntMatrix& generator(std::size_t i) const { return gens_.at(i); }

  GroupElement apply(std::size_t gen, const GroupElement& e) const {
    if (e.group() != group_)
      throw std::invalid_argument("AutAction::apply: group mismatch");
    const IntMatrix& m = gens_.at(gen);
    const std::size_t k = group_.rank();
    std::vector<Integer> out(k, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) out[i] += m(i, j) * e.coords()[j];
    return GroupElement(group_, std::move(out));
  }

  BundleClass apply(std::size_t gen, const BundleClass& c) const {
    std::vector<GroupElement> comps;
    comps.reserve(c.n());
    for (const GroupElement& e : c.components())
      comps.push_back(apply(gen, e));
    return BundleClass(c.group(), std::move(comps));
  }

 private:
  FinAbGroup group_;
  std::vector<IntMatrix> gens_;
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t explored, std::uint64_t budget)
      : std::runtime_error("state budget exceeded after exploring " +
                           std::to_string(explored) + " of at most " +
                           std::to_string(budget) + " states"),
        explored_(explored),
        budget_(budget) {}
  std::uint64_t explored() const { return explored_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t explored_, budget_;
};

inline constexpr std::uint64_t kDefaultStateBudget = 5'000'000;

struct OrbitVerdict {
  enum class Kind { equivalent, distinct };
  Kind kind;
  // Present iff equivalent: c2 == word(act(witness, c1)), where the
  // automorphism word is applied after the matrix, outermost index first.
  std::optional<UnimodularMatrix> witness;
  std::vector<std::size_t> witness_aut_word;
  // Present (nonzero) iff distinct: full size of the orbit of c1.
  std::uint64_t orbit_size = 0;
  std::uint64_t states_explored = 0;

  bool equivalent() const { return kind == Kind::equivalent; }
};

inline bool verify_orbit_witness(const BundleClass& c1, const BundleClass& c2,
                                 const UnimodularMatrix& m,
                                 const AutAction& aut,
                                 const std::vector<std::size_t>& aut_word) {
  if (m.size() != c1.n() || c1.n() != c2.n() || c1.group() != c2.group())
    return false;
  BundleClass state = act(m, c1);
  for (std::size_t i = aut_word.size(); i-- > 0;)
    state = aut.apply(aut_word[i], state);
  return state == c2;
}

namespace detail {

// The whole state space |G|^n must fit in the budget before a search
// starts; exhaustion during the search is still reported exactly.
inline void check_state_capacity(const FinAbGroup& g, std::size_t n,
                                 std::uint64_t budget) {
  Integer capacity = 1;
  for (std::size_t i = 0; i < n; ++i) {
    capacity *= g.order();
    if (capacity > Integer(budget)) throw BudgetExceeded(0, budget);
  }
}

struct OrbitGenerator {
  enum class Kind { add, sub, swap_comps, negate_first, automorphism };
  Kind kind;
  std::size_t i = 0, j = 0;  // component indices for add/sub/swap
  std::size_t aut_index = 0;
};

// Fixed, documented generator order: transvections with +1 (row-major over
// i != j), transvections with -1, component swaps (i < j), negation of the
// first component, then the automorphism generators in their given order.
inline std::vector<OrbitGenerator> orbit_generator_list(std::size_t n,
                                                        std::size_t auts) {
  std::vector<OrbitGenerator> g;
  using K = OrbitGenerator::Kind;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) g.push_back({K::add, i, j, 0});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) g.push_back({K::sub, i, j, 0});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.push_back({K::swap_comps, i, j, 0});
  g.push_back({K::negate_first, 0, 0, 0});
  for (std::size_t a = 0; a < auts; ++a)
    g.push_back({K::automorphism, 0, 0, a});
  return g;
}

inline UnimodularMatrix generator_matrix(const OrbitGenerator& g,
                                         std::size_t n) {
  using K = OrbitGenerator::Kind;
  IntMatrix m = IntMatrix::identity(n);
  switch (g.kind) {
    case K::add:
      m(g.i, g.j) = 1;
      break;
    case K::sub:
      m(g.i, g.j) = -1;
      break;
    case K::swap_comps:
      m(g.i, g.i) = 0;
      m(g.j, g.j) = 0;
      m(g.i, g.j) = 1;
      m(g.j, g.i) = 1;
      break;
    case K::negate_first:
      m(0, 0) = -1;
      break;
    case K::automorphism:
      throw std::logic_error("generator_matrix: automorphism has no matrix");
  }
  return UnimodularMatrix(m);
}

// States are flattened coordinate vectors, component-major.
inline void apply_generator(std::vector<Integer>& flat,
                            const OrbitGenerator& g, const FinAbGroup& group,
                            std::size_t n, const AutAction& aut) {
  using K = OrbitGenerator::Kind;
  const std::size_t k = group.rank();
  const std::vector<Integer>& f = group.invariant_factors();
  switch (g.kind) {
    case K::add:
      for (std::size_t c = 0; c < k; ++c)
        flat[g.i * k + c] = mod_floor(flat[g.i * k + c] + flat[g.j * k + c],
                                      f[c]);
      break;
    case K::sub:
      for (std::size_t c = 0; c < k; ++c)
        flat[g.i * k + c] = mod_floor(flat[g.i * k + c] - flat[g.j * k + c],
                                      f[c]);
      break;
    case K::swap_comps:
      for (std::size_t c = 0; c < k; ++c)
        std::swap(flat[g.i * k + c], flat[g.j * k + c]);
      break;
    case K::negate_first:
      for (std::size_t c = 0; c < k; ++c)
        flat[c] = mod_floor(-flat[c], f[c]);
      break;
    case K::automorphism: {
      const IntMatrix& m = aut.generator(g.aut_index);
      std::vector<Integer> buf(k);
      for (std::size_t comp = 0; comp < n; ++comp) {
        for (std::size_t i = 0; i < k; ++i) {
          Integer acc = 0;
          for (std::size_t j = 0; j < k; ++j)
            acc += m(i, j) * flat[comp * k + j];
          buf[i] = mod_floor(acc, f[i]);
        }
        for (std::size_t i = 0; i < k; ++i) flat[comp * k + i] = buf[i];
      }
      break;
    }
  }
}

inline std::string state_key(const std::vector<Integer>& flat) {
  std::string s;
  for (const Integer& x : flat) {
    s += x.str();
    s += ',';
  }
  return s;
}

inline BundleClass unflatten(const FinAbGroup& g, std::size_t n,
                             const std::vector<Integer>& flat) {
  const std::size_t k = g.rank();
  std::vector<GroupElement> comps;
  comps.reserve(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<Integer> coords(flat.begin() + c * k,
                                flat.begin() + (c + 1) * k);
    comps.push_back(GroupElement(g, std::move(coords)));
  }
  return BundleClass(g, std::move(comps));
}

struct OrbitSearch {
  // Breadth-first closure of {start} under the generator list. Stops early
  // when `goal` (if any) is reached. Throws BudgetExceeded when the number
  // of visited states passes the budget with work still pending.
  const FinAbGroup& group;
  std::size_t n;
  const AutAction& aut;
  std::uint64_t budget;

  std::vector<std::vector<Integer>> states;              // in discovery order
  std::unordered_map<std::string, std::size_t> index;    // key -> state id
  std::vector<std::pair<std::size_t, std::size_t>> via;  // (parent, gen)
  bool goal_found = false;
  std::size_t goal_id = 0;

  void run(const std::vector<Integer>& start,
           const std::vector<Integer>* goal) {
    const std::vector<OrbitGenerator> gens =
        orbit_generator_list(n, aut.size());
    states.push_back(start);
    index.emplace(state_key(start), 0);
    via.push_back({0, 0});
    if (goal && start == *goal) {
      goal_found = true;
      goal_id = 0;
      return;
    }
    for (std::size_t head = 0; head < states.size(); ++head) {
      for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        std::vector<Integer> next = states[head];
        apply_generator(next, gens[gi], group, n, aut);
        std::string key = state_key(next);
        if (index.count(key)) continue;
        if (states.size() + 1 > budget)
          throw BudgetExceeded(states.size() + 1, budget);
        index.emplace(std::move(key), states.size());
        states.push_back(next);
        via.push_back({head, gi});
        if (goal && next == *goal) {
          goal_found = true;
          goal_id = states.size() - 1;
          return;
        }
      }
    }
  }

  // Generator indices along the path root -> state id.
  std::vector<std::size_t> path_to(std::size_t id) const {
    std::vector<std::size_t> rev;
    while (id != 0) {
      rev.push_back(via[id].second);
      id = via[id].first;
    }
    return std::vector<std::size_t>(rev.rbegin(), rev.rend());
  }
};

}  // namespace detail

// Decides whether c1 and c2 lie in one orbit of GL(n, Z) composed with the
// given automorphism action, by exhaustive breadth-first closure with a
// deterministic generator order. Equivalent verdicts carry a witness that is
// re-verified before returning; distinct verdicts carry the full orbit size.
inline OrbitVerdict orbit_decide(const BundleClass& c1, const BundleClass& c2,
                                 const AutAction& aut,
                                 std::uint64_t budget = kDefaultStateBudget) {
  if (c1.group() != c2.group())
    throw std::invalid_argument("orbit_decide: group mismatch");
  if (c1.n() != c2.n())
    throw std::invalid_argument("orbit_decide: class length mismatch");
  if (aut.group() != c1.group())
    throw std::invalid_argument("orbit_decide: automorphism group mismatch");
  detail::check_state_capacity(c1.group(), c1.n(), budget);

  const std::vector<Integer> start = c1.flatten();
  const std::vector<Integer> goal = c2.flatten();
  detail::OrbitSearch search{c1.group(), c1.n(), aut, budget, {}, {}, {}};
  search.run(start, &goal);

  OrbitVerdict v{};
  v.states_explored = search.states.size();
  if (!search.goal_found) {
    v.kind = OrbitVerdict::Kind::distinct;
    v.orbit_size = search.states.size();
    return v;
  }
  const std::vector<detail::OrbitGenerator> gens =
      detail::orbit_generator_list(c1.n(), aut.size());
  UnimodularMatrix m = UnimodularMatrix::identity(c1.n());
  std::vector<std::size_t> word;
  for (std::size_t gi : search.path_to(search.goal_id)) {
    const detail::OrbitGenerator& g = gens[gi];
    if (g.kind == detail::OrbitGenerator::Kind::automorphism)
      word.push_back(g.aut_index);  // applied after everything so far
    else
      m = detail::generator_matrix(g, c1.n()) * m;
  }
  std::reverse(word.begin(), word.end());  // outermost first
  v.kind = OrbitVerdict::Kind::equivalent;
  v.witness = m;
  v.witness_aut_word = word;
  if (!verify_orbit_witness(c1, c2, m, aut, word))
    throw std::logic_error("orbit_decide: witness failed re-verification");
  return v;
}

// The full orbit of c, sorted lexicographically by flattened coordinates.
inline std::vector<BundleClass> orbit_of(
    const BundleClass& c, const AutAction& aut,
    std::uint64_t budget = kDefaultStateBudget) {
  if (aut.group() != c.group())
    throw std::invalid_argument("orbit_of: automorphism group mismatch");
  detail::check_state_capacity(c.group(), c.n(), budget);
  detail::OrbitSearch search{c.group(), c.n(), aut, budget, {}, {}, {}};
  search.run(c.flatten(), nullptr);
  std::vector<std::vector<Integer>> flats = search.states;
  std::sort(flats.begin(), flats.end());
  std::vector<BundleClass> out;
  out.reserve(flats.size());
  for (const std::vector<Integer>& f : flats)
    out.push_back(detail::unflatten(c.group(), c.n(), f));
  return out;
}

// Explicit unimodular witnesses for the cylinder construction. With
// c2_i = k_i * c1_i and k_i invertible modulo ord(c1_i), the 2n x 2n
// matrices
//   A = [[I, 0], [diag(k), I]]      and      B = [[diag(a), I], [I, 0]]
// (a_i * k_i = 1 mod ord(c1_i)) send pad(c1, n) resp. pad(c2, n) to the
// common class (c1, c2). Both mappings are re-verified before returning.
struct CylinderWitnesses {
  UnimodularMatrix a;
  UnimodularMatrix b;
  std::vector<Integer> multipliers;          // k_i, in [0, ord(c1_i))
  std::vector<Integer> inverse_multipliers;  // a_i, in [0, ord(c1_i))
};

namespace detail {

// Smallest t >= 0 with t * x == y in G, if any: solve the coordinate
// congruences t * x_j == y_j (mod f_j) and merge them by CRT. The merged
// modulus is ord(x).
inline std::optional<Integer> discrete_log_multiple(const GroupElement& x,
                                                    const GroupElement& y) {
  const std::vector<Integer>& f = x.group().invariant_factors();
  Integer t = 0, mod = 1;
  for (std::size_t j = 0; j < f.size(); ++j) {
    const Integer& xj = x.coords()[j];
    const Integer& yj = y.coords()[j];
    Integer gj = gcd_of(xj, f[j]);
    if (gj == 0) gj = f[j];  // xj == 0 and f[j] == 0 cannot happen (f >= 2)
    if (yj % gj != 0) return std::nullopt;
    Integer mj = f[j] / gj;
    if (mj == 1) continue;
    Integer tj = mod_floor((yj / gj) * inv_mod(xj / gj, mj), mj);
    // Merge t == t (mod mod) with t == tj (mod mj).
    Integer d = gcd_of(mod, mj);
    if ((tj - t) % d != 0) return std::nullopt;
    Integer lcm = mod / d * mj;
    Integer step = mod_floor((tj - t) / d * inv_mod(mod / d, mj / d), mj / d);
    t = mod_floor(t + mod * step, lcm);
    mod = lcm;
  }
  return t;
}

}  // namespace detail

inline CylinderWitnesses cylinder_witnesses(const BundleClass& c1,
                                            const BundleClass& c2) {
  if (c1.group() != c2.group())
    throw std::invalid_argument("cylinder_witnesses: group mismatch");
  if (c1.n() != c2.n())
    throw std::invalid_argument("cylinder_witnesses: class length mismatch");
  if (!same_subgroup(c1, c2))
    throw std::invalid_argument(
        "cylinder_witnesses: classes do not generate the same subgroup");
  const std::size_t n = c1.n();
  std::vector<Integer> k(n), a(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<Integer> t =
        detail::discrete_log_multiple(c1.component(i), c2.component(i));
    if (!t)
      throw std::invalid_argument(
          "cylinder_witnesses: component " + std::to_string(i + 1) +
          " of the second class is not a multiple of the first");
    Integer ord = c1.component(i).order();
    if (gcd_of(*t, ord) != 1)
      throw std::invalid_argument(
          "cylinder_witnesses: multiplier for component " +
          std::to_string(i + 1) + " is not invertible modulo the order");
    k[i] = *t;
    a[i] = inv_mod(*t, ord);
  }

  IntMatrix am(2 * n, 2 * n), bm(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    am(i, i) = 1;
    am(n + i, i) = k[i];
    am(n + i, n + i) = 1;
    bm(i, i) = a[i];
    bm(i, n + i) = 1;
    bm(n + i, i) = 1;
  }
  CylinderWitnesses w{UnimodularMatrix(am), UnimodularMatrix(bm), k, a};

  const BundleClass target = joint_class(c1, c2);
  if (act(w.a, pad(c1, n)) != target || act(w.b, pad(c2, n)) != target)
    throw std::logic_error("cylinder_witnesses: witness verification failed");
  return w;
}

// Exhaustively enumerates G^n, partitions it into orbits of GL(n, Z)
// composed with aut, and returns every unordered pair of distinct orbits
// whose members generate the same subgroup of G. Orbits are represented by
// their lexicographically least member; the pair list is sorted.
inline std::vector<std::pair<BundleClass, BundleClass>> counterexample_search(
    const FinAbGroup& g, std::size_t n, const AutAction& aut,
    std::uint64_t budget = kDefaultStateBudget) {
  if (n == 0)
    throw std::invalid_argument("counterexample_search: n must be >= 1");
  if (aut.group() != g)
    throw std::invalid_argument(
        "counterexample_search: automorphism group mismatch");
  detail::check_state_capacity(g, n, budget);

  const std::size_t k = g.rank();
  std::vector<Integer> moduli;
  for (std::size_t c = 0; c < n; ++c)
    for (const Integer& f : g.invariant_factors()) moduli.push_back(f);

  std::unordered_map<std::string, char> visited;
  // Representatives bucketed by the canonical subgroup basis they generate.
  std::map<std::string, std::vector<std::vector<Integer>>> buckets;

  std::vector<Integer> state(moduli.size(), 0);
  for (;;) {
    std::string key = detail::state_key(state);
    if (!visited.count(key)) {
      detail::OrbitSearch search{g, n, aut, budget, {}, {}, {}};
      search.run(state, nullptr);
      for (const std::vector<Integer>& s : search.states)
        visited.emplace(detail::state_key(s), 1);
      BundleClass rep = detail::unflatten(g, n, state);
      buckets[class_subgroup(rep).basis_hnf().to_string()].push_back(state);
    }
    // Odometer step, rightmost digit fastest (lexicographic enumeration).
    bool wrapped = moduli.empty();
    if (!wrapped) {
      std::size_t pos = moduli.size() - 1;
      for (;;) {
        state[pos] += 1;
        if (state[pos] < moduli[pos]) break;
        state[pos] = 0;
        if (pos == 0) {
          wrapped = true;
          break;
        }
        --pos;
      }
    }
    if (wrapped) break;
  }

  std::vector<std::pair<std::vector<Integer>, std::vector<Integer>>> flat;
  for (const auto& [canon, reps] : buckets)
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j)
        flat.push_back({reps[i], reps[j]});
  std::sort(flat.begin(), flat.end());
  std::vector<std::pair<BundleClass, BundleClass>> out;
  out.reserve(flat.size());
  for (const auto& [f1, f2] : flat)
    out.push_back({detail::unflatten(g, n, f1), detail::unflatten(g, n, f2)});
  return out;
}

}  // namespace torcan
