#include "hurwitz/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "hurwitz/errors.hpp"

namespace hurwitz {
namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent_[static_cast<std::size_t>(x)] = y;
    return true;
  }
  int components() {
    int c = 0;
    for (int i = 0; i < static_cast<int>(parent_.size()); ++i) c += find(i) == i;
    return c;
  }

 private:
  std::vector<int> parent_;
};

std::vector<int> cycle_lengths(const std::vector<int>& perm) {
  std::vector<int> lens;
  std::vector<char> seen(perm.size(), 0);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = 1;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end(), std::greater<>());
  return lens;
}

// Checks shared by both cover oracles; returns m.
long check_cover_input(int a, int g, const MuTuple& mu, const OracleLimits& limits) {
  require(a >= 1 && g >= 0, "a must be positive and genus non-negative");
  require(!mu.empty() && mu.all_positive(), "ramification tuple must be non-empty with positive parts");
  const auto m = branch_count(a, g, mu);
  require(m.has_value(), "a must divide |mu|");
  require(*m >= 0, "negative number of simple branch points");
  if (mu.sum() > limits.max_degree)
    fail(ErrorKind::LimitExceeded, "degree " + std::to_string(mu.sum()) + " exceeds oracle limit");
  if (*m > limits.max_transpositions)
    fail(ErrorKind::LimitExceeded, "m = " + std::to_string(*m) + " exceeds oracle limit");
  return *m;
}

// Depth-first search over transposition sequences with the running product
// P = sigma_0 tau_1 ... tau_t. Right multiplication by (i j) swaps P[i], P[j]
// and changes the cycle count by exactly one.
class CoverSearch {
 public:
  CoverSearch(int a, int m, const MuTuple& mu) : a_(a), m_(m), target_(mu.sorted().parts()) {
    const int d = mu.sum();
    perm_.resize(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) perm_[static_cast<std::size_t>(i)] = (i % a == a - 1) ? i - a + 1 : i + 1;
  }

  long run() {
    dfs(0, static_cast<int>(perm_.size()) / a_);
    return count_;
  }

 private:
  bool same_cycle(int i, int j) const {
    for (int x = perm_[static_cast<std::size_t>(i)]; x != i; x = perm_[static_cast<std::size_t>(x)])
      if (x == j) return true;
    return false;
  }

  bool transitive() const {
    const int d = static_cast<int>(perm_.size());
    UnionFind uf(d);
    for (int i = 0; i < d; ++i)
      if (i % a_ != 0) uf.unite(i, i - 1);
    for (const auto& [i, j] : taus_) uf.unite(i, j);
    return uf.components() == 1;
  }

  void dfs(int depth, int cycles) {
    const int remaining = m_ - depth;
    const int target_cycles = static_cast<int>(target_.size());
    if (std::abs(cycles - target_cycles) > remaining) return;
    if (remaining == 0) {
      if (cycle_lengths(perm_) == target_ && transitive()) ++count_;
      return;
    }
    const int d = static_cast<int>(perm_.size());
    for (int i = 0; i < d; ++i) {
      for (int j = i + 1; j < d; ++j) {
        const int next = same_cycle(i, j) ? cycles + 1 : cycles - 1;
        std::swap(perm_[static_cast<std::size_t>(i)], perm_[static_cast<std::size_t>(j)]);
        taus_.emplace_back(i, j);
        dfs(depth + 1, next);
        taus_.pop_back();
        std::swap(perm_[static_cast<std::size_t>(i)], perm_[static_cast<std::size_t>(j)]);
      }
    }
  }

  int a_, m_;
  std::vector<int> target_;
  std::vector<int> perm_;
  std::vector<std::pair<int, int>> taus_;
  long count_ = 0;
};

// Fatgraph enumeration. Half-edge h = v*(a*m) + p sits at vertex v, position p,
// and carries label p mod m; sigma_0 advances p cyclically.
class FatgraphSearch {
 public:
  FatgraphSearch(int a, int m, const MuTuple& mu)
      : a_(a), m_(m), k_(mu.sum() / a), am_(a * m), mu_(mu.parts()) {
    const int x = k_ * am_;
    sigma0_.resize(static_cast<std::size_t>(x));
    by_label_.resize(static_cast<std::size_t>(m));
    for (int h = 0; h < x; ++h) {
      const int v = h / am_, p = h % am_;
      sigma0_[static_cast<std::size_t>(h)] = v * am_ + (p + 1) % am_;
      by_label_[static_cast<std::size_t>(p % m)].push_back(h);
    }
    sigma1_.resize(static_cast<std::size_t>(x));
    std::iota(sigma1_.begin(), sigma1_.end(), 0);
    build_relabellings();
  }

  Rational run() {
    choose_edge(0);
    Rational total(0);
    for (const auto& [key, aut] : classes_) total += make_rational(1, aut);
    return total;
  }

 private:
  // Every bijection commuting with sigma_0 and preserving half-edge labels:
  // permute the vertices and rotate each by a multiple of m.
  void build_relabellings() {
    const int x = k_ * am_;
    std::vector<int> pi(static_cast<std::size_t>(k_));
    std::iota(pi.begin(), pi.end(), 0);
    do {
      std::vector<int> shift(static_cast<std::size_t>(k_), 0);
      while (true) {
        std::vector<int> phi(static_cast<std::size_t>(x));
        for (int h = 0; h < x; ++h) {
          const int v = h / am_, p = h % am_;
          phi[static_cast<std::size_t>(h)] =
              pi[static_cast<std::size_t>(v)] * am_ + (p + m_ * shift[static_cast<std::size_t>(v)]) % am_;
        }
        relabellings_.push_back(std::move(phi));
        int i = 0;
        while (i < k_ && ++shift[static_cast<std::size_t>(i)] == a_) shift[static_cast<std::size_t>(i++)] = 0;
        if (i == k_) break;
      }
    } while (std::next_permutation(pi.begin(), pi.end()));
  }

  void choose_edge(int label) {
    if (label == m_) {
      examine();
      return;
    }
    const auto& hs = by_label_[static_cast<std::size_t>(label)];
    for (std::size_t i = 0; i < hs.size(); ++i) {
      for (std::size_t j = i + 1; j < hs.size(); ++j) {
        sigma1_[static_cast<std::size_t>(hs[i])] = hs[j];
        sigma1_[static_cast<std::size_t>(hs[j])] = hs[i];
        choose_edge(label + 1);
        sigma1_[static_cast<std::size_t>(hs[i])] = hs[i];
        sigma1_[static_cast<std::size_t>(hs[j])] = hs[j];
      }
    }
  }

  void examine() {
    const int x = k_ * am_;
    UnionFind uf(x);
    for (int h = 0; h < x; ++h) {
      uf.unite(h, sigma0_[static_cast<std::size_t>(h)]);
      uf.unite(h, sigma1_[static_cast<std::size_t>(h)]);
    }
    if (uf.components() != 1) return;

    // Faces are the cycles of sigma_2 = sigma_0 sigma_1.
    std::vector<int> face_of(static_cast<std::size_t>(x), -1);
    std::vector<int> perimeter;
    for (int h = 0; h < x; ++h) {
      if (face_of[static_cast<std::size_t>(h)] >= 0) continue;
      const int f = static_cast<int>(perimeter.size());
      int len = 0;
      for (int y = h; face_of[static_cast<std::size_t>(y)] < 0;
           y = sigma0_[static_cast<std::size_t>(sigma1_[static_cast<std::size_t>(y)])]) {
        face_of[static_cast<std::size_t>(y)] = f;
        ++len;
      }
      perimeter.push_back(len);
    }
    const int n = static_cast<int>(mu_.size());
    if (static_cast<int>(perimeter.size()) != n) return;

    // Face labellings: face f receives label lab[f] with perimeter mu[lab[f]] m.
    std::vector<int> lab(static_cast<std::size_t>(n));
    std::iota(lab.begin(), lab.end(), 0);
    do {
      bool ok = true;
      for (int f = 0; f < n && ok; ++f)
        ok = perimeter[static_cast<std::size_t>(f)] == mu_[static_cast<std::size_t>(lab[static_cast<std::size_t>(f)])] * m_;
      if (!ok) continue;
      std::vector<int> face_label(static_cast<std::size_t>(x));
      for (int h = 0; h < x; ++h)
        face_label[static_cast<std::size_t>(h)] = lab[static_cast<std::size_t>(face_of[static_cast<std::size_t>(h)])];
      record(face_label);
    } while (std::next_permutation(lab.begin(), lab.end()));
  }

  std::vector<int> transformed(const std::vector<int>& phi, const std::vector<int>& face_label) const {
    const std::size_t x = sigma1_.size();
    std::vector<int> key(2 * x);
    for (std::size_t h = 0; h < x; ++h) {
      const auto ph = static_cast<std::size_t>(phi[h]);
      key[ph] = phi[static_cast<std::size_t>(sigma1_[h])];
      key[x + ph] = face_label[h];
    }
    return key;
  }

  void record(const std::vector<int>& face_label) {
    std::vector<int> original(sigma1_);
    original.insert(original.end(), face_label.begin(), face_label.end());
    std::vector<int> best = original;
    long aut = 0;
    for (const auto& phi : relabellings_) {
      std::vector<int> key = transformed(phi, face_label);
      if (key == original) ++aut;
      if (key < best) best = std::move(key);
    }
    classes_.emplace(std::move(best), aut);
  }

  int a_, m_, k_, am_;
  std::vector<int> mu_;
  std::vector<int> sigma0_, sigma1_;
  std::vector<std::vector<int>> by_label_;
  std::vector<std::vector<int>> relabellings_;
  std::map<std::vector<int>, long> classes_;
};

// ---- cactus-node trees ----

// A node is a directed cycle written from some starting point, or a single
// point. A tree is its node set plus branches between points of distinct nodes.
using Node = std::vector<int>;

struct CactusTree {
  std::vector<Node> nodes;                     // each rotated to start at its minimum
  std::vector<std::pair<int, int>> branches;   // sorted pairs, sorted list
  friend auto operator<=>(const CactusTree&, const CactusTree&) = default;
};

Node rotated_to(const Node& node, int start) {
  const auto it = std::find(node.begin(), node.end(), start);
  Node out(it, node.end());
  out.insert(out.end(), node.begin(), it);
  return out;
}

Node unrooted(const Node& node) { return rotated_to(node, *std::min_element(node.begin(), node.end())); }

CactusTree make_tree(const std::vector<Node>& nodes, std::vector<std::pair<int, int>> branches) {
  CactusTree t;
  for (const auto& node : nodes) t.nodes.push_back(unrooted(node));
  std::sort(t.nodes.begin(), t.nodes.end());
  for (auto& [p, q] : branches)
    if (p > q) std::swap(p, q);
  std::sort(branches.begin(), branches.end());
  t.branches = std::move(branches);
  return t;
}

// Branches must join distinct nodes and connect them into a tree.
bool is_tree(const CactusTree& t, int d) {
  std::vector<int> node_of(static_cast<std::size_t>(d), -1);
  for (std::size_t i = 0; i < t.nodes.size(); ++i)
    for (int p : t.nodes[i]) node_of[static_cast<std::size_t>(p)] = static_cast<int>(i);
  if (t.branches.size() + 1 != t.nodes.size()) return false;
  UnionFind uf(static_cast<int>(t.nodes.size()));
  for (const auto& [p, q] : t.branches)
    if (!uf.unite(node_of[static_cast<std::size_t>(p)], node_of[static_cast<std::size_t>(q)])) return false;
  return true;
}

void check_cactus_input(const MuTuple& nu, int d_limit) {
  require(!nu.empty() && nu.all_positive(), "cactus type must be a non-empty tuple of positive parts");
  if (nu.sum() > d_limit) fail(ErrorKind::LimitExceeded, "cactus degree exceeds limit");
}

// Calls visit(nodes) for every choice of disjoint node supports of sizes nu
// (non-increasing), up to reordering equal sizes; `arrange` lists the
// orderings of a support to emit.
void for_each_node_set(const std::vector<int>& nu, int d,
                       const std::function<std::vector<Node>(const Node&)>& arrange,
                       const std::function<void(const std::vector<Node>&)>& visit) {
  std::vector<Node> chosen;
  std::vector<char> used(static_cast<std::size_t>(d), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int prev_min) {
    if (idx == nu.size()) {
      visit(chosen);
      return;
    }
    const int size = nu[idx];
    const bool tied = idx > 0 && nu[idx] == nu[idx - 1];
    Node support;
    std::function<void(int)> pick = [&](int from) {
      if (static_cast<int>(support.size()) == size) {
        if (tied && support.front() <= prev_min) return;
        for (int p : support) used[static_cast<std::size_t>(p)] = 1;
        for (auto& ordering : arrange(support)) {
          chosen.push_back(std::move(ordering));
          rec(idx + 1, support.front());
          chosen.pop_back();
        }
        for (int p : support) used[static_cast<std::size_t>(p)] = 0;
        return;
      }
      for (int p = from; p < d; ++p) {
        if (used[static_cast<std::size_t>(p)]) continue;
        support.push_back(p);
        pick(p + 1);
        support.pop_back();
      }
    };
    pick(0);
  };
  rec(0, -1);
}

std::vector<Node> all_orderings(const Node& support) {
  std::vector<Node> out;
  Node s = support;
  do out.push_back(s);
  while (std::next_permutation(s.begin(), s.end()));
  return out;
}

std::vector<Node> cycles_from_min(const Node& support) {
  std::vector<Node> out;
  Node rest(support.begin() + 1, support.end());
  do {
    Node c{support.front()};
    c.insert(c.end(), rest.begin(), rest.end());
    out.push_back(std::move(c));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

int max_point(const Node& node) { return *std::max_element(node.begin(), node.end()); }

bool contains(const Node& node, int p) { return std::find(node.begin(), node.end(), p) != node.end(); }

// Decoding: repeatedly attach the root of the largest-labelled element that
// no longer occurs in the code to the point named by the next code entry.
std::vector<std::pair<int, int>> decode(const std::vector<Node>& rooted, const std::vector<int>& code) {
  std::vector<std::size_t> alive(rooted.size());
  std::iota(alive.begin(), alive.end(), std::size_t{0});
  std::vector<std::pair<int, int>> branches;
  for (std::size_t t = 0; t < code.size(); ++t) {
    std::ptrdiff_t leaf = -1;
    for (std::size_t i = 0; i < alive.size(); ++i) {
      const Node& node = rooted[alive[i]];
      bool referenced = false;
      for (std::size_t u = t; u < code.size() && !referenced; ++u) referenced = contains(node, code[u]);
      if (referenced) continue;
      if (leaf < 0 || max_point(node) > max_point(rooted[alive[static_cast<std::size_t>(leaf)]]))
        leaf = static_cast<std::ptrdiff_t>(i);
    }
    if (leaf < 0) return {};
    branches.emplace_back(rooted[alive[static_cast<std::size_t>(leaf)]].front(), code[t]);
    alive.erase(alive.begin() + leaf);
  }
  if (alive.size() == 2) branches.emplace_back(rooted[alive[0]].front(), rooted[alive[1]].front());
  return branches;
}

// Inverse of decode: strip the largest-labelled leaf node, recording where it
// hangs, until two nodes remain. Returns the rooted nodes (sorted) and code.
std::pair<std::vector<Node>, std::vector<int>> encode(const CactusTree& t, int d) {
  const std::size_t l = t.nodes.size();
  std::vector<int> node_of(static_cast<std::size_t>(d));
  for (std::size_t i = 0; i < l; ++i)
    for (int p : t.nodes[i]) node_of[static_cast<std::size_t>(p)] = static_cast<int>(i);
  std::vector<char> alive(l, 1), branch_alive(t.branches.size(), 1);
  std::vector<int> root(l, -1);
  std::vector<int> code;
  auto degree = [&](std::size_t i) {
    int deg = 0;
    for (std::size_t b = 0; b < t.branches.size(); ++b)
      if (branch_alive[b] && (node_of[static_cast<std::size_t>(t.branches[b].first)] == static_cast<int>(i) ||
                              node_of[static_cast<std::size_t>(t.branches[b].second)] == static_cast<int>(i)))
        ++deg;
    return deg;
  };
  for (std::size_t left = l; left > 2; --left) {
    std::ptrdiff_t leaf = -1;
    for (std::size_t i = 0; i < l; ++i)
      if (alive[i] && degree(i) == 1 && (leaf < 0 || max_point(t.nodes[i]) > max_point(t.nodes[static_cast<std::size_t>(leaf)])))
        leaf = static_cast<std::ptrdiff_t>(i);
    for (std::size_t b = 0; b < t.branches.size(); ++b) {
      if (!branch_alive[b]) continue;
      auto [p, q] = t.branches[b];
      if (node_of[static_cast<std::size_t>(q)] == leaf) std::swap(p, q);
      if (node_of[static_cast<std::size_t>(p)] != leaf) continue;
      root[static_cast<std::size_t>(leaf)] = p;
      code.push_back(q);
      branch_alive[b] = 0;
      break;
    }
    alive[static_cast<std::size_t>(leaf)] = 0;
  }
  for (std::size_t b = 0; b < t.branches.size(); ++b) {
    if (!branch_alive[b]) continue;
    const auto [p, q] = t.branches[b];
    root[static_cast<std::size_t>(node_of[static_cast<std::size_t>(p)])] = p;
    root[static_cast<std::size_t>(node_of[static_cast<std::size_t>(q)])] = q;
  }
  std::vector<Node> rooted;
  for (std::size_t i = 0; i < l; ++i) rooted.push_back(rotated_to(t.nodes[i], root[i]));
  std::sort(rooted.begin(), rooted.end());
  return {std::move(rooted), std::move(code)};
}

}  // namespace

Rational count_connected_covers(int a, int g, const MuTuple& mu, const OracleLimits& limits) {
  const long m = check_cover_input(a, g, mu, limits);
  const int k = mu.sum() / a;
  const long fixed = CoverSearch(a, static_cast<int>(m), mu).run();
  return Rational(fixed) / (Rational(factorial(static_cast<unsigned long>(k))) * pow(Rational(a), k));
}

Rational count_fatgraphs(int a, int g, const MuTuple& mu, const OracleLimits& limits) {
  require(a >= 1 && g >= 0, "a must be positive and genus non-negative");
  require(!mu.empty() && mu.all_positive(), "ramification tuple must be non-empty with positive parts");
  if (mu.sum() % a != 0) return Rational(0);
  const long m = check_cover_input(a, g, mu, limits);
  require(m >= 1, "the fatgraph model needs at least one simple branch point");
  return FatgraphSearch(a, static_cast<int>(m), mu).run();
}

Integer count_cactus_trees_bruteforce(const MuTuple& nu, int d_limit) {
  check_cactus_input(nu, d_limit);
  const int d = nu.sum();
  const std::vector<int> parts = nu.sorted().parts();
  const std::size_t l = parts.size();
  std::set<CactusTree> trees;
  for_each_node_set(parts, d, all_orderings, [&](const std::vector<Node>& rooted) {
    if (l == 1) {
      trees.insert(make_tree(rooted, {}));
      return;
    }
    std::vector<Node> sorted_rooted = rooted;
    std::sort(sorted_rooted.begin(), sorted_rooted.end());
    std::vector<int> code(l - 2, 0);
    while (true) {
      auto branches = decode(rooted, code);
      CactusTree t = make_tree(rooted, std::move(branches));
      if (is_tree(t, d)) {
        const auto [back_nodes, back_code] = encode(t, d);
        if (back_nodes == sorted_rooted && back_code == code) trees.insert(std::move(t));
      }
      std::size_t i = 0;
      while (i < code.size() && ++code[i] == d) code[i++] = 0;
      if (i == code.size()) break;
    }
  });
  return Integer(static_cast<unsigned long>(trees.size()));
}

Integer count_cactus_trees_direct(const MuTuple& nu, int d_limit) {
  check_cactus_input(nu, d_limit);
  const int d = nu.sum();
  const std::vector<int> parts = nu.sorted().parts();
  const std::size_t need = parts.size() - 1;
  Integer total = 0;
  for_each_node_set(parts, d, cycles_from_min, [&](const std::vector<Node>& nodes) {
    std::vector<int> node_of(static_cast<std::size_t>(d));
    for (std::size_t i = 0; i < nodes.size(); ++i)
      for (int p : nodes[i]) node_of[static_cast<std::size_t>(p)] = static_cast<int>(i);
    std::vector<std::pair<int, int>> candidates;
    for (int p = 0; p < d; ++p)
      for (int q = p + 1; q < d; ++q)
        if (node_of[static_cast<std::size_t>(p)] != node_of[static_cast<std::size_t>(q)]) candidates.emplace_back(p, q);
    std::vector<std::pair<int, int>> picked;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
      if (picked.size() == need) {
        UnionFind uf(static_cast<int>(nodes.size()));
        for (const auto& [p, q] : picked)
          if (!uf.unite(node_of[static_cast<std::size_t>(p)], node_of[static_cast<std::size_t>(q)])) return;
        total += 1;
        return;
      }
      for (std::size_t c = from; c < candidates.size(); ++c) {
        picked.push_back(candidates[c]);
        rec(c + 1);
        picked.pop_back();
      }
    };
    rec(0);
  });
  return total;
}

Rational cactus_formula(const MuTuple& nu) {
  require(!nu.empty() && nu.all_positive(), "cactus type must be a non-empty tuple of positive parts");
  const long d = nu.sum();
  const long l = static_cast<long>(nu.size());
  return Rational(factorial(static_cast<unsigned long>(d))) / Rational(nu.aut_order()) * pow(Rational(d), l - 2);
}

}  // namespace hurwitz
