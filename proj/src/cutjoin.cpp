#include "hurwitz/cutjoin.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <unordered_map>

#include "hurwitz/errors.hpp"

namespace hurwitz {
namespace {

struct KeyHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL ^ v.size();
    for (int x : v) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
    return h;
  }
};

// Key layout: a, g, parts (non-increasing). Readers share the lock; two
// threads may compute the same entry, and the first insertion wins.
class Memo {
 public:
  bool find(const std::vector<int>& key, Rational& out) const {
    std::shared_lock lock(mutex_);
    const auto it = table_.find(key);
    if (it == table_.end()) return false;
    out = it->second;
    return true;
  }
  void insert(std::vector<int> key, const Rational& value) {
    std::unique_lock lock(mutex_);
    table_.emplace(std::move(key), value);
  }
  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }
  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::vector<int>, Rational, KeyHash> table_;
};

Memo& memo() {
  static Memo instance;
  return instance;
}

long simple_points(int a, int g, int n, int total) { return 2L * g - 2 + n + total / a; }

Rational lookup(int a, int g, std::vector<int> parts);

Rational compute(int a, int g, const std::vector<int>& parts) {
  const int n = static_cast<int>(parts.size());
  const int d = std::accumulate(parts.begin(), parts.end(), 0);
  const long m = simple_points(a, g, n, d);

  Rational acc(0);
  std::vector<int> buf;
  buf.reserve(static_cast<std::size_t>(n) + 2);

  // Cut: two parts merge.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      buf.clear();
      for (int k = 0; k < n; ++k)
        if (k != i && k != j) buf.push_back(parts[static_cast<std::size_t>(k)]);
      const int merged = parts[static_cast<std::size_t>(i)] + parts[static_cast<std::size_t>(j)];
      buf.push_back(merged);
      const Rational h = lookup(a, g, buf);
      if (h != 0) acc += h * merged;
    }
  }

  // Join: one part splits as alpha + beta, either lowering the genus or
  // disconnecting the cover into two pieces. Pieces are ordered pairs, which
  // the overall factor 1/2 compensates for.
  for (int i = 0; i < n; ++i) {
    std::vector<int> rest;
    for (int k = 0; k < n; ++k)
      if (k != i) rest.push_back(parts[static_cast<std::size_t>(k)]);
    const int r = n - 1;
    const int mu_i = parts[static_cast<std::size_t>(i)];
    for (int alpha = 1; alpha < mu_i; ++alpha) {
      const int beta = mu_i - alpha;
      Rational inner(0);
      if (g >= 1) {
        buf = rest;
        buf.push_back(alpha);
        buf.push_back(beta);
        inner += lookup(a, g - 1, buf);
      }
      for (unsigned mask = 0; mask < (1u << r); ++mask) {
        int sum_i = alpha, cnt_i = 1;
        for (int k = 0; k < r; ++k)
          if (mask & (1u << k)) {
            sum_i += rest[static_cast<std::size_t>(k)];
            ++cnt_i;
          }
        if (sum_i % a != 0) continue;
        const int sum_j = d - sum_i;
        const int cnt_j = n + 1 - cnt_i;
        for (int g1 = 0; g1 <= g; ++g1) {
          const int g2 = g - g1;
          if (simple_points(a, g1, cnt_i, sum_i) < 0 || simple_points(a, g2, cnt_j, sum_j) < 0) continue;
          std::vector<int> left{alpha}, right{beta};
          for (int k = 0; k < r; ++k)
            ((mask & (1u << k)) ? left : right).push_back(rest[static_cast<std::size_t>(k)]);
          const Rational h1 = lookup(a, g1, std::move(left));
          if (h1 == 0) continue;
          inner += h1 * lookup(a, g2, std::move(right));
        }
      }
      if (inner != 0) acc += make_rational(static_cast<long>(alpha) * beta, 2) * inner;
    }
  }
  return acc / Rational(m);
}

Rational lookup(int a, int g, std::vector<int> parts) {
  if (g < 0) return Rational(0);
  const int n = static_cast<int>(parts.size());
  const int d = std::accumulate(parts.begin(), parts.end(), 0);
  if (d % a != 0) return Rational(0);
  const long m = simple_points(a, g, n, d);
  if (m < 0) return Rational(0);
  if (m == 0) return (g == 0 && n == 1 && parts[0] == a) ? make_rational(1, a) : Rational(0);

  std::sort(parts.begin(), parts.end(), std::greater<>());
  std::vector<int> key;
  key.reserve(parts.size() + 2);
  key.push_back(a);
  key.push_back(g);
  key.insert(key.end(), parts.begin(), parts.end());

  Rational value;
  if (memo().find(key, value)) return value;
  value = compute(a, g, parts);
  memo().insert(std::move(key), value);
  return value;
}

void validate(int a, int g, const MuTuple& mu) {
  require(a >= 1, "a must be a positive integer");
  require(g >= 0, "genus must be non-negative");
  require(!mu.empty(), "ramification tuple must be non-empty");
  require(mu.all_positive(), "ramification parts must be positive");
}

}  // namespace

Rational hurwitz_normalized(int a, int g, const MuTuple& mu) {
  validate(a, g, mu);
  return lookup(a, g, mu.parts());
}

Rational hurwitz_raw(int a, int g, const MuTuple& mu) {
  const Rational h = hurwitz_normalized(a, g, mu);
  if (h == 0) return h;
  const long m = *branch_count(a, g, mu);
  return h * Rational(factorial(static_cast<unsigned long>(m))) / Rational(mu.aut_order());
}

std::map<MuTuple, Rational> series_coefficients(int a, int g, int n, int mu_max) {
  require(n >= 1, "number of points must be positive");
  require(mu_max >= 1, "mu_max must be positive");
  require(a >= 1 && g >= 0, "a must be positive and genus non-negative");
  std::map<MuTuple, Rational> out;
  for (auto& mu : ordered_tuples(n, mu_max)) {
    Rational h = hurwitz_normalized(a, g, mu);
    out.emplace(std::move(mu), std::move(h));
  }
  return out;
}

std::size_t cutjoin_cache_size() { return memo().size(); }
void cutjoin_clear_cache() { memo().clear(); }

}  // namespace hurwitz
