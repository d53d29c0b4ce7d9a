#include "hurwitz/mu_tuple.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <numeric>

#include "hurwitz/errors.hpp"

namespace hurwitz {

MuTuple MuTuple::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string_view tok = text.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size() || value < 1)
      fail(ErrorKind::InvalidInput, "bad ramification tuple '" + std::string(text) + "'");
    parts.push_back(value);
    pos = comma + 1;
  }
  return MuTuple(std::move(parts));
}

int MuTuple::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool MuTuple::all_positive() const {
  return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p >= 1; });
}

MuTuple MuTuple::sorted() const {
  std::vector<int> p = parts_;
  std::sort(p.begin(), p.end(), std::greater<>());
  return MuTuple(std::move(p));
}

Integer MuTuple::aut_order() const {
  std::map<int, unsigned long> mult;
  for (int p : parts_) ++mult[p];
  Integer r = 1;
  for (const auto& [part, k] : mult) r *= factorial(k);
  return r;
}

std::string MuTuple::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

std::optional<long> branch_count(int a, int g, const MuTuple& mu) {
  const int d = mu.sum();
  if (a < 1 || d % a != 0) return std::nullopt;
  return 2L * g - 2 + static_cast<long>(mu.size()) + d / a;
}

std::vector<MuTuple> ordered_tuples(int n, int max_part) {
  std::vector<MuTuple> out;
  if (n < 1 || max_part < 1) return out;
  std::vector<int> cur(static_cast<std::size_t>(n), 1);
  while (true) {
    out.emplace_back(cur);
    int i = n - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == max_part) cur[static_cast<std::size_t>(i--)] = 1;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
  }
  return out;
}

std::vector<MuTuple> partitions_up_to(int max_total) {
  std::vector<MuTuple> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  for (int d = 1; d <= max_total; ++d) rec(d, d);
  return out;
}

}  // namespace hurwitz
