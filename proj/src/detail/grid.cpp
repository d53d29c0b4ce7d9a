#include "detail/grid.hpp"

#include <utility>

#include "hurwitz/errors.hpp"

namespace hurwitz::detail {

Matrix inverse(Matrix m) {
  const std::size_t n = m.size();
  Matrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) fail(ErrorKind::Degenerate, "singular interpolation matrix");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    const Rational p = m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) continue;
      const Rational f = m[row][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[row][j] -= f * m[col][j];
        inv[row][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

bool advance(std::vector<int>& v, int base) {
  for (auto& x : v) {
    if (++x < base) return true;
    x = 0;
  }
  return false;
}

std::size_t flat(const std::vector<int>& idx, int base) {
  std::size_t f = 0;
  for (auto it = idx.rbegin(); it != idx.rend(); ++it)
    f = f * static_cast<std::size_t>(base) + static_cast<std::size_t>(*it);
  return f;
}

std::vector<std::vector<int>> residue_classes(int a, int n, bool divisible_only) {
  std::vector<std::vector<int>> out;
  std::vector<int> digits(static_cast<std::size_t>(n), 0);
  do {
    std::vector<int> r(digits.size());
    int sum = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) sum += (r[i] = digits[i] + 1);
    if (!divisible_only || sum % a == 0) out.push_back(std::move(r));
  } while (advance(digits, a));
  return out;
}

std::vector<int> mu_of(int a, const std::vector<int>& r, const std::vector<int>& b) {
  std::vector<int> mu(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) mu[i] = r[i] + a * b[i];
  return mu;
}

void apply_axes(std::vector<Rational>& t, int K, const std::vector<const Matrix*>& axes) {
  const std::size_t total = t.size();
  const auto k = static_cast<std::size_t>(K);
  std::size_t stride = 1;
  for (const Matrix* m : axes) {
    std::vector<Rational> next(total);
    for (std::size_t base = 0; base < total; ++base) {
      if ((base / stride) % k != 0) continue;
      for (std::size_t row = 0; row < k; ++row) {
        Rational acc(0);
        for (std::size_t j = 0; j < k; ++j) {
          const Rational& v = t[base + j * stride];
          if (v != 0) acc += (*m)[row][j] * v;
        }
        next[base + row * stride] = acc;
      }
    }
    t = std::move(next);
    stride *= k;
  }
}

}  // namespace hurwitz::detail
