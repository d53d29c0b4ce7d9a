#pragma once

#include <cstddef>
#include <vector>

#include "hurwitz/rational.hpp"

// Shared pieces of the per-residue-class tensor solves.
namespace hurwitz::detail {

using Matrix = std::vector<std::vector<Rational>>;

// Gauss-Jordan inverse over Q. Degenerate when singular.
Matrix inverse(Matrix m);

// Odometer over {0..base-1}^n; false once it wraps around.
bool advance(std::vector<int>& v, int base);

// Little-endian flat index into a K^n tensor.
std::size_t flat(const std::vector<int>& idx, int base);

// Classes r in [1,a]^n, optionally only those with a | sum r.
std::vector<std::vector<int>> residue_classes(int a, int n, bool divisible_only = true);

// mu_i = r_i + a b_i.
std::vector<int> mu_of(int a, const std::vector<int>& r, const std::vector<int>& b);

// Contracts axis i of the K^n tensor t with axes[i] (a K x K matrix).
void apply_axes(std::vector<Rational>& t, int K, const std::vector<const Matrix*>& axes);

}  // namespace hurwitz::detail
