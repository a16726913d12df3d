#include "fp_solve.hpp"

namespace ringforge::detail {

namespace {
unsigned inv_mod(unsigned a, unsigned p) {
  std::uint64_t base = a % p, e = p - 2, acc = 1;
  while (e) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return unsigned(acc);
}
}  // namespace

std::optional<std::vector<unsigned>> fp_solve(unsigned p,
                                              std::vector<std::vector<unsigned>> a,
                                              std::vector<unsigned> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivot_col_of_row;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] % p == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    std::swap(b[pivot], b[rank]);
    unsigned inv = inv_mod(a[rank][col], p);
    for (std::size_t j = col; j < cols; ++j)
      a[rank][j] = unsigned(std::uint64_t(a[rank][j]) * inv % p);
    b[rank] = unsigned(std::uint64_t(b[rank]) * inv % p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank) continue;
      unsigned f = a[i][col] % p;
      if (!f) continue;
      for (std::size_t j = col; j < cols; ++j)
        a[i][j] = unsigned((a[i][j] + std::uint64_t(p - a[rank][j] % p) * f) % p);
      b[i] = unsigned((b[i] + std::uint64_t(p - b[rank]) * f) % p);
    }
    pivot_col_of_row.push_back(col);
    ++rank;
  }
  for (std::size_t i = rank; i < rows; ++i)
    if (b[i] % p != 0) return std::nullopt;
  std::vector<unsigned> x(cols, 0);
  for (std::size_t i = 0; i < rank; ++i) x[pivot_col_of_row[i]] = b[i] % p;
  return x;
}

}  // namespace ringforge::detail
