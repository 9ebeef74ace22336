#pragma once

// Independent oracles shared by the unit tests and the acceptance run.

#include <optional>
#include <vector>

#include "duo/models.hpp"

namespace duo::oracle {

// The convolution inverse of the identity, solved directly from the
// structure constants: sum S(x1) x2 = sum x1 S(x2) = eps(y) 1.
inline std::optional<linalg::Dense> convolution_inverse(const BialgebraData& d) {
  const std::size_t k = d.grades.size(), unknowns = k * k;
  std::vector<linalg::Vec> rows;
  linalg::Vec rhs;
  for (int side = 0; side < 2; ++side)
    for (std::size_t y = 0; y < k; ++y) {
      std::vector<linalg::Vec> eq(k, linalg::Vec(unknowns));
      for (const auto& t : d.comult[y]) {
        const std::size_t x1 = t.idx[0], x2 = t.idx[1];
        for (std::size_t z = 0; z < k; ++z) {
          const std::size_t l = side == 0 ? z : x1, r = side == 0 ? x2 : z;
          const std::size_t var = side == 0 ? z * k + x1 : z * k + x2;
          for (const auto& p : d.mult[l * k + r]) eq[p.idx[0]][var] += t.coeff * p.coeff;
        }
      }
      for (std::size_t w = 0; w < k; ++w) {
        rows.push_back(eq[w]);
        Rational v = 0;
        for (const auto& u : d.unit)
          if (u.idx[0] == w) v += u.coeff * d.counit[y];
        rhs.push_back(v);
      }
    }
  linalg::Dense M(rows.size(), unknowns);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < unknowns; ++j) M.at(i, j) = rows[i][j];
  auto sol = linalg::solve(M, rhs);
  if (!sol || !sol->kernel.empty()) return std::nullopt;
  linalg::Dense S(k, k);
  for (std::size_t z = 0; z < k; ++z)
    for (std::size_t y = 0; y < k; ++y) S.at(z, y) = sol->particular[z * k + y];
  return S;
}

inline linalg::Dense inversion_matrix(const std::vector<std::vector<int>>& table, int unit) {
  const std::size_t k = table.size();
  linalg::Dense S(k, k);
  for (std::size_t g = 0; g < k; ++g)
    for (std::size_t h = 0; h < k; ++h)
      if (table[g][h] == unit) S.at(h, g) = 1;
  return S;
}

}  // namespace duo::oracle
