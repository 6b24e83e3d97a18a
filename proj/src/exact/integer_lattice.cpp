#include "blowup/exact/integer_lattice.hpp"

#include <stdexcept>
#include <tuple>
#include <utility>

namespace blowup {

namespace {

// g = s*a + t*b with g = gcd(a, b) >= 0.
std::tuple<BigInt, BigInt, BigInt> extended_gcd(const BigInt& a, const BigInt& b) {
  BigInt old_r = a, r = b;
  BigInt old_s = 1, s = 0;
  BigInt old_t = 0, t = 1;
  while (r != 0) {
    const BigInt q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  if (old_r < 0) {
    return {-old_r, -old_s, -old_t};
  }
  return {old_r, old_s, old_t};
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) {
    --q;
  }
  return q;
}

}  // namespace

std::vector<IntVector> clear_denominators(const std::vector<RationalVector>& rows) {
  std::vector<IntVector> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    BigInt l = 1;
    for (const auto& x : row) {
      l = lcm_of(l, denominator(x));
    }
    IntVector r;
    r.reserve(row.size());
    for (const auto& x : row) {
      r.push_back(numerator(x) * (l / denominator(x)));
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<IntVector> integer_kernel(const std::vector<IntVector>& rows, std::size_t cols) {
  std::vector<IntVector> a = rows;
  for (const auto& row : a) {
    if (row.size() != cols) {
      throw std::invalid_argument("integer_kernel: ragged matrix");
    }
  }
  // Columns of u track the unimodular transform: rows * u = a.
  std::vector<IntVector> u(cols, IntVector(cols, BigInt(0)));
  for (std::size_t i = 0; i < cols; ++i) {
    u[i][i] = 1;
  }
  auto column_op = [&](std::size_t p, std::size_t j, const BigInt& s, const BigInt& t, const BigInt& x,
                       const BigInt& y) {
    // (col_p, col_j) <- (s col_p + t col_j, x col_p + y col_j)
    auto apply = [&](std::vector<IntVector>& m) {
      for (auto& row : m) {
        const BigInt cp = row[p];
        const BigInt cj = row[j];
        row[p] = s * cp + t * cj;
        row[j] = x * cp + y * cj;
      }
    };
    apply(a);
    apply(u);
  };

  std::size_t pivot = 0;
  for (std::size_t i = 0; i < a.size() && pivot < cols; ++i) {
    for (std::size_t j = pivot + 1; j < cols; ++j) {
      if (a[i][j] == 0) {
        continue;
      }
      if (a[i][pivot] == 0) {
        column_op(pivot, j, 0, 1, 1, 0);
        continue;
      }
      const auto [g, s, t] = extended_gcd(a[i][pivot], a[i][j]);
      const BigInt up = a[i][pivot] / g;
      const BigInt vj = a[i][j] / g;
      // det [[s, -vj], [t, up]] = s*up + t*vj = 1
      column_op(pivot, j, s, t, -vj, up);
    }
    if (a[i][pivot] != 0) {
      ++pivot;
    }
  }

  std::vector<IntVector> kernel;
  for (std::size_t j = pivot; j < cols; ++j) {
    IntVector v(cols);
    for (std::size_t r = 0; r < cols; ++r) {
      v[r] = u[r][j];
    }
    kernel.push_back(std::move(v));
  }
  return hermite_basis(std::move(kernel), cols);
}

std::vector<IntVector> integer_kernel(const std::vector<RationalVector>& rows, std::size_t cols) {
  return integer_kernel(clear_denominators(rows), cols);
}

std::vector<IntVector> hermite_basis(std::vector<IntVector> g, std::size_t dim) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < dim && r < g.size(); ++col) {
    for (std::size_t i = r + 1; i < g.size(); ++i) {
      if (g[i][col] == 0) {
        continue;
      }
      if (g[r][col] == 0) {
        std::swap(g[r], g[i]);
        continue;
      }
      const auto [gg, s, t] = extended_gcd(g[r][col], g[i][col]);
      const BigInt ur = g[r][col] / gg;
      const BigInt vi = g[i][col] / gg;
      for (std::size_t k = 0; k < dim; ++k) {
        const BigInt xr = g[r][k];
        const BigInt xi = g[i][k];
        g[r][k] = s * xr + t * xi;
        g[i][k] = -vi * xr + ur * xi;
      }
    }
    if (g[r][col] == 0) {
      continue;
    }
    if (g[r][col] < 0) {
      for (auto& x : g[r]) {
        x = -x;
      }
    }
    for (std::size_t k = 0; k < r; ++k) {
      const BigInt q = floor_div(g[k][col], g[r][col]);
      if (q != 0) {
        for (std::size_t c = 0; c < dim; ++c) {
          g[k][c] -= q * g[r][c];
        }
      }
    }
    ++r;
  }
  g.resize(r);
  return g;
}

bool hermite_contains(const std::vector<IntVector>& basis, IntVector v) {
  for (const auto& row : basis) {
    std::size_t pc = 0;
    while (pc < row.size() && row[pc] == 0) {
      ++pc;
    }
    if (pc == row.size()) {
      continue;
    }
    if (v[pc] % row[pc] != 0) {
      return false;
    }
    const BigInt q = v[pc] / row[pc];
    for (std::size_t c = 0; c < v.size(); ++c) {
      v[c] -= q * row[c];
    }
  }
  for (const auto& x : v) {
    if (x != 0) {
      return false;
    }
  }
  return true;
}

std::vector<IntVector> project_lattice(const std::vector<IntVector>& basis, const std::vector<std::size_t>& keep) {
  std::vector<IntVector> gens;
  gens.reserve(basis.size());
  for (const auto& row : basis) {
    IntVector p;
    p.reserve(keep.size());
    for (auto k : keep) {
      p.push_back(row.at(k));
    }
    gens.push_back(std::move(p));
  }
  return hermite_basis(std::move(gens), keep.size());
}

std::optional<RationalVector> solve_unique(std::vector<RationalVector> rows, RationalVector rhs) {
  const std::size_t m = rows.size();
  const std::size_t n = m == 0 ? 0 : rows[0].size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && rows[p][c] == 0) {
      ++p;
    }
    if (p == m) {
      continue;
    }
    std::swap(rows[p], rows[r]);
    std::swap(rhs[p], rhs[r]);
    const Rational inv = 1 / rows[r][c];
    for (std::size_t k = c; k < n; ++k) {
      rows[r][k] *= inv;
    }
    rhs[r] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || rows[i][c] == 0) {
        continue;
      }
      const Rational f = rows[i][c];
      for (std::size_t k = c; k < n; ++k) {
        rows[i][k] -= f * rows[r][k];
      }
      rhs[i] -= f * rhs[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i) {
    if (rhs[i] != 0) {
      return std::nullopt;
    }
  }
  if (r != n) {
    throw std::invalid_argument("solve_unique: system is underdetermined");
  }
  RationalVector x(n);
  for (std::size_t i = 0; i < r; ++i) {
    x[pivot_col[i]] = rhs[i];
  }
  return x;
}

}  // namespace blowup
