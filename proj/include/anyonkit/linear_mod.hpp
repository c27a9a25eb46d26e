#pragma once

// Linear systems A x = b over Z/M. M is split into prime powers; over each
// Z/p^e we eliminate with full pivoting on the entry of least p-adic
// valuation, which keeps every step exact in the local ring, and then
// recombine by CRT. Free variables are set to zero, so the returned solution
// depends only on the system, never on scheduling.

#include <anyonkit/config.hpp>
#include <anyonkit/error.hpp>
#include <anyonkit/qz.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace anyonkit {

class ModularSystem {
 public:
  using Term = std::pair<std::size_t, i64>;

  ModularSystem(std::size_t num_vars, i64 modulus) : num_vars_(num_vars), modulus_(modulus) {
    require(modulus >= 1, ErrorKind::InvalidArgument, "modulus must be positive");
  }

  std::size_t num_vars() const { return num_vars_; }
  std::size_t num_equations() const { return rows_.size(); }
  i64 modulus() const { return modulus_; }

  void add_equation(std::vector<Term> terms, i64 rhs) {
    for (const auto& [v, c] : terms)
      require(v < num_vars_, ErrorKind::Internal, "equation references an unknown variable");
    rows_.push_back(Row{std::move(terms), mod(rhs, modulus_)});
  }

  /// One solution with entries in [0, M), or nullopt if the system is inconsistent.
  std::optional<std::vector<i64>> solve(const Config& cfg = {}) const {
    require(static_cast<i128>(rows_.size()) * static_cast<i128>(num_vars_ + 1) <= cfg.linear_system_cap,
            ErrorKind::CapExceeded,
            "linear system " + std::to_string(rows_.size()) + "x" + std::to_string(num_vars_) + " exceeds cap");
    std::vector<i64> x(num_vars_, 0);
    i64 built = 1;
    for (auto [p, e] : factorize(modulus_)) {
      i64 pe = ipow(p, e);
      auto local = solve_prime_power(p, e, pe);
      if (!local) return std::nullopt;
      // CRT merge x (mod built) with local (mod pe).
      i64 inv = modinv(mod(built, pe), pe);
      for (std::size_t i = 0; i < num_vars_; ++i) {
        i64 t = mulmod(mod((*local)[i] - x[i], pe), inv, pe);
        x[i] = static_cast<i64>((static_cast<i128>(x[i]) + static_cast<i128>(built) * t) % (static_cast<i128>(built) * pe));
      }
      built *= pe;
    }
    return x;
  }

 private:
  struct Row {
    std::vector<Term> terms;
    i64 rhs;
  };

  static int valuation(i64 v, i64 p, int e) {
    if (v == 0) return e;
    int k = 0;
    while (v % p == 0) {
      v /= p;
      ++k;
    }
    return k;
  }

  std::optional<std::vector<i64>> solve_prime_power(i64 p, int e, i64 pe) const {
    const std::size_t rows = rows_.size(), cols = num_vars_;
    std::vector<i64> a(rows * cols, 0), b(rows);
    for (std::size_t r = 0; r < rows; ++r) {
      for (const auto& [v, c] : rows_[r].terms) a[r * cols + v] = mod(a[r * cols + v] + mod(c, pe), pe);
      b[r] = mod(rows_[r].rhs, pe);
    }
    auto A = [&](std::size_t r, std::size_t c) -> i64& { return a[r * cols + c]; };

    std::vector<std::size_t> col_order(cols);
    for (std::size_t c = 0; c < cols; ++c) col_order[c] = c;
    std::vector<int> pivot_val;
    std::size_t rank = 0;
    for (; rank < rows && rank < cols; ++rank) {
      // Least valuation over the remaining submatrix; first hit in row-major order wins ties.
      int best = e;
      std::size_t br = 0, bc = 0;
      for (std::size_t r = rank; r < rows && best > 0; ++r)
        for (std::size_t ci = rank; ci < cols; ++ci) {
          i64 v = A(r, col_order[ci]);
          if (v == 0) continue;
          int val = valuation(v, p, e);
          if (val < best) {
            best = val;
            br = r;
            bc = ci;
            if (best == 0) break;
          }
        }
      if (best == e) break;
      if (br != rank) {
        for (std::size_t c = 0; c < cols; ++c) std::swap(A(rank, c), A(br, c));
        std::swap(b[rank], b[br]);
      }
      std::swap(col_order[rank], col_order[bc]);
      const std::size_t pc = col_order[rank];
      const i64 pv = ipow(p, best);
      const i64 unit_inv = modinv((A(rank, pc) / pv) % pe, pe);
      for (std::size_t r = rank + 1; r < rows; ++r) {
        i64 v = A(r, pc);
        if (v == 0) continue;
        i64 factor = mulmod(v / pv, unit_inv, pe);
        for (std::size_t ci = rank; ci < cols; ++ci) {
          std::size_t c = col_order[ci];
          if (A(rank, c) != 0) A(r, c) = mod(A(r, c) - mulmod(factor, A(rank, c), pe), pe);
        }
        b[r] = mod(b[r] - mulmod(factor, b[rank], pe), pe);
      }
      pivot_val.push_back(best);
    }
    for (std::size_t r = rank; r < rows; ++r)
      if (b[r] != 0) return std::nullopt;

    std::vector<i64> x(cols, 0);
    for (std::size_t i = rank; i-- > 0;) {
      const std::size_t pc = col_order[i];
      i64 rhs = b[i];
      for (std::size_t ci = i + 1; ci < cols; ++ci) {
        std::size_t c = col_order[ci];
        if (A(i, c) != 0 && x[c] != 0) rhs = mod(rhs - mulmod(A(i, c), x[c], pe), pe);
      }
      const i64 pv = ipow(p, pivot_val[i]);
      if (rhs % pv != 0) return std::nullopt;
      const i64 reduced_mod = pe / pv;
      const i64 unit = (A(i, pc) / pv) % reduced_mod;
      x[pc] = reduced_mod == 1 ? 0 : mulmod(rhs / pv, modinv(unit, reduced_mod), reduced_mod);
    }
    return x;
  }

  std::size_t num_vars_;
  i64 modulus_;
  std::vector<Row> rows_;
};

}  // namespace anyonkit
