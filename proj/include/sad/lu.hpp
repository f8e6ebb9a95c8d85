#pragma once

#include <utility>
#include <vector>

#include "sad/sparsity.hpp"

namespace sad {

// Row-major sparse factors of P·A = L·U. Row k of `lower` holds the
// multipliers (elimination step, value) applied to pivot rows < k; `upper`
// holds the surviving entries with original column indices, diagonal first.
// perm[k] is the original row placed at elimination position k.
struct LuFactors {
    int n = 0;
    std::vector<int> perm;
    std::vector<std::vector<std::pair<int, double>>> lower;
    std::vector<std::vector<std::pair<int, double>>> upper;
};

LuFactors lu_factor(const CsrMatrix& a);
std::vector<double> lu_solve(const LuFactors& f, const std::vector<double>& b);

// Partial-pivoting Gaussian elimination on dense storage; independent of
// the sparse path, used as a reference. Capped at n = 500.
std::vector<double> dense_solve(std::vector<std::vector<double>> a, std::vector<double> b);

}  // namespace sad
