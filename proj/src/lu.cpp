#include "sad/lu.hpp"

#include <algorithm>
#include <cmath>

#include "sad/errors.hpp"

namespace sad {

namespace {

using SparseRow = std::vector<std::pair<int, double>>;

constexpr double kPivotRatio = 1e-14;

// target − m·pivot over the tails starting past column k; fill-in entries
// are kept even when the update cancels to zero.
SparseRow eliminate(const SparseRow& target, const SparseRow& pivot, double m) {
    SparseRow out;
    out.reserve(target.size() + pivot.size());
    std::size_t a = 1;  // skip target's column-k entry
    std::size_t b = 1;  // skip pivot diagonal
    while (a < target.size() || b < pivot.size()) {
        if (b == pivot.size() || (a < target.size() && target[a].first < pivot[b].first)) {
            out.push_back(target[a]);
            ++a;
        } else if (a == target.size() || pivot[b].first < target[a].first) {
            out.emplace_back(pivot[b].first, -m * pivot[b].second);
            ++b;
        } else {
            out.emplace_back(target[a].first, target[a].second - m * pivot[b].second);
            ++a;
            ++b;
        }
    }
    return out;
}

}  // namespace

LuFactors lu_factor(const CsrMatrix& a) {
    if (a.n_rows != a.n_cols) throw DimensionError("lu_factor requires a square matrix");
    const int n = a.n_rows;

    LuFactors f;
    f.n = n;
    f.perm.resize(n);
    f.lower.resize(n);
    f.upper.resize(n);

    std::vector<SparseRow> work(n);
    for (int i = 0; i < n; ++i) {
        f.perm[i] = i;
        work[i].reserve(a.row_ptr[i + 1] - a.row_ptr[i]);
        for (int p = a.row_ptr[i]; p < a.row_ptr[i + 1]; ++p)
            work[i].emplace_back(a.col_idx[p], a.vals[p]);
    }

    for (int k = 0; k < n; ++k) {
        int best = -1;
        double best_mag = 0.0;
        for (int i = k; i < n; ++i) {
            if (!work[i].empty() && work[i].front().first == k) {
                const double mag = std::fabs(work[i].front().second);
                if (mag > best_mag) {
                    best_mag = mag;
                    best = i;
                }
            }
        }
        if (best < 0) throw SingularMatrixError(k, "zero pivot column");

        std::swap(work[k], work[best]);
        std::swap(f.lower[k], f.lower[best]);
        std::swap(f.perm[k], f.perm[best]);

        double row_max = 0.0;
        for (const auto& [c, v] : work[k]) row_max = std::max(row_max, std::fabs(v));
        const double pivot = work[k].front().second;
        if (std::fabs(pivot) < kPivotRatio * row_max || pivot == 0.0)
            throw SingularMatrixError(k, "pivot magnitude below threshold");

        for (int i = k + 1; i < n; ++i) {
            if (work[i].empty() || work[i].front().first != k) continue;
            const double m = work[i].front().second / pivot;
            f.lower[i].emplace_back(k, m);
            work[i] = eliminate(work[i], work[k], m);
        }
    }

    for (int k = 0; k < n; ++k) f.upper[k] = std::move(work[k]);
    return f;
}

std::vector<double> lu_solve(const LuFactors& f, const std::vector<double>& b) {
    const int n = f.n;
    if (static_cast<int>(b.size()) != n)
        throw DimensionError("lu_solve right-hand side length mismatch");

    std::vector<double> y(n);
    for (int k = 0; k < n; ++k) {
        double s = b[f.perm[k]];
        for (const auto& [p, m] : f.lower[k]) s -= m * y[p];
        y[k] = s;
    }

    std::vector<double> x(n);
    for (int k = n - 1; k >= 0; --k) {
        double s = y[k];
        const auto& row = f.upper[k];
        for (std::size_t e = 1; e < row.size(); ++e) s -= row[e].second * x[row[e].first];
        x[k] = s / row.front().second;
    }
    return x;
}

std::vector<double> dense_solve(std::vector<std::vector<double>> a, std::vector<double> b) {
    const int n = static_cast<int>(a.size());
    if (n > 500) throw DimensionError("dense_solve supports n <= 500");
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n)
            throw DimensionError("dense_solve requires a square matrix");
    if (static_cast<int>(b.size()) != n)
        throw DimensionError("dense_solve right-hand side length mismatch");

    for (int k = 0; k < n; ++k) {
        int best = k;
        for (int i = k + 1; i < n; ++i)
            if (std::fabs(a[i][k]) > std::fabs(a[best][k])) best = i;
        std::swap(a[k], a[best]);
        std::swap(b[k], b[best]);

        double row_max = 0.0;
        for (int j = k; j < n; ++j) row_max = std::max(row_max, std::fabs(a[k][j]));
        if (a[k][k] == 0.0 || std::fabs(a[k][k]) < kPivotRatio * row_max)
            throw SingularMatrixError(k, "dense pivot magnitude below threshold");

        for (int i = k + 1; i < n; ++i) {
            if (a[i][k] == 0.0) continue;
            const double m = a[i][k] / a[k][k];
            a[i][k] = 0.0;
            for (int j = k + 1; j < n; ++j) a[i][j] -= m * a[k][j];
            b[i] -= m * b[k];
        }
    }

    std::vector<double> x(n);
    for (int k = n - 1; k >= 0; --k) {
        double s = b[k];
        for (int j = k + 1; j < n; ++j) s -= a[k][j] * x[j];
        x[k] = s / a[k][k];
    }
    return x;
}

}  // namespace sad
