#pragma once

#include <span>
#include <utility>
#include <vector>

#include "sad/ad_scalar.hpp"

namespace sad {

// Per-equation sorted lists of structurally nonzero column indices.
struct SparsityPattern {
    int n_rows = 0;
    int n_cols = 0;
    std::vector<std::vector<int>> rows;

    bool operator==(const SparsityPattern&) const = default;

    long long nnz() const {
        long long n = 0;
        for (const auto& r : rows) n += static_cast<long long>(r.size());
        return n;
    }
};

// Compressed-sparse-row matrix with an optional companion residual vector.
struct CsrMatrix {
    int n_rows = 0;
    int n_cols = 0;
    std::vector<int> row_ptr;
    std::vector<int> col_idx;
    std::vector<double> vals;
    std::vector<double> rhs;

    long long nnz() const { return static_cast<long long>(col_idx.size()); }

    // Stored value at (i, j), or 0.0 where the entry is structurally absent.
    double at(int i, int j) const {
        for (int p = row_ptr[i]; p < row_ptr[i + 1]; ++p)
            if (col_idx[p] == j) return vals[p];
        return 0.0;
    }
};

// Bipartite equation/variable graph; edge (i, j) present exactly when
// variable j is structurally nonzero in equation i.
struct DependencyGraph {
    int n_equations = 0;
    int n_variables = 0;
    std::vector<std::pair<int, int>> edges;
};

SparsityPattern extract_pattern(std::span<const ADScalar> residuals, int n_cols);
CsrMatrix assemble_csr(std::span<const ADScalar> residuals, int n_cols);
SparsityPattern pattern_of(const CsrMatrix& m);
DependencyGraph to_dependency_graph(const SparsityPattern& p);

}  // namespace sad
