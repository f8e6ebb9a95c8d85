#include "sad/sparsity.hpp"

#include "sad/errors.hpp"

namespace sad {

SparsityPattern extract_pattern(std::span<const ADScalar> residuals, int n_cols) {
    SparsityPattern p;
    p.n_rows = static_cast<int>(residuals.size());
    p.n_cols = n_cols;
    p.rows.resize(residuals.size());
    for (int i = 0; i < p.n_rows; ++i) {
        auto& row = p.rows[i];
        row.reserve(residuals[i].deps().size());
        for (const auto& [key, der] : residuals[i].deps()) {
            if (key < 0 || key >= n_cols) throw IndexError(i, key, n_cols);
            row.push_back(key);
        }
    }
    return p;
}

CsrMatrix assemble_csr(std::span<const ADScalar> residuals, int n_cols) {
    CsrMatrix m;
    m.n_rows = static_cast<int>(residuals.size());
    m.n_cols = n_cols;
    m.row_ptr.reserve(residuals.size() + 1);
    m.row_ptr.push_back(0);
    m.rhs.reserve(residuals.size());
    for (int i = 0; i < m.n_rows; ++i) {
        for (const auto& [key, der] : residuals[i].deps()) {
            if (key < 0 || key >= n_cols) throw IndexError(i, key, n_cols);
            m.col_idx.push_back(key);
            m.vals.push_back(der);
        }
        m.row_ptr.push_back(static_cast<int>(m.col_idx.size()));
        m.rhs.push_back(residuals[i].value());
    }
    return m;
}

SparsityPattern pattern_of(const CsrMatrix& m) {
    SparsityPattern p;
    p.n_rows = m.n_rows;
    p.n_cols = m.n_cols;
    p.rows.resize(m.n_rows);
    for (int i = 0; i < m.n_rows; ++i)
        p.rows[i].assign(m.col_idx.begin() + m.row_ptr[i], m.col_idx.begin() + m.row_ptr[i + 1]);
    return p;
}

DependencyGraph to_dependency_graph(const SparsityPattern& p) {
    DependencyGraph g;
    g.n_equations = p.n_rows;
    g.n_variables = p.n_cols;
    g.edges.reserve(static_cast<std::size_t>(p.nnz()));
    for (int i = 0; i < p.n_rows; ++i)
        for (int j : p.rows[i]) g.edges.emplace_back(i, j);
    return g;
}

}  // namespace sad
