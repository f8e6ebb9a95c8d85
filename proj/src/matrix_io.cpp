#include "sad/matrix_io.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>

#include "sad/errors.hpp"
#include "sad/num_format.hpp"

namespace sad {

namespace {

std::string matlab_text(std::string_view name, int n_rows, int n_cols,
                        const std::function<std::string(int, int)>& entry) {
    std::string out(name);
    out += " = [";
    for (int i = 0; i < n_rows; ++i) {
        if (i > 0) out += ";\n ";
        for (int j = 0; j < n_cols; ++j) {
            if (j > 0) out += ' ';
            out += entry(i, j);
        }
    }
    out += "];";
    return out;
}

}  // namespace

std::string print_matlab(const SparsityPattern& p, std::string_view name) {
    return matlab_text(name, p.n_rows, p.n_cols, [&](int i, int j) {
        return std::binary_search(p.rows[i].begin(), p.rows[i].end(), j) ? "1" : "0";
    });
}

std::string print_matlab(const CsrMatrix& m, std::string_view name) {
    return matlab_text(name, m.n_rows, m.n_cols,
                       [&](int i, int j) { return format_double(m.at(i, j)); });
}

void write_matrix_market(std::ostream& os, const CsrMatrix& m) {
    os << "%%MatrixMarket matrix coordinate real general\n";
    os << m.n_rows << ' ' << m.n_cols << ' ' << m.nnz() << '\n';
    for (int i = 0; i < m.n_rows; ++i)
        for (int p = m.row_ptr[i]; p < m.row_ptr[i + 1]; ++p)
            os << i + 1 << ' ' << m.col_idx[p] + 1 << ' ' << format_double(m.vals[p]) << '\n';
}

void write_matrix_market(std::ostream& os, const SparsityPattern& p) {
    os << "%%MatrixMarket matrix coordinate real general\n";
    os << p.n_rows << ' ' << p.n_cols << ' ' << p.nnz() << '\n';
    for (int i = 0; i < p.n_rows; ++i)
        for (int j : p.rows[i]) os << i + 1 << ' ' << j + 1 << " 1\n";
}

CsrMatrix read_matrix_market(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line.rfind("%%MatrixMarket", 0) != 0 ||
        line.find("coordinate") == std::string::npos)
        throw std::runtime_error("matrix market: missing coordinate header");
    do {
        if (!std::getline(is, line)) throw std::runtime_error("matrix market: missing size line");
    } while (!line.empty() && line[0] == '%');

    std::istringstream sizes(line);
    int n_rows = 0, n_cols = 0;
    long long nnz = 0;
    if (!(sizes >> n_rows >> n_cols >> nnz))
        throw std::runtime_error("matrix market: bad size line");

    std::vector<std::vector<std::pair<int, double>>> rows(n_rows);
    for (long long e = 0; e < nnz; ++e) {
        int i = 0, j = 0;
        double v = 0.0;
        if (!(is >> i >> j >> v)) throw std::runtime_error("matrix market: truncated entries");
        if (i < 1 || i > n_rows || j < 1 || j > n_cols)
            throw std::runtime_error("matrix market: entry index out of range");
        rows[i - 1].emplace_back(j - 1, v);
    }

    CsrMatrix m;
    m.n_rows = n_rows;
    m.n_cols = n_cols;
    m.row_ptr.push_back(0);
    for (auto& row : rows) {
        std::sort(row.begin(), row.end());
        for (const auto& [j, v] : row) {
            m.col_idx.push_back(j);
            m.vals.push_back(v);
        }
        m.row_ptr.push_back(static_cast<int>(m.col_idx.size()));
    }
    return m;
}

}  // namespace sad
