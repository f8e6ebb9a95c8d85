#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "sad/sparsity.hpp"

namespace sad {

// Dense-form Matlab assignment text. Patterns print 0/1 entries under the
// name "A"; matrices print their values (structural zeros included) under
// the name "J". Rows are separated by ";\n " and the text ends with "];".
std::string print_matlab(const SparsityPattern& p, std::string_view name = "A");
std::string print_matlab(const CsrMatrix& m, std::string_view name = "J");

// Coordinate-format MatrixMarket with 1-based indices; patterns export
// every structural entry with value 1.
void write_matrix_market(std::ostream& os, const CsrMatrix& m);
void write_matrix_market(std::ostream& os, const SparsityPattern& p);
CsrMatrix read_matrix_market(std::istream& is);

}  // namespace sad
