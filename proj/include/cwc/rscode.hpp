#pragma once

#include <vector>

#include "cwc/codebook.hpp"
#include "cwc/field.hpp"

namespace cwc {

/// Grid over the evaluation points W (field-element indices, distinct).
/// Defaults to the first w field elements in index order when W is empty.
GridIndex make_rs_grid(const Field& f, const std::vector<int>& eval_points);

/// Bit-support word of the graph of a polynomial with coeffs[0] the constant
/// term: one set bit per column block, at row f(P_i).
Codeword rs_eval_word(const Field& f, const std::vector<int>& coeffs, const GridIndex& grid);

/// Base code: one word per polynomial of degree <= r-1 over the grid, in
/// lexicographic coefficient order (constant term fastest). Yields q^r
/// distinct words with n = w*q, weight w and d_claimed = 2w+2-2r.
/// Requires 1 <= r and r-1 < w <= q.
CodeBook build_rs_base(const Field& f, int r, const std::vector<int>& eval_points);

/// Adds the w single-column words, the i-th supported on column block i at
/// the value set V (default: W's own indices). Requires 2 <= r <= q.
void add_single_column_words(CodeBook& book, const GridIndex& grid, const Field& f, int r,
                             std::vector<int> values = {});

} // namespace cwc
