#include "cwc/rscode.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cwc {

GridIndex make_rs_grid(const Field& f, const std::vector<int>& eval_points) {
    GridIndex g;
    g.q = f.q();
    g.columns = eval_points;
    if (g.columns.empty())
        throw std::invalid_argument("rscode: evaluation point set W must be nonempty");
    std::vector<int> sorted = g.columns;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("rscode: evaluation points must be distinct");
    for (int x : sorted)
        if (x < 0 || x >= f.q())
            throw std::invalid_argument("rscode: evaluation point outside field");
    return g;
}

Codeword rs_eval_word(const Field& f, const std::vector<int>& coeffs, const GridIndex& grid) {
    Codeword word = Codeword::zeros(grid.n());
    for (int i = 0; i < grid.cols(); ++i)
        word.set(grid.coord(i, poly_eval(f, coeffs, grid.columns[i])));
    return word;
}

CodeBook build_rs_base(const Field& f, int r, const std::vector<int>& eval_points) {
    std::vector<int> W = eval_points;
    if (W.empty()) {
        // Default W: first w = q field elements. Callers wanting w < q pass W.
        W.resize(f.q());
        for (int i = 0; i < f.q(); ++i) W[i] = i;
    }
    const GridIndex grid = make_rs_grid(f, W);
    const int q = f.q();
    const int w = grid.cols();
    if (r < 1) throw std::invalid_argument("rscode: requires r >= 1");
    if (!(w <= q && w > r - 1))
        throw std::invalid_argument("rscode: requires q >= w > r-1 (Prop 2.2 hypothesis)");

    CodeBook book;
    book.n = grid.n();
    book.w = w;
    book.d_claimed = 2 * w + 2 - 2 * r;

    long long total = 1;
    for (int i = 0; i < r; ++i) {
        total *= q;
        if (total > (1LL << 24))
            throw std::invalid_argument("rscode: q^r too large to materialize");
    }

    std::vector<int> coeffs(r, 0);
    book.words.reserve(total);
    for (long long idx = 0; idx < total; ++idx) {
        long long t = idx;
        for (int i = 0; i < r; ++i) { // constant term fastest
            coeffs[i] = static_cast<int>(t % q);
            t /= q;
        }
        book.words.push_back(rs_eval_word(f, coeffs, grid));
    }

    // Duplicates would indicate an arithmetic bug: evaluation on w > r-1
    // points is injective on degree <= r-1 polynomials.
    std::vector<Codeword> sorted = book.words;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::logic_error("rscode: duplicate codewords in base construction");

    std::string wlist;
    for (std::size_t i = 0; i < W.size(); ++i) wlist += (i ? "," : "") + std::to_string(W[i]);
    book.meta.push_back("construction: rs p=" + std::to_string(f.p()) + " m=" + std::to_string(f.m()) +
                        " modulus=" + std::to_string(f.modulus_encoding()) + " r=" + std::to_string(r) +
                        " W=" + wlist);
    return book;
}

void add_single_column_words(CodeBook& book, const GridIndex& grid, const Field& f, int r,
                             std::vector<int> values) {
    const int q = f.q();
    const int w = grid.cols();
    if (r < 2)
        throw std::invalid_argument(
            "rscode: single-column words require 2 <= r (added words only guarantee distance 2w-2)");
    if (r > q)
        throw std::invalid_argument(
            "rscode: requires r <= q (stricter than the stated 2 <= r < q+1; see provenance notes)");
    if (values.empty()) values = grid.columns; // default V = W's value-indices
    if (static_cast<int>(values.size()) != w)
        throw std::invalid_argument("rscode: V must be a w-subset of field values");
    for (int v : values)
        if (v < 0 || v >= q) throw std::invalid_argument("rscode: V value outside field");

    for (int i = 0; i < w; ++i) {
        Codeword word = Codeword::zeros(grid.n());
        for (int v : values) word.set(grid.coord(i, v));
        if (word.weight != w) throw std::invalid_argument("rscode: V values must be distinct");
        book.words.push_back(word);
    }
    std::string vlist;
    for (std::size_t i = 0; i < values.size(); ++i) vlist += (i ? "," : "") + std::to_string(values[i]);
    book.meta.push_back("augment: single-column words V=" + vlist);
}

} // namespace cwc
