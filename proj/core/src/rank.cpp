#include <boost/multiprecision/cpp_int.hpp>

#include "graphcx/corpus.hpp"

namespace graphcx {

// Bareiss fraction-free elimination; exact over the integers, so the rank is
// the rank over the rationals.
long long exact_rank(const SparseIntMatrix& matrix) {
    using Int = boost::multiprecision::cpp_int;
    const size_t rows = static_cast<size_t>(matrix.rows);
    const size_t cols = static_cast<size_t>(matrix.cols);
    if (rows == 0 || cols == 0) return 0;
    std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols, 0));
    for (const auto& [r, c, value] : matrix.entries)
        a[static_cast<size_t>(r)][static_cast<size_t>(c)] += value;

    Int prev = 1;
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[rank], a[pivot]);
        for (size_t r = rank + 1; r < rows; ++r) {
            for (size_t c = col + 1; c < cols; ++c)
                a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]) / prev;
            a[r][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return static_cast<long long>(rank);
}

} // namespace graphcx
