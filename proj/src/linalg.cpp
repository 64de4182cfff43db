#include "orbitstab/linalg.hpp"

namespace orbitstab {

std::vector<std::vector<FieldElem>> row_reduce(std::vector<std::vector<FieldElem>> rows, const FieldSpecPtr& spec) {
    if (rows.empty()) return rows;
    std::size_t ncols = rows[0].size();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < ncols && pivot_row < rows.size(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[pivot_row], rows[sel]);
        FieldElem inv = rows[pivot_row][col].inverse();
        for (std::size_t j = col; j < ncols; ++j) rows[pivot_row][j] = rows[pivot_row][j] * inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == pivot_row || rows[r][col].is_zero()) continue;
            FieldElem f = rows[r][col];
            for (std::size_t j = col; j < ncols; ++j)
                rows[r][j] = rows[r][j] - f * rows[pivot_row][j];
        }
        ++pivot_row;
    }
    rows.resize(pivot_row, std::vector<FieldElem>());
    (void)spec;
    return rows;
}

std::vector<std::vector<FieldElem>> nullspace(const Matrix& M, const FieldSpecPtr& spec, std::size_t ncols) {
    auto rref = row_reduce(M, spec);
    // locate pivot columns
    std::vector<int> pivot_of_col(ncols, -1);
    for (std::size_t r = 0; r < rref.size(); ++r) {
        for (std::size_t c = 0; c < ncols; ++c) {
            if (!rref[r][c].is_zero()) {
                pivot_of_col[c] = static_cast<int>(r);
                break;
            }
        }
    }
    std::vector<std::vector<FieldElem>> basis;
    for (std::size_t free_col = 0; free_col < ncols; ++free_col) {
        if (pivot_of_col[free_col] >= 0) continue;
        std::vector<FieldElem> v(ncols, FieldElem::zero(spec));
        v[free_col] = FieldElem::one(spec);
        for (std::size_t c = 0; c < ncols; ++c) {
            int pr = pivot_of_col[c];
            if (pr < 0) continue;
            v[c] = -rref[pr][free_col];
        }
        // normalize first nonzero entry to 1
        for (std::size_t c = 0; c < ncols; ++c) {
            if (!v[c].is_zero()) {
                FieldElem inv = v[c].inverse();
                for (auto& x : v) x = x * inv;
                break;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace orbitstab
