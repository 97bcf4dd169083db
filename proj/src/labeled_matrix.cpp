#include "bigolin/labeled_matrix.hpp"

#include "bigolin/error.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <unordered_set>

namespace bigolin {

namespace {

void check_distinct(const std::vector<std::string>& labels, const char* which) {
    std::unordered_set<std::string> seen;
    for (const auto& l : labels) {
        if (!seen.insert(l).second)
            throw Error(Error::Kind::label_mismatch,
                        std::string("duplicate ") + which + " label: " + l, l);
    }
}

void check_equal_labels(const std::vector<std::string>& a, const std::vector<std::string>& b,
                        const char* context) {
    if (a.size() != b.size())
        throw Error(Error::Kind::label_mismatch,
                    std::string(context) + ": label lists have sizes " + std::to_string(a.size()) +
                        " and " + std::to_string(b.size()));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i])
            throw Error(Error::Kind::label_mismatch,
                        std::string(context) + ": label mismatch at position " + std::to_string(i) +
                            ": \"" + a[i] + "\" vs \"" + b[i] + "\"",
                        a[i]);
    }
}

enum class Mode { serial, parallel };

// Gauss-Jordan to reduced row echelon form. The parallel variant applies the
// row-update step with OpenMP; arithmetic and pivot choice are identical, so
// both modes produce the same matrix.
LabeledMatrix rref_impl(LabeledMatrix m, Mode mode) {
    const int nr = m.nrows();
    const int nc = m.ncols();
    int pivot_row = 0;
    for (int col = 0; col < nc && pivot_row < nr; ++col) {
        int sel = -1;
        for (int r = pivot_row; r < nr; ++r) {
            if (!m.at(r, col).is_zero()) {
                sel = r;
                break;
            }
        }
        if (sel < 0) continue;
        if (sel != pivot_row) {
            for (int j = col; j < nc; ++j) std::swap(m.at(sel, j), m.at(pivot_row, j));
        }
        GaussianRational inv = m.at(pivot_row, col).inverse();
        for (int j = col; j < nc; ++j) m.at(pivot_row, j) = m.at(pivot_row, j) * inv;

        auto eliminate = [&](int r) {
            if (r == pivot_row) return;
            GaussianRational f = m.at(r, col);
            if (f.is_zero()) return;
            for (int j = col; j < nc; ++j) m.at(r, j) -= f * m.at(pivot_row, j);
        };
        if (mode == Mode::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
            for (int r = 0; r < nr; ++r) eliminate(r);
        } else {
            for (int r = 0; r < nr; ++r) eliminate(r);
        }
        ++pivot_row;
    }
    return m;
}

} // namespace

LabeledMatrix::LabeledMatrix(std::vector<std::string> rows, std::vector<std::string> cols)
    : row_labels(std::move(rows)), col_labels(std::move(cols)) {
    check_distinct(row_labels, "row");
    check_distinct(col_labels, "column");
    entries.assign(row_labels.size() * col_labels.size(), GaussianRational());
}

bool LabeledMatrix::is_zero() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const GaussianRational& e) { return e.is_zero(); });
}

LabeledMatrix LabeledMatrix::identity(const std::vector<std::string>& labels) {
    LabeledMatrix m(labels, labels);
    for (int i = 0; i < m.nrows(); ++i) m.at(i, i) = GaussianRational(1);
    return m;
}

std::string LabeledMatrix::dump() const {
    std::vector<std::string> cells;
    cells.reserve(entries.size());
    size_t width = 1;
    for (const auto& e : entries) {
        cells.push_back(e.str());
        width = std::max(width, cells.back().size());
    }
    std::ostringstream out;
    for (int i = 0; i < nrows(); ++i) {
        out << row_labels[i] << " |";
        for (int j = 0; j < ncols(); ++j) {
            const std::string& c = cells[static_cast<size_t>(i) * col_labels.size() + j];
            out << ' ' << std::string(width - c.size(), ' ') << c;
        }
        out << '\n';
    }
    return out.str();
}

LabeledMatrix rref_serial(const LabeledMatrix& m) { return rref_impl(m, Mode::serial); }
LabeledMatrix rref_parallel(const LabeledMatrix& m) { return rref_impl(m, Mode::parallel); }

LabeledMatrix rref(const LabeledMatrix& m) {
    // Parallelism only pays off once rows are long enough to amortise the
    // fork/join; below the cutoff use the serial kernel.
    if (m.entries.size() >= 4096) return rref_parallel(m);
    return rref_serial(m);
}

int rank(const LabeledMatrix& m) {
    LabeledMatrix r = rref(m);
    int rk = 0;
    for (int i = 0; i < r.nrows(); ++i) {
        bool nonzero = false;
        for (int j = 0; j < r.ncols(); ++j) {
            if (!r.at(i, j).is_zero()) {
                nonzero = true;
                break;
            }
        }
        if (nonzero) ++rk;
    }
    return rk;
}

std::vector<std::vector<GaussianRational>> kernel_basis(const LabeledMatrix& m) {
    const int nc = m.ncols();
    LabeledMatrix r = rref(m);
    std::vector<int> pivot_of_col(nc, -1);
    int row = 0;
    for (int col = 0; col < nc && row < r.nrows(); ++col) {
        if (!r.at(row, col).is_zero()) {
            pivot_of_col[col] = row;
            ++row;
        }
    }
    std::vector<std::vector<GaussianRational>> basis;
    for (int free = 0; free < nc; ++free) {
        if (pivot_of_col[free] >= 0) continue;
        std::vector<GaussianRational> v(nc);
        v[free] = GaussianRational(1);
        for (int col = 0; col < free; ++col) {
            if (pivot_of_col[col] >= 0) v[col] = -r.at(pivot_of_col[col], free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

LabeledMatrix transpose(const LabeledMatrix& m) {
    LabeledMatrix t(m.col_labels, m.row_labels);
    for (int i = 0; i < m.nrows(); ++i)
        for (int j = 0; j < m.ncols(); ++j) t.at(j, i) = m.at(i, j);
    return t;
}

LabeledMatrix hconcat(const LabeledMatrix& a, const LabeledMatrix& b) {
    check_equal_labels(a.row_labels, b.row_labels, "hconcat");
    std::vector<std::string> cols = a.col_labels;
    cols.insert(cols.end(), b.col_labels.begin(), b.col_labels.end());
    LabeledMatrix m(a.row_labels, std::move(cols));
    for (int i = 0; i < m.nrows(); ++i) {
        for (int j = 0; j < a.ncols(); ++j) m.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.ncols(); ++j) m.at(i, a.ncols() + j) = b.at(i, j);
    }
    return m;
}

LabeledMatrix vconcat(const LabeledMatrix& a, const LabeledMatrix& b) {
    check_equal_labels(a.col_labels, b.col_labels, "vconcat");
    std::vector<std::string> rows = a.row_labels;
    rows.insert(rows.end(), b.row_labels.begin(), b.row_labels.end());
    LabeledMatrix m(std::move(rows), a.col_labels);
    for (int j = 0; j < m.ncols(); ++j) {
        for (int i = 0; i < a.nrows(); ++i) m.at(i, j) = a.at(i, j);
        for (int i = 0; i < b.nrows(); ++i) m.at(a.nrows() + i, j) = b.at(i, j);
    }
    return m;
}

LabeledMatrix compose(const LabeledMatrix& a, const LabeledMatrix& b) {
    check_equal_labels(a.col_labels, b.row_labels, "compose");
    LabeledMatrix m(a.row_labels, b.col_labels);
    for (int i = 0; i < a.nrows(); ++i) {
        for (int k = 0; k < a.ncols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < b.ncols(); ++j) {
                if (b.at(k, j).is_zero()) continue;
                m.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        }
    }
    return m;
}

LabeledMatrix columns_matrix(const std::vector<std::string>& labels,
                             const std::vector<std::vector<GaussianRational>>& vecs,
                             const std::string& col_prefix) {
    std::vector<std::string> cols;
    cols.reserve(vecs.size());
    for (size_t j = 0; j < vecs.size(); ++j) cols.push_back(col_prefix + std::to_string(j));
    LabeledMatrix m(labels, std::move(cols));
    for (size_t j = 0; j < vecs.size(); ++j) {
        assert(vecs[j].size() == labels.size());
        for (size_t i = 0; i < labels.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(j)) = vecs[j][i];
    }
    return m;
}

} // namespace bigolin
