#pragma once

#include "bigolin/rational.hpp"

#include <string>
#include <vector>

namespace bigolin {

// Dense exact matrix over Q(i) with named row/column bases. Columns index the
// domain, rows the codomain: column j holds the image of domain basis j.
struct LabeledMatrix {
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    std::vector<GaussianRational> entries; // row-major, rows*cols

    LabeledMatrix() = default;
    LabeledMatrix(std::vector<std::string> rows, std::vector<std::string> cols);

    int nrows() const { return static_cast<int>(row_labels.size()); }
    int ncols() const { return static_cast<int>(col_labels.size()); }

    GaussianRational& at(int i, int j) { return entries[static_cast<size_t>(i) * col_labels.size() + j]; }
    const GaussianRational& at(int i, int j) const {
        return entries[static_cast<size_t>(i) * col_labels.size() + j];
    }

    bool is_zero() const;

    static LabeledMatrix identity(const std::vector<std::string>& labels);

    // Aligned text grid, for debugging.
    std::string dump() const;
};

// Fraction-exact Gauss-Jordan reduction. Pivot: first nonzero entry in column
// order, so the reduced form is deterministic. `rref` picks the OpenMP row
// kernel for matrices above a size cutoff; `rref_serial` is the reference
// implementation and must produce identical output.
LabeledMatrix rref(const LabeledMatrix& m);
LabeledMatrix rref_serial(const LabeledMatrix& m);
LabeledMatrix rref_parallel(const LabeledMatrix& m);

int rank(const LabeledMatrix& m);

// Exact basis of the right null space; size ncols - rank. Each vector is in
// column coordinates.
std::vector<std::vector<GaussianRational>> kernel_basis(const LabeledMatrix& m);

LabeledMatrix transpose(const LabeledMatrix& m);

// Block assembly. Label lists must match where glued; mismatches raise
// Error::Kind::label_mismatch naming the offending label.
LabeledMatrix hconcat(const LabeledMatrix& a, const LabeledMatrix& b);
LabeledMatrix vconcat(const LabeledMatrix& a, const LabeledMatrix& b);

// compose(a, b) = a after b; requires cols(a) == rows(b) as ordered lists.
LabeledMatrix compose(const LabeledMatrix& a, const LabeledMatrix& b);

// Matrix whose columns are the given vectors over the row space `labels`.
LabeledMatrix columns_matrix(const std::vector<std::string>& labels,
                             const std::vector<std::vector<GaussianRational>>& vecs,
                             const std::string& col_prefix = "v");

} // namespace bigolin
