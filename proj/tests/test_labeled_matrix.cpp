#include "bigolin/labeled_matrix.hpp"

#include "bigolin/error.hpp"

#include <doctest.h>

#include <random>

using namespace bigolin;

namespace {

std::vector<std::string> labels(const char* prefix, int count) {
    std::vector<std::string> out;
    for (int i = 0; i < count; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

LabeledMatrix random_matrix(int rows, int cols, std::mt19937& rng) {
    LabeledMatrix m(labels("r", rows), labels("c", cols));
    std::uniform_int_distribution<int> num(-3, 3);
    for (auto& e : m.entries) e = GaussianRational(Rational(num(rng)), Rational(num(rng)));
    return m;
}

// Independent rank oracle: eliminate with columns visited in reverse order.
int rank_reversed_columns(const LabeledMatrix& m) {
    LabeledMatrix r = m;
    int nr = r.nrows(), nc = r.ncols();
    int pivot_row = 0;
    for (int col = nc - 1; col >= 0 && pivot_row < nr; --col) {
        int sel = -1;
        for (int i = pivot_row; i < nr; ++i)
            if (!r.at(i, col).is_zero()) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        for (int j = 0; j < nc; ++j) std::swap(r.at(sel, j), r.at(pivot_row, j));
        for (int i = 0; i < nr; ++i) {
            if (i == pivot_row || r.at(i, col).is_zero()) continue;
            GaussianRational f = r.at(i, col) / r.at(pivot_row, col);
            for (int j = 0; j < nc; ++j) r.at(i, j) -= f * r.at(pivot_row, j);
        }
        ++pivot_row;
    }
    return pivot_row;
}

} // namespace

TEST_CASE("rank basics") {
    CHECK(rank(LabeledMatrix::identity(labels("e", 2))) == 2);
    CHECK(rank(LabeledMatrix(labels("r", 3), labels("c", 4))) == 0);

    // the 2x4 matrix with rows (1,0,-i,0), (1,0,0,i)
    LabeledMatrix s(labels("r", 2), labels("c", 4));
    s.at(0, 0) = GaussianRational(1);
    s.at(0, 2) = -GaussianRational::i();
    s.at(1, 0) = GaussianRational(1);
    s.at(1, 3) = GaussianRational::i();
    CHECK(rank(s) == 2);
}

TEST_CASE("kernel basics") {
    CHECK(kernel_basis(LabeledMatrix::identity(labels("e", 3))).empty());

    LabeledMatrix row(labels("r", 1), labels("c", 2));
    row.at(0, 0) = GaussianRational(1);
    row.at(0, 1) = GaussianRational(1);
    auto ker = kernel_basis(row);
    REQUIRE(ker.size() == 1);
    // (1,-1) up to scale
    CHECK(ker[0][0] * GaussianRational(-1) == ker[0][1]);
}

TEST_CASE("rank and kernel on random matrices") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        LabeledMatrix m = random_matrix(5, 8, rng);
        int rk = rank(m);
        auto ker = kernel_basis(m);
        CHECK(rk + static_cast<int>(ker.size()) == 8);           // rank-nullity
        CHECK(rk == rank_reversed_columns(m));                   // independent elimination order
        CHECK(rk == rank(transpose(m)));
        for (const auto& v : ker) {
            for (int i = 0; i < m.nrows(); ++i) {
                GaussianRational acc;
                for (int j = 0; j < m.ncols(); ++j) acc += m.at(i, j) * v[j];
                REQUIRE(acc.is_zero()); // exact annihilation
            }
        }
    }
}

TEST_CASE("elimination is deterministic and the kernels agree") {
    std::mt19937 rng(23);
    LabeledMatrix m = random_matrix(20, 26, rng);
    CHECK(rref(m).entries == rref(m).entries);
    CHECK(rref_serial(m).entries == rref_parallel(m).entries);

    LabeledMatrix big = random_matrix(40, 60, rng); // above the parallel cutoff
    CHECK(rref_serial(big).entries == rref_parallel(big).entries);
}

TEST_CASE("block assembly") {
    LabeledMatrix a = LabeledMatrix::identity(labels("x", 2));
    LabeledMatrix b(labels("x", 2), labels("y", 3));
    CHECK(hconcat(a, b).ncols() == 5);
    CHECK(vconcat(b, LabeledMatrix::identity(labels("y", 3))).nrows() == 5);

    CHECK_THROWS_AS(hconcat(a, LabeledMatrix(labels("z", 2), labels("y", 3))), Error);
    try {
        compose(a, LabeledMatrix(labels("w", 2), labels("y", 3)));
        FAIL("expected a label mismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == Error::Kind::label_mismatch);
        CHECK(e.detail() == "x0");
    }

    std::mt19937 rng(5);
    LabeledMatrix m = random_matrix(3, 4, rng);
    CHECK(compose(LabeledMatrix::identity(m.row_labels), m).entries == m.entries);
}

TEST_CASE("debug dump aligns columns") {
    LabeledMatrix m(labels("row", 2), labels("col", 2));
    m.at(0, 0) = GaussianRational(Rational(1, 2), Rational(1));
    std::string text = m.dump();
    CHECK(text.find("1/2+1i") != std::string::npos);
    CHECK(text.find("row1") != std::string::npos);
}
