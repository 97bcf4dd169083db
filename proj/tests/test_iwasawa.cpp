#include "bigolin/iwasawa.hpp"

#include "bigolin/cohomology.hpp"
#include "bigolin/error.hpp"

#include <doctest.h>

using namespace bigolin;

TEST_CASE("classifier") {
    const GaussianRational zero(0), one(1), i = GaussianRational::i();
    CHECK(classify({-one, zero, zero, zero, zero}) == DeformationClass::i);
    CHECK(classify({-one, one, zero, zero, zero}) == DeformationClass::ii_a);
    CHECK(classify({-one, one, i, zero, zero}) == DeformationClass::ii_b);
    CHECK(classify({-one, zero, one, -one, zero}) == DeformationClass::iii_a);
    CHECK(classify({-one, zero, one, GaussianRational(2), zero}) == DeformationClass::iii_b);

    SigmaParams iiib = {-one, zero, one, GaussianRational(2), zero};
    CHECK(determinant_Dtilde(iiib) == GaussianRational(2));
    CHECK(rank(matrix_S(iiib)) == 2);
    SigmaParams iib = {-one, one, i, zero, zero};
    CHECK(determinant_Dtilde(iib).is_zero());
    CHECK(rank(matrix_S(iib)) == 2);

    CHECK_THROWS_AS(classify({zero, one, zero, zero, zero}), Error);
}

TEST_CASE("presets classify to their own label") {
    for (DeformationClass cls : kAllClasses) CHECK(classify(preset_sigmas(cls)) == cls);
}

TEST_CASE("deformed structure constants") {
    // t = 0 gives the undeformed equations
    SigmaParams base = sigmas_from_deformation({});
    CHECK(base.s12 == GaussianRational(-1));
    CHECK(base.s11b.is_zero());
    CHECK(base.s22b.is_zero());

    // t21 only: d f3 = -f1^f2 + t21 f1^c1 exactly
    SigmaParams ii_a = sigmas_from_deformation({{}, {}, GaussianRational(1), {}});
    CHECK(ii_a.s12 == GaussianRational(-1));
    CHECK(ii_a.s11b == GaussianRational(1));
    CHECK(ii_a.s12b.is_zero());
    CHECK(ii_a.s21b.is_zero());
    CHECK(ii_a.s22b.is_zero());

    // a degenerate parameter matrix is rejected
    GaussianRational one(1);
    CHECK_THROWS_AS(sigmas_from_deformation({one, GaussianRational(), GaussianRational(), one}),
                    Error);
}

TEST_CASE("every preset passes the axiom check") {
    for (DeformationClass cls : kAllClasses) {
        BuildResult built = build_complex(preset(cls));
        CHECK(built.warnings.empty());
        CHECK(verify_axioms(built.complex).ok());
    }
}

TEST_CASE("published window table") {
    GoldenTableRun run = golden_table();
    for (int c = 0; c < 5; ++c)
        for (int t = 0; t < 7; ++t)
            CHECK_MESSAGE(run.computed[c][t] == kGoldenWindowTable[c][t],
                          "class " << class_name(kAllClasses[c]) << " column " << t);
    CHECK(run.matches());
}

TEST_CASE("published multiplicities and full consistency") {
    GoldenZigzagRun run = golden_zigzags();
    CHECK(run.iib_matches_published);
    for (const auto& pc : run.classes) {
        CHECK_MESSAGE(pc.t_times_m_matches, class_name(pc.label));
        CHECK(pc.nonnegative);
        CHECK(pc.d_component == 0);
    }
    CHECK(run.all_consistent());

    for (int i = 0; i < zz::kLetters; ++i)
        CHECK(run.classes[2].multiplicities[i] == kGoldenMultiplicitiesIIb[i]);
}

TEST_CASE("window duality on every preset") {
    for (DeformationClass cls : kAllClasses) {
        DoubleComplex c = build_complex(preset(cls)).complex;
        for (auto [p, q, k] : kCanonicalTriples) {
            CHECK(bigolin_dim(c, p, q, k) == bigolin_dim(c, 3 - q - 1, 3 - p - 1, 2 * 3 - 1 - k));
            CHECK(bigolin_dim(c, p, q, k) == bigolin_dim(c, q, p, k));
        }
    }
}

TEST_CASE("classes differ exactly where the table says") {
    GoldenTableRun run = golden_table();
    // (ii.a) and (iii.a) differ only in the h3_13 column
    for (int t = 0; t < 7; ++t) {
        if (t == 3)
            CHECK(run.computed[1][t] != run.computed[3][t]);
        else
            CHECK(run.computed[1][t] == run.computed[3][t]);
    }
}
