#include "bigolin/iwasawa.hpp"

#include "bigolin/cohomology.hpp"
#include "bigolin/error.hpp"

#include <algorithm>
#include <cassert>

namespace bigolin {

std::string class_name(DeformationClass c) {
    switch (c) {
        case DeformationClass::i: return "i";
        case DeformationClass::ii_a: return "ii.a";
        case DeformationClass::ii_b: return "ii.b";
        case DeformationClass::iii_a: return "iii.a";
        case DeformationClass::iii_b: return "iii.b";
    }
    return "?";
}

std::optional<DeformationClass> class_from_name(std::string_view name) {
    for (DeformationClass c : kAllClasses)
        if (class_name(c) == name) return c;
    return std::nullopt;
}

GaussianRational determinant_Dtilde(const SigmaParams& s) {
    return s.s21b * s.s12b - s.s22b * s.s11b;
}

LabeledMatrix matrix_S(const SigmaParams& s) {
    LabeledMatrix m({"row1", "row2"}, {"x1", "x2", "x3", "x4"});
    m.at(0, 0) = s.s11b.conj();
    m.at(0, 1) = s.s22b.conj();
    m.at(0, 2) = s.s12b.conj();
    m.at(0, 3) = s.s21b.conj();
    m.at(1, 0) = s.s11b;
    m.at(1, 1) = s.s22b;
    m.at(1, 2) = s.s21b;
    m.at(1, 3) = s.s12b;
    return m;
}

DeformationClass classify(const SigmaParams& s) {
    if (s.s12.is_zero())
        throw Error(Error::Kind::precondition, "classify: s12 must be nonzero for the family");
    const bool mixed_zero =
        s.s11b.is_zero() && s.s12b.is_zero() && s.s21b.is_zero() && s.s22b.is_zero();
    if (mixed_zero) return DeformationClass::i;
    const bool degenerate = determinant_Dtilde(s).is_zero();
    const int rk = rank(matrix_S(s));
    assert(rk == 1 || rk == 2);
    if (degenerate) return rk == 1 ? DeformationClass::ii_a : DeformationClass::ii_b;
    return rk == 1 ? DeformationClass::iii_a : DeformationClass::iii_b;
}

namespace {

using Mat2 = std::array<std::array<GaussianRational, 2>, 2>;

Mat2 mul2(const Mat2& a, const Mat2& b) {
    Mat2 r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return r;
}

GaussianRational det2(const Mat2& a) { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }

Mat2 inv2(const Mat2& a) {
    GaussianRational d = det2(a);
    if (d.is_zero())
        throw Error(Error::Kind::precondition,
                    "deformation parameters degenerate: det(I - T conj(T)) = 0");
    GaussianRational di = d.inverse();
    return {{{a[1][1] * di, -a[0][1] * di}, {-a[1][0] * di, a[0][0] * di}}};
}

Mat2 conj2(const Mat2& a) {
    Mat2 r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = a[i][j].conj();
    return r;
}

// A 1-form on the closed 4-dim part, in the deformed coframe
// (f1, f2, fbar1, fbar2).
using Vec4 = std::array<GaussianRational, 4>;

// Wedge of two such 1-forms, as coefficients of
// (f12, f1 fbar1, f1 fbar2, f2 fbar1, f2 fbar2, fbar1 fbar2).
std::array<GaussianRational, 6> wedge4(const Vec4& x, const Vec4& y) {
    auto minor = [&](int i, int j) { return x[i] * y[j] - x[j] * y[i]; };
    return {minor(0, 1), minor(0, 2), minor(0, 3), minor(1, 2), minor(1, 3), minor(2, 3)};
}

} // namespace

SigmaParams sigmas_from_deformation(const DeformationParams& t) {
    const Mat2 T = {{{t.t11, t.t12}, {t.t21, t.t22}}};
    const Mat2 Tc = conj2(T);
    const GaussianRational one(1);
    const Mat2 id = {{{one, GaussianRational(0)}, {GaussianRational(0), one}}};

    auto sub = [](const Mat2& a, const Mat2& b) {
        Mat2 r{};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r[i][j] = a[i][j] - b[i][j];
        return r;
    };
    // Invert the coframe change: e_i = P f + Q fbar, ebar_i = Sc f + R fbar.
    const Mat2 P = inv2(sub(id, mul2(T, Tc)));
    const Mat2 Q = mul2(P, T); // with a minus sign applied below
    const Mat2 R = inv2(sub(id, mul2(Tc, T)));
    const Mat2 Sc = mul2(R, Tc);

    auto e_row = [&](int i) {
        return Vec4{P[i][0], P[i][1], -Q[i][0], -Q[i][1]};
    };
    auto ebar_row = [&](int i) {
        return Vec4{-Sc[i][0], -Sc[i][1], R[i][0], R[i][1]};
    };

    // d f3 = -e1^e2 + det(T) ebar1^ebar2, expanded in the f coframe.
    auto e12 = wedge4(e_row(0), e_row(1));
    auto eb12 = wedge4(ebar_row(0), ebar_row(1));
    const GaussianRational D = det2(T);
    std::array<GaussianRational, 6> w{};
    for (int i = 0; i < 6; ++i) w[i] = -e12[i] + D * eb12[i];
    if (!w[5].is_zero())
        throw Error(Error::Kind::precondition,
                    "deformation did not cancel the (0,2)-component; not integrable");

    // Normalize so that the f1^f2 coefficient is -1.
    if (w[0].is_zero())
        throw Error(Error::Kind::precondition, "deformation degenerates the f1^f2 coefficient");
    GaussianRational scale = (-w[0]).inverse();
    return {w[0] * scale, w[1] * scale, w[2] * scale, w[3] * scale, w[4] * scale};
}

DeformationParams preset_deformation(DeformationClass c) {
    const GaussianRational zero(0), one(1);
    const GaussianRational half(Rational(1, 2));
    const GaussianRational half_i(Rational(0), Rational(1, 2));
    switch (c) {
        case DeformationClass::i: return {zero, zero, zero, zero};
        case DeformationClass::ii_a: return {zero, zero, one, zero};
        case DeformationClass::ii_b: return {zero, zero, half, half_i};
        case DeformationClass::iii_a: return {half, zero, zero, half};
        case DeformationClass::iii_b: return {half, zero, zero, GaussianRational(Rational(1, 3))};
    }
    return {};
}

SigmaParams preset_sigmas(DeformationClass c) {
    return sigmas_from_deformation(preset_deformation(c));
}

LieAlgebraSpec family_spec(const SigmaParams& s) {
    const int n = 3;
    LieAlgebraSpec spec;
    spec.n = n;
    spec.d_of.assign(n, {});
    // generator encoding: f1=1, f2=2, f3=3, c1=4, c2=5, c3=6
    auto add = [&](const GaussianRational& c, int a, int b) {
        if (!c.is_zero()) spec.d_of[2].push_back({c, a, b});
    };
    add(s.s12, 1, 2);
    add(s.s11b, 1, 4);
    add(s.s12b, 1, 5);
    add(s.s21b, 2, 4);
    add(s.s22b, 2, 5);
    return spec;
}

LieAlgebraSpec preset(DeformationClass c) {
    SigmaParams s = preset_sigmas(c);
    assert(classify(s) == c);
    return family_spec(s);
}

LieAlgebraSpec torus_spec(int n) {
    LieAlgebraSpec spec;
    spec.n = n;
    spec.d_of.assign(n, {});
    return spec;
}

const std::array<std::tuple<int, int, int>, 7> kCanonicalTriples = {
    std::tuple{1, 1, 1}, {1, 2, 1}, {1, 2, 2}, {1, 3, 3}, {2, 2, 3}, {2, 3, 3}, {2, 3, 4}};

const int kGoldenWindowTable[5][7] = {
    {6, 5, 8, 7, 8, 9, 6}, // (i)
    {5, 4, 7, 6, 8, 9, 6}, // (ii.a)
    {4, 4, 7, 6, 8, 9, 6}, // (ii.b)
    {5, 4, 7, 5, 8, 9, 6}, // (iii.a)
    {4, 4, 7, 5, 8, 9, 6}, // (iii.b)
};

const long kGoldenMultiplicitiesIIb[zz::kLetters] = {2, 0, 1, 0, 0, 0, 0, 1, 0,
                                                     1, 0, 0, 2, 1, 0, 1, 4};

bool GoldenTableRun::matches() const {
    for (int c = 0; c < 5; ++c)
        for (int t = 0; t < 7; ++t)
            if (computed[c][t] != kGoldenWindowTable[c][t]) return false;
    return true;
}

GoldenTableRun golden_table() {
    GoldenTableRun run;
    for (size_t ci = 0; ci < kAllClasses.size(); ++ci) {
        DoubleComplex c = build_complex(preset(kAllClasses[ci])).complex;
        for (size_t ti = 0; ti < kCanonicalTriples.size(); ++ti) {
            auto [p, q, k] = kCanonicalTriples[ti];
            run.computed[ci][ti] = bigolin_dim(c, p, q, k);
        }
    }
    return run;
}

bool GoldenZigzagRun::all_consistent() const {
    return iib_matches_published &&
           std::all_of(classes.begin(), classes.end(), [](const PerClass& pc) {
               return pc.t_times_m_matches && pc.nonnegative && pc.d_component == 0;
           });
}

GoldenZigzagRun golden_zigzags() {
    GoldenZigzagRun run;
    for (size_t ci = 0; ci < kAllClasses.size(); ++ci) {
        auto& pc = run.classes[ci];
        pc.label = kAllClasses[ci];
        DoubleComplex c = build_complex(preset(pc.label)).complex;
        pc.invariants = zz::engine_invariants22(c);
        zz::Invariants17 v17 = zz::restrict_to_17(pc.invariants);
        zz::InversionResult inv = zz::multiplicities_from_cohomology(v17);
        pc.multiplicities = inv.m;
        pc.nonnegative = inv.consistent();
        pc.t_times_m_matches = zz::apply_T(inv.m) == pc.invariants;
        pc.d_component = zz::D_expression(v17);
        assert(pc.d_component == inv.m[zz::letter_index('D')]);
    }
    const auto& iib = run.classes[2];
    run.iib_matches_published = std::equal(iib.multiplicities.begin(), iib.multiplicities.end(),
                                           std::begin(kGoldenMultiplicitiesIIb));
    return run;
}

} // namespace bigolin
