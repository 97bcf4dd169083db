#pragma once

#include "bigolin/forms.hpp"
#include "bigolin/zigzag.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace bigolin {

// Structure constants of d f3 for the Heisenberg-type family with
// d f1 = d f2 = 0:
//   d f3 = s12 f1^f2 + s11b f1^c1 + s12b f1^c2 + s21b f2^c1 + s22b f2^c2.
struct SigmaParams {
    GaussianRational s12, s11b, s12b, s21b, s22b;
};

enum class DeformationClass { i, ii_a, ii_b, iii_a, iii_b };

inline constexpr std::array<DeformationClass, 5> kAllClasses = {
    DeformationClass::i, DeformationClass::ii_a, DeformationClass::ii_b, DeformationClass::iii_a,
    DeformationClass::iii_b};

std::string class_name(DeformationClass c); // "i", "ii.a", ...
std::optional<DeformationClass> class_from_name(std::string_view name);

// (i) iff all four mixed constants vanish; otherwise (ii.*) when the 2x2
// determinant D~ = s21b*s12b - s22b*s11b is zero and (iii.*) when it is not;
// sub-label a/b by the rank (1 or 2) of the associated 2x4 matrix S.
// Requires s12 != 0.
DeformationClass classify(const SigmaParams& s);

GaussianRational determinant_Dtilde(const SigmaParams& s);
LabeledMatrix matrix_S(const SigmaParams& s); // 2x4

// Deformation parameters of the complex structure: the deformed coframe is
//   f1 = e1 + t11 cbar1 + t12 cbar2,  f2 = e2 + t21 cbar1 + t22 cbar2,
//   f3 = e3 - det(T) cbar3
// over the base algebra with d e3 = -e1^e2. Any T with det(I - T conj(T))
// nonzero is admissible and leaves the underlying real algebra unchanged.
struct DeformationParams {
    GaussianRational t11, t12, t21, t22;
};

// Exact structure constants of d f3 in the deformed coframe, normalized so
// that s12 = -1. The (0,2)-component cancels identically (integrability).
SigmaParams sigmas_from_deformation(const DeformationParams& t);

DeformationParams preset_deformation(DeformationClass c);
SigmaParams preset_sigmas(DeformationClass c);
LieAlgebraSpec family_spec(const SigmaParams& s); // n = 3, d f1 = d f2 = 0
LieAlgebraSpec preset(DeformationClass c);

LieAlgebraSpec torus_spec(int n); // abelian: every d f_i = 0

// Published values for the five preset classes: the seven window invariants
// h^1_{1,1}, h^1_{1,2}, h^2_{1,2}, h^3_{1,3}, h^3_{2,2}, h^3_{2,3}, h^4_{2,3}
// per class, and the class (ii.b) zigzag multiplicities A..S.
extern const std::array<std::tuple<int, int, int>, 7> kCanonicalTriples;
extern const int kGoldenWindowTable[5][7];
extern const long kGoldenMultiplicitiesIIb[zz::kLetters];

struct GoldenTableRun {
    std::array<std::array<int, 7>, 5> computed{};
    bool matches() const;
};
GoldenTableRun golden_table(); // computes the 5x7 table from the presets

struct GoldenZigzagRun {
    struct PerClass {
        DeformationClass label;
        zz::Invariants22 invariants{};
        zz::MultiplicityVector multiplicities{};
        bool t_times_m_matches = false; // T*m reproduces the engine 22-vector
        bool nonnegative = false;
        long d_component = 0;
    };
    std::array<PerClass, 5> classes;
    bool iib_matches_published = false;
    bool all_consistent() const;
};
GoldenZigzagRun golden_zigzags();

} // namespace bigolin
