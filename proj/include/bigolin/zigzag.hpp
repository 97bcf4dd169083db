#pragma once

#include "bigolin/cohomology.hpp"
#include "bigolin/double_complex.hpp"

#include <array>
#include <string>
#include <vector>

namespace bigolin {
namespace zz {

// The n = 3 classification: 17 canonical indecomposable zigzags, named
// A..S (no J, K), every other zigzag being a conjugate or dual of these.
inline constexpr int kLetters = 17;
extern const std::array<const char*, kLetters> kLetterNames;
int letter_index(char letter); // -1 if not one of A..S

struct ZigzagArrow {
    std::pair<int, int> from, to;
    bool is_del = false; // del moves (p,q)->(p+1,q), delbar (p,q)->(p,q+1)
    friend auto operator<=>(const ZigzagArrow&, const ZigzagArrow&) = default;
};

// Connected alternating path of del/delbar arrows; a single dot is the
// length-one case. Kept normalized (sorted dots/arrows) so shapes compare
// structurally.
struct ZigzagShape {
    std::vector<std::pair<int, int>> dots;
    std::vector<ZigzagArrow> arrows;

    void normalize();
    friend bool operator==(const ZigzagShape&, const ZigzagShape&) = default;
};

const std::array<ZigzagShape, kLetters>& canonical_shapes();

ZigzagShape conjugate_shape(const ZigzagShape& z);
ZigzagShape dual_shape(const ZigzagShape& z, int n = 3);

// Distinct shapes in the closure of z under conjugation and duality (at most
// four), in a deterministic order starting from z.
std::vector<ZigzagShape> orbit(const ZigzagShape& z, int n = 3);

// 1 iff z, restricted to the thick region of the (p,q) window, is an odd
// zigzag with a strict majority of its dots in window degree k.
int contribution(const ZigzagShape& z, int p, int q, int k, int n = 3);

using MultiplicityVector = std::array<long, kLetters>;

// Direct sum, over each letter X, of m[X] copies of every distinct shape in
// the orbit of X, one basis vector per dot and arrow entries 1. The real
// structure pairs each shape with its conjugate orbit member.
DoubleComplex synthetic_complex(const MultiplicityVector& m);

// The 22 cohomological invariants in the fixed row order, and the
// 17-invariant subvector keeping those rows that suffice for inversion.
inline constexpr int kInvariants22 = 22;
inline constexpr int kInvariants17 = 17;
extern const std::array<const char*, kInvariants22> kInvariantNames22;
extern const std::array<int, kInvariants17> kKept17;         // indices into the 22 order
extern const std::array<const char*, kInvariants17> kInvariantNames17;

using Invariants22 = std::array<long, kInvariants22>;
using Invariants17 = std::array<long, kInvariants17>;

Invariants17 restrict_to_17(const Invariants22& v);

// Constant matrices: T maps multiplicities to the 22 invariants; UInv maps
// the 17 kept invariants back to multiplicities.
const LabeledMatrix& table_T();
const LabeledMatrix& table_U_inv();

Invariants22 apply_T(const MultiplicityVector& m);

// All 22 invariants of a complex, computed by the cohomology engine.
Invariants22 engine_invariants22(const DoubleComplex& c);

struct InversionResult {
    MultiplicityVector m{};
    std::vector<std::string> findings; // non-integer / negative entries
    bool consistent() const { return findings.empty(); }
};

// UInv * v17. Inconsistent outputs (not realizable by any complex) are
// reported as findings, never silently returned.
InversionResult multiplicities_from_cohomology(const Invariants17& v);

// The five dependent linear relations (the Euler-characteristic equality of
// the Frolicher-type identity plus the four expressions for the removed
// window invariants) and the Frolicher inequalities b^k <= h^k.
RelationReport consistency_relations(const Invariants22& v);

// D = -h01_d + h01_bc - b1 + h1_12; whether D > 0 is realizable on a compact
// 3-fold is open, so the value is only evaluated, never asserted positive.
long D_expression(const Invariants17& v);

// The stated ranks of the embedded tables and their submatrices.
struct RankFact {
    std::string name;
    int expected = 0, computed = 0;
    bool pass() const { return expected == computed; }
};
std::vector<RankFact> rank_facts();

} // namespace zz
} // namespace bigolin
