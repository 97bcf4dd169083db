#pragma once

#include "bigolin/labeled_matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bigolin {

// Bounded double complex of (p,q)-spaces, 0 <= p,q <= n. The integrable case
// carries del (bidegree (1,0)) and delbar (bidegree (0,1)); the almost-complex
// case additionally carries mu ((2,-1)) and mubar ((-1,2)). Spaces outside the
// grid have dimension 0 and differentials into/out of them are empty matrices.
//
// The optional real structure sigma[p][q] : A^{p,q} -> A^{q,p} is antilinear:
// it is applied after entrywise conjugation of coordinates, so the stored
// matrix itself is plain linear data.
struct DoubleComplex {
    int n = 0;
    std::vector<std::vector<std::vector<std::string>>> basis; // [p][q] -> labels
    std::vector<std::vector<LabeledMatrix>> del;               // (p,q) -> (p+1,q)
    std::vector<std::vector<LabeledMatrix>> delbar;            // (p,q) -> (p,q+1)
    bool almost = false;
    std::vector<std::vector<LabeledMatrix>> mu;    // (p,q) -> (p+2,q-1), almost only
    std::vector<std::vector<LabeledMatrix>> mubar; // (p,q) -> (p-1,q+2), almost only
    bool has_real_structure = false;
    std::vector<std::vector<LabeledMatrix>> sigma; // (p,q) -> (q,p)

    // Grid of empty spaces with zero differentials, ready to be filled in.
    static DoubleComplex empty(int n, bool almost = false, bool real_structure = false);

    bool in_grid(int p, int q) const { return p >= 0 && p <= n && q >= 0 && q <= n; }
    int dim(int p, int q) const {
        return in_grid(p, q) ? static_cast<int>(basis[p][q].size()) : 0;
    }
    const std::vector<std::string>& basis_at(int p, int q) const;

    // Differentials as maps (p,q) -> (p+dp,q+dq); zero-shaped matrices when
    // either end leaves the grid.
    LabeledMatrix del_at(int p, int q) const { return block(del, p, q, 1, 0); }
    LabeledMatrix delbar_at(int p, int q) const { return block(delbar, p, q, 0, 1); }
    LabeledMatrix mu_at(int p, int q) const { return block(mu, p, q, 2, -1); }
    LabeledMatrix mubar_at(int p, int q) const { return block(mubar, p, q, -1, 2); }
    LabeledMatrix sigma_at(int p, int q) const;

    // Once the bases are set, shapes all differential matrices accordingly
    // (zero entries). Builders then fill in columns.
    void shape_differentials();

private:
    LabeledMatrix block(const std::vector<std::vector<LabeledMatrix>>& grid, int p, int q, int dp,
                        int dq) const;
};

struct AxiomViolation {
    std::string identity; // e.g. "del.del", "del.delbar+delbar.del", "real.intertwine"
    int p = 0, q = 0;     // source bidegree of the composite
    std::string witness;  // basis label whose image breaks the identity
};

struct AxiomReport {
    std::vector<AxiomViolation> violations;
    bool ok() const { return violations.empty(); }
    std::string str() const;
};

// Checks del^2 = delbar^2 = del.delbar+delbar.del = 0 (integrable) or the
// seven bidegree components of d^2 = 0 (almost complex), plus involutivity
// and del/delbar intertwining of the real structure when present. Violations
// are data, not errors.
AxiomReport verify_axioms(const DoubleComplex& c);

// Block-diagonal direct sum; summands must share n. Labels are prefixed with
// the summand index to stay distinct.
DoubleComplex direct_sum(const std::vector<DoubleComplex>& cs);

struct TotalSlice {
    std::vector<std::string> labels; // basis of the degree-k part, blocks by ascending p
    LabeledMatrix d;                 // total differential into degree k+1
};

// Degree-k slice of the total complex, with d assembled from all components
// (mu/mubar included when present). Valid for 0 <= k <= 2n.
TotalSlice total_complex_slice(const DoubleComplex& c, int k);

} // namespace bigolin
