#pragma once

#include "bigolin/double_complex.hpp"

#include <utility>
#include <vector>

namespace bigolin {

// The graded complex (B^k, delta^k) cut out of a double complex by a bidegree
// (p,q) with -1 <= p,q <= n. Degrees k <= p+q collect the blocks
// {(r,s) : r+s = k, 0 <= r <= p, 0 <= s <= q}; degrees k > p+q collect
// {(r,s) : r+s = k+1, p < r <= n, q < s <= n}. Blocks are listed by
// ascending r. The differential projects d inside the lower range, is the
// composite del.delbar at k = p+q, and the full d above.
struct Window {
    int n = 0, p = 0, q = 0;

    // Index space for k runs -1..2n (k = -1 is only nonzero for p = q = -1).
    static constexpr int k_lo = -1;
    int k_hi() const { return 2 * n; }

    const std::vector<std::pair<int, int>>& blocks(int k) const;
    const std::vector<std::string>& space_labels(int k) const;
    int space_dim(int k) const;
    const LabeledMatrix& delta(int k) const; // B^k -> B^{k+1}

    std::vector<std::vector<std::pair<int, int>>> blocks_;
    std::vector<std::vector<std::string>> labels_;
    std::vector<LabeledMatrix> deltas_; // deltas_[k - k_lo] maps B^k -> B^{k+1}
};

// Block list of B^k_{p,q} alone; no complex needed (shape-level checks).
std::vector<std::pair<int, int>> window_blocks(int n, int p, int q, int k);

std::vector<std::string> window_labels(const DoubleComplex& c, int p, int q, int k);

// The single differential B^k -> B^{k+1} of the (p,q) window, without
// materializing the rest of the complex.
LabeledMatrix window_delta(const DoubleComplex& c, int p, int q, int k);

// Requires an integrable complex; presence of mu/mubar raises
// Error::Kind::unsupported. delta.delta = 0 is asserted during the build.
Window build_window(const DoubleComplex& c, int p, int q);

// True iff B^k_{p,q} and B^{k+1}_{k-q,k-p} have identical block lists.
// Preconditions (0 <= p,q <= n, p+q < k <= 2n-2, k-q <= n, k-p <= n) raise
// Error::Kind::precondition.
bool window_space_identity_check(int n, int p, int q, int k);

} // namespace bigolin
