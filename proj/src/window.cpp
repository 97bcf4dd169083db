#include "bigolin/window.hpp"

#include "bigolin/error.hpp"

#include <algorithm>
#include <cassert>

namespace bigolin {

std::vector<std::pair<int, int>> window_blocks(int n, int p, int q, int k) {
    std::vector<std::pair<int, int>> blocks;
    if (k <= p + q) {
        for (int r = std::max(0, k - q); r <= std::min(p, k); ++r) blocks.emplace_back(r, k - r);
    } else {
        for (int r = std::max(p + 1, k + 1 - n); r <= std::min(n, k - q); ++r)
            blocks.emplace_back(r, k + 1 - r);
    }
    return blocks;
}

std::vector<std::string> window_labels(const DoubleComplex& c, int p, int q, int k) {
    std::vector<std::string> labels;
    for (auto [r, s] : window_blocks(c.n, p, q, k)) {
        const auto& b = c.basis_at(r, s);
        labels.insert(labels.end(), b.begin(), b.end());
    }
    return labels;
}

namespace {

void check_window_args(const DoubleComplex& c, int p, int q) {
    if (c.almost)
        throw Error(Error::Kind::unsupported,
                    "window complexes are defined for integrable structures only (mu/mubar present)");
    if (p < -1 || p > c.n || q < -1 || q > c.n)
        throw Error(Error::Kind::precondition, "window bidegree out of range -1..n");
}

} // namespace

LabeledMatrix window_delta(const DoubleComplex& c, int p, int q, int k) {
    check_window_args(c, p, q);
    const auto src = window_blocks(c.n, p, q, k);
    const auto dst = window_blocks(c.n, p, q, k + 1);
    LabeledMatrix m(window_labels(c, p, q, k + 1), window_labels(c, p, q, k));
    if (m.nrows() == 0 || m.ncols() == 0) return m;

    if (k == p + q) {
        // Middle differential: del after delbar, (p,q) -> (p+1,q+1).
        LabeledMatrix mid = compose(c.del_at(p, q + 1), c.delbar_at(p, q));
        assert(mid.nrows() == m.nrows() && mid.ncols() == m.ncols());
#ifndef NDEBUG
        // Sign convention self-check: del.delbar = -delbar.del.
        LabeledMatrix other = compose(c.delbar_at(p + 1, q), c.del_at(p, q));
        for (size_t i = 0; i < other.entries.size(); ++i) {
            assert((mid.entries[i] + other.entries[i]).is_zero());
        }
#endif
        return mid;
    }

    std::vector<int> dst_off(dst.size(), 0);
    for (size_t b = 1; b < dst.size(); ++b)
        dst_off[b] = dst_off[b - 1] + c.dim(dst[b - 1].first, dst[b - 1].second);
    auto place = [&](const LabeledMatrix& piece, int col_off, int tr, int ts) {
        for (size_t b = 0; b < dst.size(); ++b) {
            if (dst[b] != std::make_pair(tr, ts)) continue;
            for (int i = 0; i < piece.nrows(); ++i)
                for (int j = 0; j < piece.ncols(); ++j)
                    m.at(dst_off[b] + i, col_off + j) = piece.at(i, j);
            return;
        }
    };
    int col_off = 0;
    for (auto [r, s] : src) {
        place(c.del_at(r, s), col_off, r + 1, s);
        place(c.delbar_at(r, s), col_off, r, s + 1);
        col_off += c.dim(r, s);
    }
    return m;
}

const std::vector<std::pair<int, int>>& Window::blocks(int k) const {
    static const std::vector<std::pair<int, int>> none;
    if (k < k_lo || k > k_hi()) return none;
    return blocks_[k - k_lo];
}

const std::vector<std::string>& Window::space_labels(int k) const {
    static const std::vector<std::string> none;
    if (k < k_lo || k > k_hi()) return none;
    return labels_[k - k_lo];
}

int Window::space_dim(int k) const { return static_cast<int>(space_labels(k).size()); }

const LabeledMatrix& Window::delta(int k) const {
    static const LabeledMatrix none;
    if (k < k_lo || k > k_hi()) return none;
    return deltas_[k - k_lo];
}

Window build_window(const DoubleComplex& c, int p, int q) {
    check_window_args(c, p, q);
    Window w;
    w.n = c.n;
    w.p = p;
    w.q = q;
    const int count = w.k_hi() - Window::k_lo + 1;
    w.blocks_.resize(count);
    w.labels_.resize(count);
    w.deltas_.resize(count);
    for (int k = Window::k_lo; k <= w.k_hi(); ++k) {
        w.blocks_[k - Window::k_lo] = window_blocks(c.n, p, q, k);
        w.labels_[k - Window::k_lo] = window_labels(c, p, q, k);
        w.deltas_[k - Window::k_lo] = window_delta(c, p, q, k);
    }
#ifndef NDEBUG
    // delta.delta = 0 at every level; exact, so any failure is a builder bug
    // or an invalid input complex.
    for (int k = Window::k_lo; k < w.k_hi(); ++k) {
        if (w.delta(k).ncols() == 0 || w.delta(k + 1).nrows() == 0) continue;
        assert(compose(w.delta(k + 1), w.delta(k)).is_zero());
    }
#endif
    return w;
}

bool window_space_identity_check(int n, int p, int q, int k) {
    if (p < 0 || p > n || q < 0 || q > n)
        throw Error(Error::Kind::precondition, "window space identity: need 0 <= p,q <= n");
    if (!(p + q < k && k <= 2 * n - 2))
        throw Error(Error::Kind::precondition, "window space identity: need p+q < k <= 2n-2");
    if (k - q > n || k - p > n)
        throw Error(Error::Kind::precondition, "window space identity: need k-q <= n and k-p <= n");
    return window_blocks(n, p, q, k) == window_blocks(n, k - q, k - p, k + 1);
}

} // namespace bigolin
