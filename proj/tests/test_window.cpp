#include "bigolin/window.hpp"

#include "bigolin/error.hpp"
#include "bigolin/forms.hpp"
#include "bigolin/iwasawa.hpp"

#include <doctest.h>

using namespace bigolin;

namespace {

using Blocks = std::vector<std::pair<int, int>>;

// Nonzero range of B^k per (p,q) regime. The doubly extreme windows with
// min = -1 and max = n have both rectangles empty.
bool expected_nonzero(int n, int p, int q, int k) {
    if (p == -1 && q == -1) return -1 <= k && k <= 2 * n - 1;
    if (p == n && q == n) return 0 <= k && k <= 2 * n;
    if (std::min(p, q) == -1 && std::max(p, q) == n) return false;
    if (std::min(p, q) == -1 && std::max(p, q) > -1) return std::max(p, q) <= k && k <= 2 * n - 1;
    if (std::max(p, q) == n && std::min(p, q) < n) return 0 <= k && k <= p + q;
    return 0 <= k && k <= 2 * n - 1;
}

} // namespace

TEST_CASE("block lists") {
    CHECK(window_blocks(3, 1, 1, 1) == Blocks{{0, 1}, {1, 0}});
    CHECK(window_blocks(3, 1, 1, 2) == Blocks{{1, 1}});          // single block at k = p+q
    CHECK(window_blocks(3, 1, 1, 3) == Blocks{{2, 2}});          // the middle target
    CHECK(window_blocks(3, 2, 3, 5) == Blocks{{2, 3}});
    CHECK(window_blocks(10, 4, 7, 9) == Blocks{{2, 7}, {3, 6}, {4, 5}});
    CHECK(window_blocks(10, 4, 7, 13) == Blocks{{5, 9}, {6, 8}});
    CHECK(window_blocks(3, -1, -1, -1) == Blocks{{0, 0}});
}

TEST_CASE("the (n,n) window is the full de Rham complex") {
    DoubleComplex c = build_complex(preset(DeformationClass::i)).complex;
    Window w = build_window(c, 3, 3);
    for (int k = 0; k <= 6; ++k) {
        TotalSlice slice = total_complex_slice(c, k);
        CHECK(w.space_labels(k) == slice.labels);
        CHECK(w.delta(k).entries == slice.d.entries);
    }
    CHECK(w.space_dim(7) == 0);
}

TEST_CASE("window differential of the (1,1) window") {
    DoubleComplex c = build_complex(preset(DeformationClass::i)).complex;
    Window w = build_window(c, 1, 1);
    CHECK(w.blocks(1) == Blocks{{0, 1}, {1, 0}});
    CHECK(w.space_dim(1) == 6);
    // delta^1 = del on the (0,1) block plus delbar on the (1,0) block
    LabeledMatrix expected = hconcat(c.del_at(0, 1), c.delbar_at(1, 0));
    CHECK(w.delta(1).entries == expected.entries);
    // delta^2 is the composite through (1,2) into (2,2)
    LabeledMatrix mid = compose(c.del_at(1, 2), c.delbar_at(1, 1));
    CHECK(w.delta(2).entries == mid.entries);
}

TEST_CASE("deltas compose to zero") {
    DoubleComplex c = build_complex(preset(DeformationClass::iii_a)).complex;
    for (int p = -1; p <= 3; ++p) {
        for (int q = -1; q <= 3; ++q) {
            Window w = build_window(c, p, q);
            for (int k = -1; k < 6; ++k) {
                if (w.space_dim(k) == 0 || w.space_dim(k + 2) == 0) continue;
                CHECK(compose(w.delta(k + 1), w.delta(k)).is_zero());
            }
        }
    }
}

TEST_CASE("space identity between adjacent windows") {
    CHECK(window_space_identity_check(5, 1, 2, 5));
    CHECK(window_blocks(5, 1, 2, 5) == Blocks{{2, 4}, {3, 3}});
    CHECK(window_blocks(5, 3, 4, 6) == Blocks{{2, 4}, {3, 3}});
    CHECK(window_space_identity_check(3, 1, 1, 3));
    CHECK_THROWS_AS(window_space_identity_check(3, 1, 1, 2), Error); // k = p+q
    CHECK_THROWS_AS(window_space_identity_check(3, 0, 0, 5), Error); // k - p > n
}

TEST_CASE("nonzero range rule") {
    DoubleComplex c = build_complex(torus_spec(3)).complex;
    for (int p = -1; p <= 3; ++p) {
        for (int q = -1; q <= 3; ++q) {
            Window w = build_window(c, p, q);
            for (int k = -2; k <= 7; ++k) {
                bool nonzero = k >= -1 && k <= 6 && w.space_dim(k) > 0;
                CHECK_MESSAGE(nonzero == expected_nonzero(3, p, q, k),
                              "p=" << p << " q=" << q << " k=" << k);
            }
        }
    }
}

TEST_CASE("duality block symmetry") {
    const int n = 3;
    for (int p = -1; p <= n - 1; ++p) {
        for (int q = -1; q <= n - 1; ++q) {
            for (int k = -1; k <= 2 * n - 1; ++k) {
                Blocks image;
                for (auto [r, s] : window_blocks(n, p, q, k)) image.emplace_back(n - s, n - r);
                std::sort(image.begin(), image.end());
                Blocks dual = window_blocks(n, n - q - 1, n - p - 1, 2 * n - k - 1);
                std::sort(dual.begin(), dual.end());
                CHECK(image == dual);
            }
        }
    }
}

TEST_CASE("almost-complex inputs are rejected") {
    LieAlgebraSpec spec;
    spec.n = 3;
    spec.d_of.assign(3, {});
    spec.d_of[0] = {{GaussianRational(1), 5, 6}};
    DoubleComplex c = build_complex(spec).complex;
    CHECK_THROWS_AS(build_window(c, 1, 1), Error);
}
