#include "bigolin/cohomology.hpp"

#include "bigolin/error.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace bigolin {

int quotient_dim(const LabeledMatrix& incoming, const LabeledMatrix& outgoing) {
    LabeledMatrix composite = compose(outgoing, incoming);
    if (!composite.is_zero()) {
        std::string witness;
        for (int j = 0; j < composite.ncols() && witness.empty(); ++j)
            for (int i = 0; i < composite.nrows(); ++i)
                if (!composite.at(i, j).is_zero()) {
                    witness = composite.col_labels[j];
                    break;
                }
        throw Error(Error::Kind::not_a_complex,
                    "consecutive maps do not compose to zero, witness " + witness, witness);
    }
    return (outgoing.ncols() - rank(outgoing)) - rank(incoming);
}

int betti(const DoubleComplex& c, int k) {
    TotalSlice out = total_complex_slice(c, k);
    if (k == 0) {
        LabeledMatrix zero_in({out.labels}, {});
        return quotient_dim(zero_in, out.d);
    }
    TotalSlice in = total_complex_slice(c, k - 1);
    return quotient_dim(in.d, out.d);
}

int dolbeault(const DoubleComplex& c, int p, int q) {
    return quotient_dim(c.delbar_at(p, q - 1), c.delbar_at(p, q));
}

int partial_cohom(const DoubleComplex& c, int p, int q) {
    return quotient_dim(c.del_at(p - 1, q), c.del_at(p, q));
}

int aeppli(const DoubleComplex& c, int p, int q) {
    LabeledMatrix incoming = hconcat(c.del_at(p - 1, q), c.delbar_at(p, q - 1));
    LabeledMatrix outgoing = compose(c.del_at(p, q + 1), c.delbar_at(p, q));
    return quotient_dim(incoming, outgoing);
}

int bott_chern(const DoubleComplex& c, int p, int q) {
    LabeledMatrix incoming = compose(c.del_at(p - 1, q), c.delbar_at(p - 1, q - 1));
    LabeledMatrix outgoing = vconcat(c.del_at(p, q), c.delbar_at(p, q));
    return quotient_dim(incoming, outgoing);
}

int bigolin_dim(const Window& w, int k) { return quotient_dim(w.delta(k - 1), w.delta(k)); }

int bigolin_dim(const DoubleComplex& c, int p, int q, int k) {
    if (k < Window::k_lo || k > 2 * c.n) return 0;
    LabeledMatrix outgoing = window_delta(c, p, q, k);
    if (k == Window::k_lo) {
        LabeledMatrix zero_in(window_labels(c, p, q, k), {});
        return quotient_dim(zero_in, outgoing);
    }
    return quotient_dim(window_delta(c, p, q, k - 1), outgoing);
}

int h1_B(const DoubleComplex& c) {
    // d : A^{0,0} -> A^{0,1} + A^{1,0}  (mu/mubar vanish there by bidegree)
    LabeledMatrix incoming = vconcat(c.delbar_at(0, 0), c.del_at(0, 0));
    LabeledMatrix outgoing = hconcat(c.del_at(0, 1), c.delbar_at(1, 0));
    return quotient_dim(incoming, outgoing);
}

int h_top_B(const DoubleComplex& c) {
    const int n = c.n;
    LabeledMatrix incoming = vconcat(c.delbar_at(n - 1, n - 1), c.del_at(n - 1, n - 1));
    LabeledMatrix outgoing = hconcat(c.del_at(n - 1, n), c.delbar_at(n, n - 1));
    return quotient_dim(incoming, outgoing);
}

int induced_map_rank(const DoubleComplex& c, int p, int q, int k) {
    if (!window_space_identity_check(c.n, p, q, k))
        throw Error(Error::Kind::precondition,
                    "induced map: B-spaces do not coincide for the given (p,q,k)");
    Window w1 = build_window(c, p, q);
    Window w2 = build_window(c, k - q, k - p);
    assert(w1.space_labels(k) == w2.space_labels(k + 1));

    auto ker = kernel_basis(w1.delta(k));
    LabeledMatrix ker_m = columns_matrix(w1.space_labels(k), ker, "k");
    const LabeledMatrix& img = w2.delta(k);

#ifndef NDEBUG
    // Well-definedness: kernel classes stay closed downstream, and the source
    // image is contained in the target image. Both are theorems; a failure
    // here means the engine is broken.
    if (ker_m.ncols() > 0) assert(compose(w2.delta(k + 1), ker_m).is_zero());
    assert(rank(img) == rank(hconcat(img, compose(w2.delta(k), // image of w2 contains
                                                  LabeledMatrix::identity(w2.space_labels(k))))));
    if (w1.delta(k - 1).ncols() > 0)
        assert(rank(img) == rank(hconcat(img, w1.delta(k - 1))));
#endif

    return rank(hconcat(ker_m, img)) - rank(img);
}

long invariant_count_formula(int n) {
    return 2L * n - 3 + static_cast<long>(n + 9) * (n - 1) * (n - 2) / 6;
}

std::vector<std::tuple<int, int, int>> enumerate_invariants(int n) {
    std::vector<std::tuple<int, int, int>> out;
    if (n < 3) return out;
    for (int p = 1; p <= n; ++p) {
        for (int q = p; q <= n; ++q) {
            if (p + q == 2 * n) continue;
            int k_min = std::max(p, q - 1);
            if (k_min == n - 1) k_min = n;
            for (int k = k_min; k <= p + q - 1; ++k) out.emplace_back(p, q, k);
        }
    }
    return out;
}

CohomologyProfile compute_profile(const DoubleComplex& c) {
    CohomologyProfile prof;
    prof.n = c.n;
    for (int k = 0; k <= 2 * c.n; ++k) prof.betti.push_back(betti(c, k));
    prof.h1_b = h1_B(c);
    prof.h_top_b = h_top_B(c);
    if (c.almost) return prof; // the bigraded families need integrability
    for (int p = 0; p <= c.n; ++p) {
        for (int q = 0; q <= c.n; ++q) {
            prof.dolbeault[{p, q}] = dolbeault(c, p, q);
            prof.partial[{p, q}] = partial_cohom(c, p, q);
            prof.aeppli[{p, q}] = aeppli(c, p, q);
            prof.bott_chern[{p, q}] = bott_chern(c, p, q);
        }
    }
    for (auto [p, q, k] : enumerate_invariants(c.n))
        prof.bigolin[{p, q, k}] = bigolin_dim(c, p, q, k);
    return prof;
}

namespace {

// All window dimensions h^k_{p,q}, cached; p,q in -1..n, k in -1..2n.
struct WindowTable {
    int n;
    std::vector<std::vector<std::vector<int>>> h;

    WindowTable(const DoubleComplex& c) : n(c.n) {
        h.assign(n + 2, std::vector<std::vector<int>>(n + 2, std::vector<int>(2 * n + 2, 0)));
        for (int p = -1; p <= n; ++p) {
            for (int q = -1; q <= n; ++q) {
                Window w = build_window(c, p, q);
                for (int k = Window::k_lo; k <= w.k_hi(); ++k) {
                    if (w.space_dim(k) == 0) {
                        at(p, q, k) = 0;
                    } else if (k == Window::k_lo) {
                        LabeledMatrix zero_in(w.space_labels(k), {});
                        at(p, q, k) = quotient_dim(zero_in, w.delta(k));
                    } else {
                        at(p, q, k) = bigolin_dim(w, k);
                    }
                }
            }
        }
    }
    int& at(int p, int q, int k) { return h[p + 1][q + 1][k + 1]; }
    int get(int p, int q, int k) const {
        if (p < -1 || p > n || q < -1 || q > n || k < -1 || k > 2 * n) return 0;
        return h[p + 1][q + 1][k + 1];
    }
};

} // namespace

EulerData euler_data(const DoubleComplex& c) {
    EulerData data;
    const int n = c.n;
    for (int p = 0; p <= n - 1; ++p) {
        for (int q = 0; q <= n - 1; ++q) {
            Window w = build_window(c, p, q);
            long chi = 0;
            for (int k = 0; k <= 2 * n - 1; ++k) {
                int hk = w.space_dim(k) == 0 ? 0 : bigolin_dim(w, k);
                chi += (k % 2 == 0) ? hk : -hk;
            }
            data.chi_pq[{p, q}] = chi;
        }
    }
    for (int p = 0; p <= n; ++p) {
        long chi = 0;
        for (int q = 0; q <= n; ++q) {
            int hpq = dolbeault(c, p, q);
            chi += (q % 2 == 0) ? hpq : -hpq;
        }
        data.chi_p[p] = chi;
    }
    return data;
}

bool RelationReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return c.pass; });
}

std::string RelationReport::str() const {
    std::ostringstream out;
    int failed = 0;
    for (const auto& c : checks) {
        if (!c.pass) ++failed;
        out << (c.pass ? "pass " : "FAIL ") << c.relation << " " << c.location << ": " << c.lhs
            << (c.is_inequality ? " >= " : " == ") << c.rhs << '\n';
    }
    out << checks.size() << " checks, " << failed << " failures\n";
    return out.str();
}

RelationReport relation_audit(const DoubleComplex& c) {
    if (c.almost)
        throw Error(Error::Kind::unsupported, "relation audit needs an integrable structure");
    if (!c.has_real_structure)
        throw Error(Error::Kind::precondition,
                    "relation audit needs a real structure (conjugation relations)");

    const int n = c.n;
    RelationReport report;
    WindowTable hw(c);

    std::vector<int> b;
    for (int k = 0; k <= 2 * n; ++k) b.push_back(betti(c, k));
    auto hd = [&](int p, int q) { return dolbeault(c, p, q); };

    auto loc = [](int p, int q, int k) {
        return "(p,q,k)=(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(k) + ")";
    };
    auto eq = [&](const std::string& name, const std::string& where, long lhs, long rhs) {
        report.checks.push_back({name, where, lhs, rhs, false, lhs == rhs});
    };
    auto geq = [&](const std::string& name, const std::string& where, long lhs, long rhs) {
        report.checks.push_back({name, where, lhs, rhs, true, lhs >= rhs});
    };

    for (int p = 0; p <= n; ++p) {
        for (int q = 0; q <= n; ++q) {
            int m = std::min(p, q);
            for (int k = 0; k < m; ++k) eq("deRham.low", loc(p, q, k), hw.get(p, q, k), b[k]);
            for (int k = n + std::max(p, q) + 1; k <= 2 * n - 1; ++k)
                eq("deRham.high", loc(p, q, k), hw.get(p, q, k), b[k + 1]);
            geq("deRham.inclusion", loc(p, q, m), hw.get(p, q, m), b[m]);
        }
    }
    for (int k = 0; k <= n; ++k) eq("dolbeault.column", loc(0, n, k), hw.get(0, n, k), hd(0, k));
    for (int q = 0; q <= n - 1; ++q)
        for (int k = 0; k <= q - 1; ++k)
            eq("dolbeault.column", loc(0, q, k), hw.get(0, q, k), hd(0, k));
    for (int k = n - 1; k <= 2 * n - 1; ++k)
        eq("dolbeault.column.high", loc(n - 1, -1, k), hw.get(n - 1, -1, k), hd(n, k + 1 - n));
    for (int q = 0; q <= n - 2; ++q)
        for (int k = n + q + 1; k <= 2 * n - 1; ++k)
            eq("dolbeault.column.high", loc(n - 1, q, k), hw.get(n - 1, q, k), hd(n, k + 1 - n));

    // Window shift identities.
    for (int p = 0; p <= n; ++p)
        for (int q = p; q <= n; ++q) {
            for (int k = p; k <= q - 2; ++k)
                eq("window.shift.q", loc(p, q, k), hw.get(p, q, k), hw.get(p, q - 1, k));
            for (int k = n + p + 2; k <= 2 * n - 1; ++k)
                eq("window.shift.p", loc(p, q, k), hw.get(p, q, k), hw.get(p + 1, q, k));
        }

    // Corner-rule equalities (compact-manifold shaped complexes).
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q)
            if (std::min(p, q) == n - 1)
                eq("corner.deRham", loc(p, q, n - 1), hw.get(p, q, n - 1), b[n - 1]);
    eq("corner.deRham.high", loc(0, 0, n), hw.get(0, 0, n), b[n + 1]);
    eq("corner.dolbeault", loc(0, n - 1, n - 1), hw.get(0, n - 1, n - 1), hd(0, n - 1));
    eq("corner.dolbeault.high", loc(n - 1, 0, n), hw.get(n - 1, 0, n), hd(n, 1));
    for (int p = 0; p <= n - 1; ++p)
        eq("corner.shift", loc(p, n, n - 1), hw.get(p, n, n - 1), hw.get(p, n - 1, n - 1));
    for (int q = 0; q <= n - 1; ++q)
        eq("corner.shift.high", loc(-1, q, n), hw.get(-1, q, n), hw.get(0, q, n));

    // Conjugation and duality symmetry of the window dimensions.
    for (int p = -1; p <= n; ++p)
        for (int q = -1; q <= n; ++q)
            for (int k = 0; k <= 2 * n - 1; ++k) {
                if (p < q) eq("symmetry.conj", loc(p, q, k), hw.get(p, q, k), hw.get(q, p, k));
                if (p <= n - 1 && q <= n - 1)
                    eq("symmetry.dual", loc(p, q, k), hw.get(p, q, k),
                       hw.get(n - q - 1, n - p - 1, 2 * n - 1 - k));
            }

    // Euler characteristics.
    EulerData chi = euler_data(c);
    for (int p = 0; p <= n - 1; ++p)
        for (int q = 0; q <= n - 1; ++q) {
            eq("euler.antisym", loc(p, q, -1), chi.chi_pq.at({p, q}),
               -chi.chi_pq.at({n - q - 1, n - p - 1}));
            if (p + q == n - 1) eq("euler.zero", loc(p, q, -1), chi.chi_pq.at({p, q}), 0);
            if (p + q <= n - 2) {
                long rhs = 0;
                for (int k = p + 1; k <= n - q - 1; ++k)
                    rhs += (k % 2 == 1) ? chi.chi_p.at(k) : -chi.chi_p.at(k);
                eq("euler.dolbeault", loc(p, q, -1), chi.chi_pq.at({p, q}), rhs);
            }
        }

    return report;
}

} // namespace bigolin
