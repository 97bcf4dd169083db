#include "bigolin/double_complex.hpp"

#include "bigolin/error.hpp"

#include <sstream>

namespace bigolin {

namespace {

const std::vector<std::string> kNoLabels;

std::string prefixed(const std::string& prefix, const std::string& label) {
    return prefix + label;
}

LabeledMatrix conjugated(const LabeledMatrix& m) {
    LabeledMatrix r = m;
    for (auto& e : r.entries) e = e.conj();
    return r;
}

// First basis vector whose image under `m` is nonzero; empty if m = 0.
std::string witness_column(const LabeledMatrix& m) {
    for (int j = 0; j < m.ncols(); ++j) {
        for (int i = 0; i < m.nrows(); ++i) {
            if (!m.at(i, j).is_zero()) return m.col_labels[j];
        }
    }
    return {};
}

} // namespace

DoubleComplex DoubleComplex::empty(int n, bool almost, bool real_structure) {
    DoubleComplex c;
    c.n = n;
    c.almost = almost;
    c.has_real_structure = real_structure;
    c.basis.assign(n + 1, std::vector<std::vector<std::string>>(n + 1));
    c.shape_differentials();
    return c;
}

const std::vector<std::string>& DoubleComplex::basis_at(int p, int q) const {
    if (!in_grid(p, q)) return kNoLabels;
    return basis[p][q];
}

LabeledMatrix DoubleComplex::block(const std::vector<std::vector<LabeledMatrix>>& grid, int p,
                                   int q, int dp, int dq) const {
    if (in_grid(p, q) && !grid.empty()) return grid[p][q];
    return LabeledMatrix(basis_at(p + dp, q + dq), basis_at(p, q));
}

LabeledMatrix DoubleComplex::sigma_at(int p, int q) const {
    if (in_grid(p, q) && has_real_structure) return sigma[p][q];
    return LabeledMatrix(basis_at(q, p), basis_at(p, q));
}

void DoubleComplex::shape_differentials() {
    auto shape = [&](std::vector<std::vector<LabeledMatrix>>& grid, int dp, int dq) {
        grid.assign(n + 1, std::vector<LabeledMatrix>(n + 1));
        for (int p = 0; p <= n; ++p)
            for (int q = 0; q <= n; ++q)
                grid[p][q] = LabeledMatrix(basis_at(p + dp, q + dq), basis_at(p, q));
    };
    shape(del, 1, 0);
    shape(delbar, 0, 1);
    if (almost) {
        shape(mu, 2, -1);
        shape(mubar, -1, 2);
    } else {
        mu.clear();
        mubar.clear();
    }
    if (has_real_structure) {
        sigma.assign(n + 1, std::vector<LabeledMatrix>(n + 1));
        for (int p = 0; p <= n; ++p)
            for (int q = 0; q <= n; ++q) sigma[p][q] = LabeledMatrix(basis_at(q, p), basis_at(p, q));
    } else {
        sigma.clear();
    }
}

std::string AxiomReport::str() const {
    if (violations.empty()) return "all axioms hold\n";
    std::ostringstream out;
    for (const auto& v : violations) {
        out << v.identity << " fails at (" << v.p << "," << v.q << ")";
        if (!v.witness.empty()) out << ", witness " << v.witness;
        out << '\n';
    }
    return out.str();
}

AxiomReport verify_axioms(const DoubleComplex& c) {
    AxiomReport report;
    auto flag = [&](const std::string& identity, int p, int q, const LabeledMatrix& composite) {
        if (!composite.is_zero())
            report.violations.push_back({identity, p, q, witness_column(composite)});
    };
    auto sum = [](std::initializer_list<LabeledMatrix> ms) {
        LabeledMatrix acc;
        bool first = true;
        for (const auto& m : ms) {
            if (first) {
                acc = m;
                first = false;
            } else {
                for (size_t i = 0; i < acc.entries.size(); ++i) acc.entries[i] += m.entries[i];
            }
        }
        return acc;
    };

    for (int p = 0; p <= c.n; ++p) {
        for (int q = 0; q <= c.n; ++q) {
            if (c.dim(p, q) == 0) continue;
            if (!c.almost) {
                flag("del.del", p, q, compose(c.del_at(p + 1, q), c.del_at(p, q)));
                flag("delbar.delbar", p, q, compose(c.delbar_at(p, q + 1), c.delbar_at(p, q)));
                flag("del.delbar+delbar.del", p, q,
                     sum({compose(c.del_at(p, q + 1), c.delbar_at(p, q)),
                          compose(c.delbar_at(p + 1, q), c.del_at(p, q))}));
            } else {
                flag("mu.mu", p, q, compose(c.mu_at(p + 2, q - 1), c.mu_at(p, q)));
                flag("mu.del+del.mu", p, q,
                     sum({compose(c.mu_at(p + 1, q), c.del_at(p, q)),
                          compose(c.del_at(p + 2, q - 1), c.mu_at(p, q))}));
                flag("del.del+mu.delbar+delbar.mu", p, q,
                     sum({compose(c.del_at(p + 1, q), c.del_at(p, q)),
                          compose(c.mu_at(p, q + 1), c.delbar_at(p, q)),
                          compose(c.delbar_at(p + 2, q - 1), c.mu_at(p, q))}));
                flag("del.delbar+delbar.del+mu.mubar+mubar.mu", p, q,
                     sum({compose(c.del_at(p, q + 1), c.delbar_at(p, q)),
                          compose(c.delbar_at(p + 1, q), c.del_at(p, q)),
                          compose(c.mu_at(p - 1, q + 2), c.mubar_at(p, q)),
                          compose(c.mubar_at(p + 2, q - 1), c.mu_at(p, q))}));
                flag("delbar.delbar+mubar.del+del.mubar", p, q,
                     sum({compose(c.delbar_at(p, q + 1), c.delbar_at(p, q)),
                          compose(c.mubar_at(p + 1, q), c.del_at(p, q)),
                          compose(c.del_at(p - 1, q + 2), c.mubar_at(p, q))}));
                flag("mubar.delbar+delbar.mubar", p, q,
                     sum({compose(c.mubar_at(p, q + 1), c.delbar_at(p, q)),
                          compose(c.delbar_at(p - 1, q + 2), c.mubar_at(p, q))}));
                flag("mubar.mubar", p, q, compose(c.mubar_at(p - 1, q + 2), c.mubar_at(p, q)));
            }
            if (c.has_real_structure) {
                if (c.dim(p, q) != c.dim(q, p))
                    report.violations.push_back({"real.dim", p, q, ""});
                // sigma is antilinear: sigma(v) = S.conj(v). Involution means
                // S_{q,p} . conj(S_{p,q}) = id.
                LabeledMatrix invol = compose(c.sigma_at(q, p), conjugated(c.sigma_at(p, q)));
                LabeledMatrix id = LabeledMatrix::identity(c.basis_at(p, q));
                for (size_t i = 0; i < invol.entries.size(); ++i) invol.entries[i] -= id.entries[i];
                flag("real.involution", p, q, invol);
                // sigma . del = delbar . sigma, i.e. S_{p+1,q} conj(del_{p,q})
                // = delbar_{q,p} S_{p,q}.
                LabeledMatrix lhs = compose(c.sigma_at(p + 1, q), conjugated(c.del_at(p, q)));
                LabeledMatrix rhs = compose(c.delbar_at(q, p), c.sigma_at(p, q));
                for (size_t i = 0; i < lhs.entries.size(); ++i) lhs.entries[i] -= rhs.entries[i];
                flag("real.intertwine", p, q, lhs);
                if (c.almost) {
                    LabeledMatrix lm = compose(c.sigma_at(p + 2, q - 1), conjugated(c.mu_at(p, q)));
                    LabeledMatrix rm = compose(c.mubar_at(q, p), c.sigma_at(p, q));
                    for (size_t i = 0; i < lm.entries.size(); ++i) lm.entries[i] -= rm.entries[i];
                    flag("real.intertwine.mu", p, q, lm);
                }
            }
        }
    }
    return report;
}

DoubleComplex direct_sum(const std::vector<DoubleComplex>& cs) {
    if (cs.empty()) return DoubleComplex::empty(0);
    const int n = cs[0].n;
    bool almost = false;
    bool real_structure = true;
    for (const auto& c : cs) {
        if (c.n != n)
            throw Error(Error::Kind::precondition,
                        "direct_sum: summands have different n (" + std::to_string(n) + " vs " +
                            std::to_string(c.n) + ")");
        almost = almost || c.almost;
        real_structure = real_structure && c.has_real_structure;
    }

    DoubleComplex out;
    out.n = n;
    out.almost = almost;
    out.has_real_structure = real_structure;
    out.basis.assign(n + 1, std::vector<std::vector<std::string>>(n + 1));
    for (size_t s = 0; s < cs.size(); ++s) {
        std::string prefix = "s" + std::to_string(s) + ":";
        for (int p = 0; p <= n; ++p)
            for (int q = 0; q <= n; ++q)
                for (const auto& l : cs[s].basis[p][q])
                    out.basis[p][q].push_back(prefixed(prefix, l));
    }
    out.shape_differentials();

    auto fill = [&](LabeledMatrix& target, int p, int q,
                    LabeledMatrix (DoubleComplex::*get)(int, int) const) {
        int row_off = 0, col_off = 0;
        for (const auto& c : cs) {
            LabeledMatrix b = (c.*get)(p, q);
            for (int i = 0; i < b.nrows(); ++i)
                for (int j = 0; j < b.ncols(); ++j) target.at(row_off + i, col_off + j) = b.at(i, j);
            row_off += b.nrows();
            col_off += b.ncols();
        }
    };
    for (int p = 0; p <= n; ++p) {
        for (int q = 0; q <= n; ++q) {
            fill(out.del[p][q], p, q, &DoubleComplex::del_at);
            fill(out.delbar[p][q], p, q, &DoubleComplex::delbar_at);
            if (almost) {
                fill(out.mu[p][q], p, q, &DoubleComplex::mu_at);
                fill(out.mubar[p][q], p, q, &DoubleComplex::mubar_at);
            }
            if (real_structure) fill(out.sigma[p][q], p, q, &DoubleComplex::sigma_at);
        }
    }
    return out;
}

TotalSlice total_complex_slice(const DoubleComplex& c, int k) {
    if (k < 0 || k > 2 * c.n)
        throw Error(Error::Kind::precondition,
                    "total_complex_slice: degree " + std::to_string(k) + " out of range");
    auto slice_blocks = [&](int deg) {
        std::vector<std::pair<int, int>> blocks;
        for (int p = std::max(0, deg - c.n); p <= std::min(c.n, deg); ++p)
            blocks.emplace_back(p, deg - p);
        return blocks;
    };
    auto slice_labels = [&](const std::vector<std::pair<int, int>>& blocks) {
        std::vector<std::string> labels;
        for (auto [p, q] : blocks) {
            const auto& b = c.basis_at(p, q);
            labels.insert(labels.end(), b.begin(), b.end());
        }
        return labels;
    };

    auto src_blocks = slice_blocks(k);
    auto dst_blocks = slice_blocks(k + 1);
    TotalSlice slice;
    slice.labels = slice_labels(src_blocks);
    slice.d = LabeledMatrix(slice_labels(dst_blocks), slice.labels);

    std::vector<int> dst_offset(dst_blocks.size(), 0);
    for (size_t b = 1; b < dst_blocks.size(); ++b)
        dst_offset[b] = dst_offset[b - 1] + c.dim(dst_blocks[b - 1].first, dst_blocks[b - 1].second);

    auto place = [&](const LabeledMatrix& m, int col_off, int tp, int tq) {
        for (size_t b = 0; b < dst_blocks.size(); ++b) {
            if (dst_blocks[b] != std::make_pair(tp, tq)) continue;
            for (int i = 0; i < m.nrows(); ++i)
                for (int j = 0; j < m.ncols(); ++j)
                    slice.d.at(dst_offset[b] + i, col_off + j) = m.at(i, j);
            return;
        }
    };

    int col_off = 0;
    for (auto [p, q] : src_blocks) {
        place(c.del_at(p, q), col_off, p + 1, q);
        place(c.delbar_at(p, q), col_off, p, q + 1);
        if (c.almost) {
            place(c.mu_at(p, q), col_off, p + 2, q - 1);
            place(c.mubar_at(p, q), col_off, p - 1, q + 2);
        }
        col_off += c.dim(p, q);
    }
    return slice;
}

} // namespace bigolin
