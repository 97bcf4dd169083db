#include "bigolin/zigzag.hpp"

#include "bigolin/error.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

namespace bigolin {
namespace zz {

const std::array<const char*, kLetters> kLetterNames = {
    "A", "B", "C", "D", "E", "F", "G", "H", "I", "L", "M", "N", "O", "P", "Q", "R", "S"};

int letter_index(char letter) {
    for (int i = 0; i < kLetters; ++i)
        if (kLetterNames[i][0] == letter) return i;
    return -1;
}

void ZigzagShape::normalize() {
    std::sort(dots.begin(), dots.end());
    std::sort(arrows.begin(), arrows.end());
}

namespace {

ZigzagShape make_shape(std::vector<std::pair<int, int>> dots,
                       std::vector<std::tuple<int, int, int, int, bool>> arrows) {
    ZigzagShape z;
    z.dots = std::move(dots);
    for (auto [a, b, c, d, is_del] : arrows) z.arrows.push_back({{a, b}, {c, d}, is_del});
    z.normalize();
    return z;
}

} // namespace

const std::array<ZigzagShape, kLetters>& canonical_shapes() {
    static const std::array<ZigzagShape, kLetters> shapes = {
        // A: dot on 1-forms
        make_shape({{0, 1}}, {}),
        // B
        make_shape({{0, 1}, {0, 2}}, {{0, 1, 0, 2, false}}),
        // C
        make_shape({{0, 1}, {0, 2}, {1, 1}}, {{0, 1, 0, 2, false}, {0, 1, 1, 1, true}}),
        // D
        make_shape({{0, 1}, {0, 2}, {1, 1}, {1, 0}},
                   {{0, 1, 0, 2, false}, {0, 1, 1, 1, true}, {1, 0, 1, 1, false}}),
        // E
        make_shape({{0, 1}, {0, 2}, {1, 1}, {1, 0}, {2, 0}},
                   {{0, 1, 0, 2, false}, {0, 1, 1, 1, true}, {1, 0, 1, 1, false}, {1, 0, 2, 0, true}}),
        // F
        make_shape({{0, 1}, {1, 1}}, {{0, 1, 1, 1, true}}),
        // G
        make_shape({{0, 1}, {1, 1}, {1, 0}}, {{0, 1, 1, 1, true}, {1, 0, 1, 1, false}}),
        // H: dot on 2-forms
        make_shape({{0, 2}}, {}),
        // I
        make_shape({{0, 2}, {1, 2}}, {{0, 2, 1, 2, true}}),
        // L
        make_shape({{0, 2}, {1, 2}, {1, 1}}, {{0, 2, 1, 2, true}, {1, 1, 1, 2, false}}),
        // M
        make_shape({{0, 2}, {1, 2}, {1, 1}, {2, 1}},
                   {{0, 2, 1, 2, true}, {1, 1, 1, 2, false}, {1, 1, 2, 1, true}}),
        // N
        make_shape({{0, 2}, {1, 2}, {1, 1}, {2, 1}, {2, 0}},
                   {{0, 2, 1, 2, true}, {1, 1, 1, 2, false}, {1, 1, 2, 1, true}, {2, 0, 2, 1, false}}),
        // O
        make_shape({{1, 1}}, {}),
        // P
        make_shape({{1, 1}, {1, 2}}, {{1, 1, 1, 2, false}}),
        // Q
        make_shape({{1, 1}, {1, 2}, {2, 1}}, {{1, 1, 1, 2, false}, {1, 1, 2, 1, true}}),
        // R: dot on 3-forms, corner column
        make_shape({{0, 3}}, {}),
        // S: dot on 3-forms
        make_shape({{1, 2}}, {}),
    };
    return shapes;
}

ZigzagShape conjugate_shape(const ZigzagShape& z) {
    ZigzagShape out;
    for (auto [p, q] : z.dots) out.dots.emplace_back(q, p);
    for (const ZigzagArrow& a : z.arrows)
        out.arrows.push_back({{a.from.second, a.from.first}, {a.to.second, a.to.first}, !a.is_del});
    out.normalize();
    return out;
}

ZigzagShape dual_shape(const ZigzagShape& z, int n) {
    ZigzagShape out;
    for (auto [p, q] : z.dots) out.dots.emplace_back(n - p, n - q);
    for (const ZigzagArrow& a : z.arrows)
        out.arrows.push_back({{n - a.to.first, n - a.to.second},
                              {n - a.from.first, n - a.from.second},
                              a.is_del});
    out.normalize();
    return out;
}

std::vector<ZigzagShape> orbit(const ZigzagShape& z, int n) {
    std::vector<ZigzagShape> out;
    auto push = [&](const ZigzagShape& s) {
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    };
    push(z);
    push(conjugate_shape(z));
    push(dual_shape(z, n));
    push(conjugate_shape(dual_shape(z, n)));
    return out;
}

int contribution(const ZigzagShape& z, int p, int q, int k, int n) {
    int size = 0, in_degree_k = 0;
    for (auto [r, s] : z.dots) {
        bool lower = r <= p && s <= q;
        bool upper = r > p && s > q && r <= n && s <= n;
        if (!lower && !upper) continue;
        ++size;
        int degree = lower ? r + s : r + s - 1;
        if (degree == k) ++in_degree_k;
    }
    return (size % 2 == 1 && 2 * in_degree_k > size) ? 1 : 0;
}

DoubleComplex synthetic_complex(const MultiplicityVector& m) {
    const int n = 3;
    DoubleComplex c = DoubleComplex::empty(n, false, true);

    struct Instance {
        int letter, copy, member;
        const ZigzagShape* shape;
        int conj_member; // orbit index of the conjugate shape
    };
    std::vector<Instance> instances;
    std::vector<std::vector<ZigzagShape>> orbits(kLetters);
    for (int x = 0; x < kLetters; ++x) {
        orbits[x] = orbit(canonical_shapes()[x], n);
        for (long copy = 0; copy < m[x]; ++copy) {
            for (size_t member = 0; member < orbits[x].size(); ++member) {
                ZigzagShape conj = conjugate_shape(orbits[x][member]);
                auto it = std::find(orbits[x].begin(), orbits[x].end(), conj);
                assert(it != orbits[x].end());
                instances.push_back({x, static_cast<int>(copy), static_cast<int>(member),
                                     &orbits[x][member],
                                     static_cast<int>(it - orbits[x].begin())});
            }
        }
    }

    auto dot_label = [&](const Instance& inst, std::pair<int, int> dot) {
        std::ostringstream s;
        s << kLetterNames[inst.letter] << inst.copy << "." << inst.member << "(" << dot.first << ","
          << dot.second << ")";
        return s.str();
    };

    // positions[label] -> index in basis[p][q]
    std::map<std::string, int> position;
    for (const Instance& inst : instances) {
        for (auto dot : inst.shape->dots) {
            std::string label = dot_label(inst, dot);
            position[label] = static_cast<int>(c.basis[dot.first][dot.second].size());
            c.basis[dot.first][dot.second].push_back(label);
        }
    }
    c.shape_differentials();

    for (const Instance& inst : instances) {
        for (const ZigzagArrow& a : inst.shape->arrows) {
            int col = position.at(dot_label(inst, a.from));
            int row = position.at(dot_label(inst, a.to));
            auto& grid = a.is_del ? c.del : c.delbar;
            grid[a.from.first][a.from.second].at(row, col) = GaussianRational(1);
        }
        Instance conj_inst = inst;
        conj_inst.member = inst.conj_member;
        conj_inst.shape = &orbits[inst.letter][inst.conj_member];
        for (auto dot : inst.shape->dots) {
            int col = position.at(dot_label(inst, dot));
            int row = position.at(dot_label(conj_inst, {dot.second, dot.first}));
            c.sigma[dot.first][dot.second].at(row, col) = GaussianRational(1);
        }
    }

    assert(verify_axioms(c).ok());
    return c;
}

const std::array<const char*, kInvariants22> kInvariantNames22 = {
    "h01_dbar", "h01_d",   "h01_bc",  "h01_a",    "b1",       "h1_11",  "h1_12", "h02_dbar",
    "h02_d",    "b2",      "h11_dbar", "h11_bc",  "h11_a",    "h2_12",  "h03_dbar", "h12_dbar",
    "h12_bc",   "b3",      "h3_13",   "h3_22",    "h3_23",    "h4_23"};

const std::array<int, kInvariants17> kKept17 = {0, 1, 2,  3,  4,  5,  6,  7, 8,
                                                9, 10, 11, 12, 14, 15, 16, 21};

const std::array<const char*, kInvariants17> kInvariantNames17 = {
    "h01_dbar", "h01_d", "h01_bc", "h01_a",    "b1",       "h1_11",  "h1_12", "h02_dbar",
    "h02_d",    "b2",    "h11_dbar", "h11_bc", "h11_a",    "h03_dbar", "h12_dbar", "h12_bc",
    "h4_23"};

Invariants17 restrict_to_17(const Invariants22& v) {
    Invariants17 out;
    for (int i = 0; i < kInvariants17; ++i) out[i] = v[kKept17[i]];
    return out;
}

namespace {

// Contribution of zigzags to cohomology: rows follow kInvariantNames22,
// columns A..S.
constexpr int kT[kInvariants22][kLetters] = {
    {1, 0, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, // h01_dbar
    {1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, // h01_d
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, // h01_bc
    {1, 1, 1, 2, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, // h01_a
    {2, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, // b1
    {2, 2, 0, 2, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, // h1_11
    {2, 1, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, // h1_12
    {0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0}, // h02_dbar
    {0, 1, 1, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0}, // h02_d
    {0, 0, 2, 0, 1, 0, 0, 2, 0, 2, 0, 1, 1, 0, 0, 0, 0}, // b2
    {0, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 1, 0, 0, 0}, // h11_dbar
    {0, 0, 2, 2, 1, 2, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0}, // h11_bc
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 1, 1, 2, 1, 0, 0}, // h11_a
    {0, 0, 1, 0, 0, 0, 0, 1, 0, 2, 1, 1, 1, 1, 0, 0, 0}, // h2_12
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0}, // h03_dbar
    {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 1, 1, 0, 1}, // h12_dbar
    {0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 2, 1, 0, 1, 1, 0, 1}, // h12_bc
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 2}, // b3
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 1, 1}, // h3_13
    {0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 2, 1, 0, 0, 2, 0, 2}, // h3_22
    {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 2, 1, 2}, // h3_23
    {0, 0, 2, 1, 1, 1, 0, 1, 0, 1, 0, 0, 1, 0, 0, 0, 0}, // h4_23
};

// Contribution of cohomology to zigzags: rows A..S, columns follow
// kInvariantNames17.
constexpr int kUInv[kLetters][kInvariants17] = {
    {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},       // A
    {0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},      // B
    {-1, 0, 0, 1, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},     // C
    {0, -1, 1, 0, -1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},     // D
    {0, 0, 0, 0, 1, 1, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},      // E
    {1, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},      // F
    {0, 0, -2, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},      // G
    {1, 0, 0, -1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0},      // H
    {-1, 0, 0, 1, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 1, -1, 0},    // I
    {0, 0, -1, 1, 0, 0, 0, 0, -1, 0, 0, -1, 0, 0, 0, 0, 1},    // L
    {0, 0, -1, -1, 1, 0, 0, 0, 1, -1, 0, 0, 0, 0, -1, 1, 1},   // M
    {0, 0, 2, 0, -1, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, -2},     // N
    {0, 0, 0, -2, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0},      // O
    {0, -1, 1, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, -1},     // P
    {0, 2, 0, 2, -1, -1, 0, 0, -2, 1, -2, 0, 1, 0, 2, -2, 0},  // Q
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0},       // R
    {1, -1, 0, -2, 0, 1, 0, -1, 1, 0, 1, 0, -1, 0, -1, 2, 0},  // S
};

std::vector<std::string> letter_labels() {
    return std::vector<std::string>(kLetterNames.begin(), kLetterNames.end());
}

} // namespace

const LabeledMatrix& table_T() {
    static const LabeledMatrix t = [] {
        LabeledMatrix m(std::vector<std::string>(kInvariantNames22.begin(), kInvariantNames22.end()),
                        letter_labels());
        for (int i = 0; i < kInvariants22; ++i)
            for (int j = 0; j < kLetters; ++j) m.at(i, j) = GaussianRational(kT[i][j]);
        return m;
    }();
    return t;
}

const LabeledMatrix& table_U_inv() {
    static const LabeledMatrix t = [] {
        LabeledMatrix m(letter_labels(),
                        std::vector<std::string>(kInvariantNames17.begin(), kInvariantNames17.end()));
        for (int i = 0; i < kLetters; ++i)
            for (int j = 0; j < kInvariants17; ++j) m.at(i, j) = GaussianRational(kUInv[i][j]);
        return m;
    }();
    return t;
}

Invariants22 apply_T(const MultiplicityVector& m) {
    Invariants22 v{};
    for (int i = 0; i < kInvariants22; ++i)
        for (int j = 0; j < kLetters; ++j) v[i] += kT[i][j] * m[j];
    return v;
}

Invariants22 engine_invariants22(const DoubleComplex& c) {
    if (c.n != 3)
        throw Error(Error::Kind::precondition, "the 22-invariant vector is a complex-dimension-3 notion");
    Invariants22 v{};
    v[0] = dolbeault(c, 0, 1);
    v[1] = partial_cohom(c, 0, 1);
    v[2] = bott_chern(c, 0, 1);
    v[3] = aeppli(c, 0, 1);
    v[4] = betti(c, 1);
    v[5] = bigolin_dim(c, 1, 1, 1);
    v[6] = bigolin_dim(c, 1, 2, 1);
    v[7] = dolbeault(c, 0, 2);
    v[8] = partial_cohom(c, 0, 2);
    v[9] = betti(c, 2);
    v[10] = dolbeault(c, 1, 1);
    v[11] = bott_chern(c, 1, 1);
    v[12] = aeppli(c, 1, 1);
    v[13] = bigolin_dim(c, 1, 2, 2);
    v[14] = dolbeault(c, 0, 3);
    v[15] = dolbeault(c, 1, 2);
    v[16] = bott_chern(c, 1, 2);
    v[17] = betti(c, 3);
    v[18] = bigolin_dim(c, 1, 3, 3);
    v[19] = bigolin_dim(c, 2, 2, 3);
    v[20] = bigolin_dim(c, 2, 3, 3);
    v[21] = bigolin_dim(c, 2, 3, 4);
    return v;
}

InversionResult multiplicities_from_cohomology(const Invariants17& v) {
    InversionResult out;
    for (int i = 0; i < kLetters; ++i) {
        long acc = 0;
        for (int j = 0; j < kInvariants17; ++j) acc += kUInv[i][j] * v[j];
        out.m[i] = acc;
        if (acc < 0)
            out.findings.push_back(std::string(kLetterNames[i]) + " = " + std::to_string(acc) +
                                   " is negative: the invariants are not realizable");
    }
    return out;
}

RelationReport consistency_relations(const Invariants22& v) {
    RelationReport report;
    auto eq = [&](const std::string& name, long lhs, long rhs) {
        report.checks.push_back({name, "", lhs, rhs, false, lhs == rhs});
    };
    auto geq = [&](const std::string& name, long lhs, long rhs) {
        report.checks.push_back({name, "", lhs, rhs, true, lhs >= rhs});
    };

    eq("h2_12.expression", v[13], -v[1] - v[3] + v[6] + v[8] + v[10] - v[15] + v[16]);
    eq("h3_13.expression", v[18], v[0] - v[3] - v[7] + v[8] + v[14] + v[16]);
    eq("h3_22.expression", v[19], 2 * v[1] - v[4] - 2 * v[8] + v[9] - 2 * v[10] + v[11] + 2 * v[15]);
    eq("h3_23.expression", v[20],
       v[0] + 2 * v[1] - v[2] - v[4] - v[7] - 2 * v[8] + v[9] - 2 * v[10] + v[14] + 2 * v[15] + v[21]);

    const long h1_dbar = v[0] + v[1];
    const long h2_dbar = v[7] + v[10] + v[8];
    const long h3_dbar = 2 * v[14] + 2 * v[15];
    eq("euler.total", v[17] - h3_dbar, 2 * v[9] - 2 * h2_dbar + 2 * h1_dbar - 2 * v[4]);
    geq("frolicher.k1", h1_dbar, v[4]);
    geq("frolicher.k2", h2_dbar, v[9]);
    geq("frolicher.k3", h3_dbar, v[17]);
    return report;
}

long D_expression(const Invariants17& v) {
    // indices in the 17 order: h01_d = 1, h01_bc = 2, b1 = 4, h1_12 = 6
    return -v[1] + v[2] - v[4] + v[6];
}

namespace {

LabeledMatrix drop_rows(const LabeledMatrix& m, const std::vector<std::string>& names) {
    std::vector<std::string> rows;
    std::vector<int> keep;
    for (int i = 0; i < m.nrows(); ++i) {
        if (std::find(names.begin(), names.end(), m.row_labels[i]) != names.end()) continue;
        rows.push_back(m.row_labels[i]);
        keep.push_back(i);
    }
    LabeledMatrix out(rows, m.col_labels);
    for (size_t i = 0; i < keep.size(); ++i)
        for (int j = 0; j < m.ncols(); ++j) out.at(static_cast<int>(i), j) = m.at(keep[i], j);
    return out;
}

LabeledMatrix drop_cols(const LabeledMatrix& m, const std::vector<std::string>& names) {
    return transpose(drop_rows(transpose(m), names));
}

} // namespace

std::vector<RankFact> rank_facts() {
    std::vector<RankFact> facts;
    const LabeledMatrix& T = table_T();

    facts.push_back({"rank(T) [22x17]", 17, rank(T)});

    LabeledMatrix V = drop_rows(T, {"h1_11", "h1_12", "h2_12", "h3_13", "h3_22", "h3_23", "h4_23"});
    facts.push_back({"rank(V) [15x17]", 14, rank(V)});

    LabeledMatrix U = drop_rows(T, {"b3", "h2_12", "h3_13", "h3_22", "h3_23"});
    facts.push_back({"rank(U) [17x17]", 17, rank(U)});

    LabeledMatrix prod = compose(U, table_U_inv());
    // Row labels of U and column labels of UInv list the same 17 invariants.
    LabeledMatrix id = LabeledMatrix::identity(prod.row_labels);
    bool is_id = prod.ncols() == id.ncols();
    for (int i = 0; is_id && i < prod.nrows(); ++i)
        for (int j = 0; j < prod.ncols(); ++j)
            if (prod.at(i, j) != id.at(i, j)) {
                is_id = false;
                break;
            }
    facts.push_back({"U * UInv = identity", 1, is_id ? 1 : 0});

    LabeledMatrix U1 = drop_cols(drop_rows(U, {"h1_12"}), {"D"});
    facts.push_back({"rank(U1) [16x16]", 16, rank(U1)});

    LabeledMatrix U2 = drop_rows(U1, {"h1_11", "h4_23"});
    facts.push_back({"rank(U2) [14x16]", 14, rank(U2)});
    facts.push_back({"dim ker(U2)", 2, static_cast<int>(kernel_basis(U2).size())});

    LabeledMatrix W = drop_rows(T, {"h01_d", "h11_dbar", "h12_dbar"});
    facts.push_back({"rank(T without the three Hodge rows) [19x17]", 15, rank(W)});

    return facts;
}

} // namespace zz
} // namespace bigolin
