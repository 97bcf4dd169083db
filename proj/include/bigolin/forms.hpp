#pragma once

#include "bigolin/double_complex.hpp"
#include "bigolin/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace bigolin {

// Generators of the invariant form algebra are encoded as integers:
// 1..n are the holomorphic f1..fn, n+1..2n their conjugates c1..cn.
inline bool gen_is_conjugate(int g, int n) { return g > n; }
inline int gen_conjugate(int g, int n) { return g > n ? g - n : g + n; }
std::string gen_name(int g, int n);

// Wedge monomial: strictly increasing generator word. With the encoding
// above, ascending order is exactly "holomorphic block first", and the sign
// of sorting an arbitrary word is the permutation parity.
struct WedgeMonomial {
    std::vector<int> gens;

    int holo_degree(int n) const;
    int anti_degree(int n) const;
    std::string label(int n) const; // e.g. "f1f2c3"; "1" for the empty monomial

    friend bool operator<(const WedgeMonomial& a, const WedgeMonomial& b) { return a.gens < b.gens; }
    friend bool operator==(const WedgeMonomial& a, const WedgeMonomial& b) { return a.gens == b.gens; }
};

// Canonicalizes an arbitrary word: sign = parity of the sorting permutation,
// zero (nullopt-like flag) when a generator repeats.
struct CanonicalWord {
    WedgeMonomial monomial;
    int sign = 0; // 0 means the word vanished
};
CanonicalWord canonicalize_word(std::vector<int> word);

// Exact linear combination of wedge monomials.
using Form = std::map<WedgeMonomial, GaussianRational>;

void form_add(Form& f, const WedgeMonomial& m, const GaussianRational& c);
Form wedge(const Form& a, const Form& b);

// One summand of a structure equation: coeff * g_a ^ g_b with a < b in the
// canonical encoding.
struct StructureTerm {
    GaussianRational coeff;
    int a = 0, b = 0;
    friend bool operator==(const StructureTerm&, const StructureTerm&) = default;
};

// d f_i as a list of 2-form terms, one list per holomorphic generator; the
// conjugate equations d c_i are derived, never stored.
struct LieAlgebraSpec {
    int n = 0;
    std::vector<std::vector<StructureTerm>> d_of; // index i-1 holds d f_i

    // d c_i, conjugating coefficients and factors and re-canonicalizing.
    std::vector<StructureTerm> conjugate_equation(int i) const;

    // d of any single generator (holomorphic or conjugate), as a Form.
    Form d_generator(int g) const;

    // Extension to an arbitrary monomial by the graded Leibniz rule.
    Form d_monomial(const WedgeMonomial& m) const;

    bool has_anti_anti_term() const; // (0,2)-component present => almost complex
};

struct BuildResult {
    DoubleComplex complex;
    std::vector<std::string> warnings;
};

// Non-fatal scale warnings (n beyond the intended desk scale).
std::vector<std::string> scale_warnings(int n);

// Builds the full invariant-forms double complex: dim(p,q) = C(n,p)C(n,q),
// differentials split by bidegree, real structure = monomial conjugation.
// Fails with Error::Kind::axiom_violation when d^2 != 0 (Jacobi failure).
BuildResult build_complex(const LieAlgebraSpec& spec);

// Structure-equation text format:
//   n = 3
//   df3 = -1*f1f2
// Terms are <coeff>*<gen><gen> with coefficients in the exact-field
// serialization and generator tokens f1..fn / c1..cn. Conjugate equations are
// derived automatically. Parse failures carry line/column in the message.
LieAlgebraSpec parse_structure_equations(const std::string& text);

std::string format_structure_equations(const LieAlgebraSpec& spec);

} // namespace bigolin
