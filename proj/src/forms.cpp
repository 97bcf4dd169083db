#include "bigolin/forms.hpp"

#include "bigolin/error.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <map>
#include <sstream>

namespace bigolin {

std::string gen_name(int g, int n) {
    if (g <= n) return "f" + std::to_string(g);
    return "c" + std::to_string(g - n);
}

int WedgeMonomial::holo_degree(int n) const {
    int d = 0;
    for (int g : gens)
        if (g <= n) ++d;
    return d;
}

int WedgeMonomial::anti_degree(int n) const { return static_cast<int>(gens.size()) - holo_degree(n); }

std::string WedgeMonomial::label(int n) const {
    if (gens.empty()) return "1";
    std::string s;
    for (int g : gens) s += gen_name(g, n);
    return s;
}

CanonicalWord canonicalize_word(std::vector<int> word) {
    // Insertion sort, counting transpositions; words are short.
    int swaps = 0;
    for (size_t i = 1; i < word.size(); ++i) {
        int v = word[i];
        size_t j = i;
        while (j > 0 && word[j - 1] > v) {
            word[j] = word[j - 1];
            --j;
            ++swaps;
        }
        word[j] = v;
    }
    for (size_t i = 1; i < word.size(); ++i)
        if (word[i] == word[i - 1]) return {WedgeMonomial{}, 0};
    return {WedgeMonomial{std::move(word)}, swaps % 2 == 0 ? 1 : -1};
}

void form_add(Form& f, const WedgeMonomial& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = f.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) f.erase(it);
    }
}

Form wedge(const Form& a, const Form& b) {
    Form out;
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) {
            std::vector<int> word = ma.gens;
            word.insert(word.end(), mb.gens.begin(), mb.gens.end());
            CanonicalWord cw = canonicalize_word(std::move(word));
            if (cw.sign == 0) continue;
            GaussianRational c = ca * cb;
            if (cw.sign < 0) c = -c;
            form_add(out, cw.monomial, c);
        }
    }
    return out;
}

std::vector<StructureTerm> LieAlgebraSpec::conjugate_equation(int i) const {
    std::vector<StructureTerm> out;
    for (const StructureTerm& t : d_of[i - 1]) {
        int a = gen_conjugate(t.a, n);
        int b = gen_conjugate(t.b, n);
        GaussianRational c = t.coeff.conj();
        if (a > b) {
            std::swap(a, b);
            c = -c;
        }
        out.push_back({c, a, b});
    }
    std::sort(out.begin(), out.end(),
              [](const StructureTerm& x, const StructureTerm& y) {
                  return std::pair(x.a, x.b) < std::pair(y.a, y.b);
              });
    return out;
}

Form LieAlgebraSpec::d_generator(int g) const {
    Form f;
    const bool conj = gen_is_conjugate(g, n);
    const int i = conj ? g - n : g;
    const auto terms = conj ? conjugate_equation(i) : d_of[i - 1];
    for (const StructureTerm& t : terms)
        form_add(f, WedgeMonomial{{t.a, t.b}}, t.coeff);
    return f;
}

Form LieAlgebraSpec::d_monomial(const WedgeMonomial& m) const {
    Form out;
    for (size_t t = 0; t < m.gens.size(); ++t) {
        Form dg = d_generator(m.gens[t]);
        int leib = t % 2 == 0 ? 1 : -1; // (-1)^t for the skipped prefix
        for (const auto& [tm, tc] : dg) {
            std::vector<int> word;
            word.reserve(m.gens.size() + 1);
            word.insert(word.end(), m.gens.begin(), m.gens.begin() + t);
            word.insert(word.end(), tm.gens.begin(), tm.gens.end());
            word.insert(word.end(), m.gens.begin() + t + 1, m.gens.end());
            CanonicalWord cw = canonicalize_word(std::move(word));
            if (cw.sign == 0) continue;
            GaussianRational c = tc;
            if (leib * cw.sign < 0) c = -c;
            form_add(out, cw.monomial, c);
        }
    }
    return out;
}

bool LieAlgebraSpec::has_anti_anti_term() const {
    for (const auto& eq : d_of)
        for (const StructureTerm& t : eq)
            if (gen_is_conjugate(t.a, n) && gen_is_conjugate(t.b, n)) return true;
    return false;
}

namespace {

void validate_spec(const LieAlgebraSpec& spec) {
    if (spec.n < 0 || static_cast<int>(spec.d_of.size()) != spec.n)
        throw Error(Error::Kind::precondition, "structure equations: wrong number of generators");
    for (int i = 1; i <= spec.n; ++i) {
        for (const StructureTerm& t : spec.d_of[i - 1]) {
            if (t.a < 1 || t.b < 1 || t.a > 2 * spec.n || t.b > 2 * spec.n || t.a >= t.b)
                throw Error(Error::Kind::precondition,
                            "structure equations: term factors of d f" + std::to_string(i) +
                                " are not in canonical order");
        }
    }
}

// All r-subsets of 1..n shifted by `offset`, in lexicographic order.
std::vector<std::vector<int>> combinations(int n, int r, int offset) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == r) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v <= n; ++v) {
            cur.push_back(v + offset);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

} // namespace

std::vector<std::string> scale_warnings(int n) {
    std::vector<std::string> warnings;
    if (n > 6)
        warnings.push_back("n = " + std::to_string(n) +
                           " exceeds the intended scale (n <= 6); expect large spaces");
    return warnings;
}

BuildResult build_complex(const LieAlgebraSpec& spec) {
    validate_spec(spec);
    BuildResult result;
    const int n = spec.n;
    result.warnings = scale_warnings(n);

    DoubleComplex c = DoubleComplex::empty(n, spec.has_anti_anti_term(), true);

    // Basis monomials and their positions, per bidegree.
    std::vector<std::vector<std::vector<WedgeMonomial>>> monomials(
        n + 1, std::vector<std::vector<WedgeMonomial>>(n + 1));
    std::map<WedgeMonomial, std::pair<std::pair<int, int>, int>> index;
    for (int p = 0; p <= n; ++p) {
        auto holo = combinations(n, p, 0);
        for (int q = 0; q <= n; ++q) {
            auto anti = combinations(n, q, n);
            for (const auto& h : holo) {
                for (const auto& a : anti) {
                    WedgeMonomial m;
                    m.gens = h;
                    m.gens.insert(m.gens.end(), a.begin(), a.end());
                    index[m] = {{p, q}, static_cast<int>(monomials[p][q].size())};
                    monomials[p][q].push_back(m);
                    c.basis[p][q].push_back(m.label(n));
                }
            }
        }
    }
    c.shape_differentials();

    for (int p = 0; p <= n; ++p) {
        for (int q = 0; q <= n; ++q) {
            for (int j = 0; j < c.dim(p, q); ++j) {
                const WedgeMonomial& m = monomials[p][q][j];
                Form dm = spec.d_monomial(m);
                for (const auto& [tm, tc] : dm) {
                    auto [bideg, row] = index.at(tm);
                    auto [tp, tq] = bideg;
                    if (tp == p + 1 && tq == q) {
                        c.del[p][q].at(row, j) = tc;
                    } else if (tp == p && tq == q + 1) {
                        c.delbar[p][q].at(row, j) = tc;
                    } else if (tp == p + 2 && tq == q - 1) {
                        assert(c.almost);
                        c.mu[p][q].at(row, j) = tc;
                    } else if (tp == p - 1 && tq == q + 2) {
                        assert(c.almost);
                        c.mubar[p][q].at(row, j) = tc;
                    } else {
                        assert(false && "differential leaves the four adjacent bidegrees");
                    }
                }
                // Real structure: conj(f^I c^J) = (-1)^{pq} f^J c^I.
                std::vector<int> conj_word;
                conj_word.reserve(m.gens.size());
                for (int g : m.gens) conj_word.push_back(gen_conjugate(g, n));
                CanonicalWord cw = canonicalize_word(std::move(conj_word));
                assert(cw.sign != 0);
                auto [cbideg, crow] = index.at(cw.monomial);
                assert(cbideg == std::make_pair(q, p));
                c.sigma[p][q].at(crow, j) = GaussianRational(cw.sign);
            }
        }
    }

    AxiomReport report = verify_axioms(c);
    if (!report.ok()) {
        const AxiomViolation& v = report.violations.front();
        throw Error(Error::Kind::axiom_violation,
                    "structure equations do not square to zero: " + v.identity + " fails at (" +
                        std::to_string(v.p) + "," + std::to_string(v.q) + "), witness " + v.witness,
                    v.witness);
    }
    result.complex = std::move(c);
    return result;
}

namespace {

[[noreturn]] void parse_fail(int line, int col, const std::string& what) {
    throw Error(Error::Kind::parse,
                "parse error at line " + std::to_string(line) + ", column " + std::to_string(col) +
                    ": " + what);
}

struct LineScanner {
    const std::string& s;
    int line;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    int col() const { return static_cast<int>(pos) + 1; }
    bool consume(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
};

int scan_generator(LineScanner& sc, int n) {
    sc.skip_ws();
    if (sc.pos >= sc.s.size() || (sc.s[sc.pos] != 'f' && sc.s[sc.pos] != 'c'))
        parse_fail(sc.line, sc.col(), "expected generator token f<k> or c<k>");
    bool conj = sc.s[sc.pos] == 'c';
    ++sc.pos;
    size_t start = sc.pos;
    while (sc.pos < sc.s.size() && std::isdigit(static_cast<unsigned char>(sc.s[sc.pos]))) ++sc.pos;
    if (sc.pos == start) parse_fail(sc.line, sc.col(), "expected generator index");
    int k = std::stoi(sc.s.substr(start, sc.pos - start));
    if (k < 1 || k > n)
        parse_fail(sc.line, static_cast<int>(start), "generator index out of range 1.." + std::to_string(n));
    return conj ? k + n : k;
}

} // namespace

LieAlgebraSpec parse_structure_equations(const std::string& text) {
    LieAlgebraSpec spec;
    bool have_n = false;
    std::vector<bool> seen;

    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        LineScanner sc{raw, line_no};
        if (sc.eof()) continue;

        if (sc.s.compare(sc.pos, 1, "n") == 0 &&
            (sc.pos + 1 >= sc.s.size() || !std::isalnum(static_cast<unsigned char>(sc.s[sc.pos + 1])))) {
            ++sc.pos;
            if (!sc.consume('=')) parse_fail(line_no, sc.col(), "expected '=' after n");
            sc.skip_ws();
            size_t start = sc.pos;
            while (sc.pos < sc.s.size() && std::isdigit(static_cast<unsigned char>(sc.s[sc.pos]))) ++sc.pos;
            if (sc.pos == start) parse_fail(line_no, sc.col(), "expected integer value for n");
            spec.n = std::stoi(sc.s.substr(start, sc.pos - start));
            if (spec.n < 1) parse_fail(line_no, static_cast<int>(start) + 1, "n must be at least 1");
            if (!sc.eof()) parse_fail(line_no, sc.col(), "trailing characters after n record");
            have_n = true;
            spec.d_of.assign(spec.n, {});
            seen.assign(spec.n, false);
            continue;
        }

        if (!have_n) parse_fail(line_no, sc.col(), "the record 'n = <int>' must come first");
        if (!sc.consume('d')) parse_fail(line_no, sc.col(), "expected 'd<gen> =' line");
        int lhs = scan_generator(sc, spec.n);
        if (gen_is_conjugate(lhs, spec.n))
            parse_fail(line_no, sc.col(), "conjugate equations are derived; give d f<k> only");
        if (seen[lhs - 1]) parse_fail(line_no, sc.col(), "duplicate equation for f" + std::to_string(lhs));
        seen[lhs - 1] = true;
        if (!sc.consume('=')) parse_fail(line_no, sc.col(), "expected '='");

        bool first = true;
        while (!sc.eof()) {
            bool negate = false;
            if (sc.consume('+')) {
                negate = false;
            } else if (sc.consume('-')) {
                negate = true;
            } else if (!first) {
                parse_fail(line_no, sc.col(), "expected '+' or '-' between terms");
            }
            first = false;
            sc.skip_ws();
            size_t start = sc.pos;
            while (sc.pos < sc.s.size() && sc.s[sc.pos] != '*' && sc.s[sc.pos] != ' ' &&
                   sc.s[sc.pos] != '\t')
                ++sc.pos;
            if (sc.pos >= sc.s.size() || sc.s[sc.pos] != '*')
                parse_fail(line_no, static_cast<int>(start) + 1, "expected <coeff>*<gen><gen>");
            auto coeff = GaussianRational::parse(sc.s.substr(start, sc.pos - start));
            if (!coeff)
                parse_fail(line_no, static_cast<int>(start) + 1,
                           "bad coefficient \"" + sc.s.substr(start, sc.pos - start) + "\"");
            ++sc.pos; // '*'
            int a = scan_generator(sc, spec.n);
            int b = scan_generator(sc, spec.n);
            if (a == b) parse_fail(line_no, sc.col(), "repeated factor in a wedge term");
            GaussianRational cval = negate ? -*coeff : *coeff;
            if (a > b) {
                std::swap(a, b);
                cval = -cval;
            }
            spec.d_of[lhs - 1].push_back({cval, a, b});
        }
    }
    if (!have_n) throw Error(Error::Kind::parse, "parse error: missing 'n = <int>' record");

    // Merge repeated monomials inside one equation.
    for (auto& eq : spec.d_of) {
        std::map<std::pair<int, int>, GaussianRational> acc;
        for (const StructureTerm& t : eq) acc[{t.a, t.b}] += t.coeff;
        eq.clear();
        for (const auto& [fac, cval] : acc)
            if (!cval.is_zero()) eq.push_back({cval, fac.first, fac.second});
    }
    return spec;
}

std::string format_structure_equations(const LieAlgebraSpec& spec) {
    std::ostringstream out;
    out << "n = " << spec.n << '\n';
    for (int i = 1; i <= spec.n; ++i) {
        if (spec.d_of[i - 1].empty()) continue;
        out << "df" << i << " =";
        bool first = true;
        for (const StructureTerm& t : spec.d_of[i - 1]) {
            bool pure_negative = (t.coeff.im.is_zero() && t.coeff.re.sign() < 0) ||
                                 (t.coeff.re.is_zero() && t.coeff.im.sign() < 0);
            if (first) {
                out << ' ' << t.coeff.str();
            } else if (pure_negative) {
                out << " - " << (-t.coeff).str();
            } else {
                out << " + " << t.coeff.str();
            }
            out << '*' << gen_name(t.a, spec.n) << gen_name(t.b, spec.n);
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

} // namespace bigolin
