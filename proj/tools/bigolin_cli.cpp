#include "bigolin/cohomology.hpp"
#include "bigolin/error.hpp"
#include "bigolin/forms.hpp"
#include "bigolin/iwasawa.hpp"
#include "bigolin/zigzag.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace bigolin;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitAxiom = 2;
constexpr int kExitFinding = 3;

struct Input {
    std::string preset;
    std::string path;
};

LieAlgebraSpec load_spec(const Input& in) {
    if (!in.preset.empty()) {
        if (in.preset == "torus") return torus_spec(3);
        if (in.preset.rfind("torus:", 0) == 0) {
            int n = std::stoi(in.preset.substr(6));
            return torus_spec(n);
        }
        if (in.preset.rfind("iwasawa:", 0) == 0) {
            auto cls = class_from_name(in.preset.substr(8));
            if (!cls)
                throw Error(Error::Kind::parse,
                            "unknown class \"" + in.preset.substr(8) +
                                "\"; expected one of i, ii.a, ii.b, iii.a, iii.b");
            return preset(*cls);
        }
        throw Error(Error::Kind::parse,
                    "unknown preset \"" + in.preset + "\"; expected iwasawa:<class> or torus[:n]");
    }
    std::string text;
    if (in.path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream f(in.path);
        if (!f) throw Error(Error::Kind::parse, "cannot open " + in.path);
        std::ostringstream buf;
        buf << f.rdbuf();
        text = buf.str();
    }
    return parse_structure_equations(text);
}

BuildResult load_complex(const Input& in) {
    BuildResult built = build_complex(load_spec(in));
    for (const std::string& w : built.warnings) std::cerr << "warning: " << w << '\n';
    return built;
}

json profile_to_json(const CohomologyProfile& prof) {
    json j;
    j["n"] = prof.n;
    j["level"] = "invariant-forms";
    j["betti"] = prof.betti;
    auto table = [&](const std::map<std::pair<int, int>, int>& t) {
        json rows = json::array();
        for (int p = 0; p <= prof.n; ++p) {
            json row = json::array();
            for (int q = 0; q <= prof.n; ++q) row.push_back(t.at({p, q}));
            rows.push_back(row);
        }
        return rows;
    };
    j["dolbeault"] = table(prof.dolbeault);
    j["partial"] = table(prof.partial);
    j["aeppli"] = table(prof.aeppli);
    j["bott_chern"] = table(prof.bott_chern);
    json window = json::array();
    for (const auto& [triple, value] : prof.bigolin) {
        auto [p, q, k] = triple;
        window.push_back({{"p", p}, {"q", q}, {"k", k}, {"value", value}});
    }
    j["window"] = window;
    j["h1_B"] = prof.h1_b;
    j["h_top_B"] = prof.h_top_b;
    return j;
}

void print_pq_table(std::ostream& out, const std::string& name, int n,
                    const std::map<std::pair<int, int>, int>& t) {
    out << name << " (rows p = 0.." << n << ", columns q = 0.." << n << ")\n";
    for (int p = 0; p <= n; ++p) {
        out << "  ";
        for (int q = 0; q <= n; ++q) out << t.at({p, q}) << (q == n ? "" : " ");
        out << '\n';
    }
}

int cmd_check(const Input& in, bool json_out) {
    BuildResult built;
    try {
        built = load_complex(in);
    } catch (const Error& e) {
        if (e.kind() == Error::Kind::axiom_violation) {
            if (json_out)
                std::cout << json{{"ok", false}, {"violation", e.what()}}.dump(2) << '\n';
            else
                std::cout << e.what() << '\n';
            return kExitAxiom;
        }
        throw;
    }
    AxiomReport report = verify_axioms(built.complex);
    if (json_out) {
        json j;
        j["ok"] = report.ok();
        j["violations"] = json::array();
        for (const auto& v : report.violations)
            j["violations"].push_back(
                {{"identity", v.identity}, {"p", v.p}, {"q", v.q}, {"witness", v.witness}});
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << report.str();
    }
    return report.ok() ? kExitOk : kExitAxiom;
}

int cmd_cohomology(const Input& in, bool json_out) {
    DoubleComplex c = load_complex(in).complex;
    CohomologyProfile prof = compute_profile(c);
    if (json_out) {
        std::cout << profile_to_json(prof).dump(2) << '\n';
        return kExitOk;
    }
    std::cout << "invariant-forms cohomology, n = " << prof.n << '\n';
    std::cout << "betti:";
    for (int v : prof.betti) std::cout << ' ' << v;
    std::cout << '\n';
    if (!c.almost) {
        print_pq_table(std::cout, "dolbeault", prof.n, prof.dolbeault);
        print_pq_table(std::cout, "partial", prof.n, prof.partial);
        print_pq_table(std::cout, "aeppli", prof.n, prof.aeppli);
        print_pq_table(std::cout, "bott-chern", prof.n, prof.bott_chern);
        if (!prof.bigolin.empty()) {
            std::cout << "window invariants h^k_{p,q}:\n";
            for (const auto& [triple, value] : prof.bigolin) {
                auto [p, q, k] = triple;
                std::cout << "  h^" << k << "_{" << p << "," << q << "} = " << value << '\n';
            }
        }
    } else {
        std::cout << "(almost-complex input: bigraded families need an integrable structure)\n";
    }
    std::cout << "h1_B = " << prof.h1_b << "  h^(2n-1)_B = " << prof.h_top_b
              << "  (reported side by side; equality is not asserted)\n";
    return kExitOk;
}

int cmd_bigolin(const Input& in, int p, int q, int k, bool all, bool json_out) {
    DoubleComplex c = load_complex(in).complex;
    if (all) {
        json arr = json::array();
        for (auto [tp, tq, tk] : enumerate_invariants(c.n)) {
            int value = bigolin_dim(c, tp, tq, tk);
            if (json_out)
                arr.push_back({{"p", tp}, {"q", tq}, {"k", tk}, {"value", value}});
            else
                std::cout << "h^" << tk << "_{" << tp << "," << tq << "} = " << value << '\n';
        }
        if (json_out) std::cout << arr.dump(2) << '\n';
        return kExitOk;
    }
    int value = bigolin_dim(c, p, q, k);
    if (json_out)
        std::cout << json{{"p", p}, {"q", q}, {"k", k}, {"value", value}}.dump(2) << '\n';
    else
        std::cout << value << '\n';
    return kExitOk;
}

int cmd_zigzags(const Input& in, bool json_out) {
    DoubleComplex c = load_complex(in).complex;
    if (c.n != 3) {
        std::cerr << "zigzags: the multiplicity decomposition is implemented for complex "
                     "dimension 3 only (this input has n = "
                  << c.n << ")\n";
        return kExitUsage;
    }
    zz::Invariants22 v = zz::engine_invariants22(c);
    zz::Invariants17 v17 = zz::restrict_to_17(v);
    zz::InversionResult inv = zz::multiplicities_from_cohomology(v17);
    RelationReport relations = zz::consistency_relations(v);

    std::vector<std::string> findings = inv.findings;
    if (zz::apply_T(inv.m) != v)
        findings.push_back("T*m does not reproduce the full invariant vector: the complex is not "
                           "a sum of the 17 zigzag orbits and corner dots");
    for (const auto& check : relations.checks)
        if (!check.pass) findings.push_back("relation " + check.relation + " fails");

    if (json_out) {
        json j;
        json invariants;
        for (int i = 0; i < zz::kInvariants22; ++i) invariants[zz::kInvariantNames22[i]] = v[i];
        j["invariants"] = invariants;
        json mult;
        for (int i = 0; i < zz::kLetters; ++i) mult[zz::kLetterNames[i]] = inv.m[i];
        j["multiplicities"] = mult;
        j["consistent"] = findings.empty();
        j["findings"] = findings;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "invariants:\n";
        for (int i = 0; i < zz::kInvariants22; ++i)
            std::cout << "  " << zz::kInvariantNames22[i] << " = " << v[i] << '\n';
        std::cout << "zigzag multiplicities:\n ";
        for (int i = 0; i < zz::kLetters; ++i)
            std::cout << ' ' << zz::kLetterNames[i] << "=" << inv.m[i];
        std::cout << '\n';
        for (const std::string& f : findings) std::cout << "finding: " << f << '\n';
        std::cout << (findings.empty() ? "consistent\n" : "inconsistent\n");
    }
    return findings.empty() ? kExitOk : kExitFinding;
}

int cmd_audit(const Input& in, bool json_out) {
    DoubleComplex c = load_complex(in).complex;
    RelationReport report = relation_audit(c);
    if (json_out) {
        json j;
        j["all_pass"] = report.all_pass();
        j["checks"] = json::array();
        for (const auto& check : report.checks)
            j["checks"].push_back({{"relation", check.relation},
                                   {"location", check.location},
                                   {"lhs", check.lhs},
                                   {"rhs", check.rhs},
                                   {"inequality", check.is_inequality},
                                   {"pass", check.pass}});
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << report.str();
    }
    return report.all_pass() ? kExitOk : kExitFinding;
}

int cmd_enumerate(int n, bool json_out) {
    auto triples = enumerate_invariants(n);
    if (json_out) {
        json j;
        j["n"] = n;
        j["count"] = triples.size();
        j["triples"] = json::array();
        for (auto [p, q, k] : triples) j["triples"].push_back({p, q, k});
        std::cout << j.dump(2) << '\n';
    } else {
        for (auto [p, q, k] : triples)
            std::cout << "(p,q,k) = (" << p << "," << q << "," << k << ")\n";
        std::cout << "count " << triples.size() << '\n';
    }
    return kExitOk;
}

int cmd_golden(bool json_out) {
    GoldenTableRun table = golden_table();
    GoldenZigzagRun zig = golden_zigzags();
    bool ok = table.matches() && zig.all_consistent();

    if (json_out) {
        json j;
        json rows;
        for (size_t c = 0; c < kAllClasses.size(); ++c) {
            json row = json::array();
            for (int t = 0; t < 7; ++t) row.push_back(table.computed[c][t]);
            rows[class_name(kAllClasses[c])] = row;
        }
        j["window_table"] = rows;
        json mult;
        for (int i = 0; i < zz::kLetters; ++i)
            mult[zz::kLetterNames[i]] = zig.classes[2].multiplicities[i];
        j["multiplicities_ii.b"] = mult;
        j["match"] = ok;
        std::cout << j.dump(2) << '\n';
        return ok ? kExitOk : kExitFinding;
    }

    std::cout << "window invariants per deformation class (computed | published):\n";
    std::cout << "class    h1_11 h1_12 h2_12 h3_13 h3_22 h3_23 h4_23\n";
    for (size_t c = 0; c < kAllClasses.size(); ++c) {
        std::cout << "(" << class_name(kAllClasses[c]) << ")";
        for (size_t pad = class_name(kAllClasses[c]).size(); pad < 7; ++pad) std::cout << ' ';
        for (int t = 0; t < 7; ++t)
            std::cout << ' ' << table.computed[c][t] << "|" << kGoldenWindowTable[c][t] << "   ";
        std::cout << '\n';
    }
    std::cout << "class (ii.b) zigzag multiplicities (computed | published):\n ";
    for (int i = 0; i < zz::kLetters; ++i)
        std::cout << ' ' << zz::kLetterNames[i] << "=" << zig.classes[2].multiplicities[i] << "|"
                  << kGoldenMultiplicitiesIIb[i];
    std::cout << '\n';
    for (size_t c = 0; c < kAllClasses.size(); ++c) {
        const auto& pc = zig.classes[c];
        std::cout << "(" << class_name(pc.label) << ") T*m reproduces the invariant vector: "
                  << (pc.t_times_m_matches ? "yes" : "NO") << ", nonnegative: "
                  << (pc.nonnegative ? "yes" : "NO") << ", D = " << pc.d_component << '\n';
    }
    std::cout << (ok ? "golden values match\n" : "golden values DO NOT match\n");
    return ok ? kExitOk : kExitFinding;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact cohomology of invariant double complexes: de Rham, Dolbeault, Aeppli,\n"
        "Bott-Chern and window (Bigolin) dimensions, and the n = 3 zigzag decomposition.\n"
        "All values are invariant (Lie-algebra level) dimensions. Parallelism is\n"
        "controlled by OMP_NUM_THREADS."};
    app.require_subcommand(1);

    Input input;
    bool json_out = false;

    auto add_json = [&](CLI::App* cmd) {
        cmd->add_flag("--json", json_out, "machine-readable JSON output");
    };
    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("--preset", input.preset, "iwasawa:<i|ii.a|ii.b|iii.a|iii.b> or torus[:n]");
        cmd->add_option("file", input.path, "structure-equation file, or - for stdin");
        add_json(cmd);
    };

    auto* check = app.add_subcommand("check", "verify the double-complex axioms");
    add_input(check);
    auto* cohom = app.add_subcommand("cohomology", "full cohomology profile");
    add_input(cohom);
    auto* big = app.add_subcommand("bigolin", "single window dimension h^k_{p,q}");
    add_input(big);
    int p = 0, q = 0, k = 0;
    bool all = false;
    auto* opt_p = big->add_option("-p", p, "first window index");
    auto* opt_q = big->add_option("-q", q, "second window index");
    auto* opt_k = big->add_option("-k", k, "complex degree");
    big->add_flag("--all", all, "all canonical (p,q,k) triples for this n");
    auto* zig = app.add_subcommand("zigzags", "zigzag multiplicities from cohomology (n = 3)");
    add_input(zig);
    auto* audit = app.add_subcommand("audit", "dimension-level relation audit");
    add_input(audit);
    auto* enumerate = app.add_subcommand("enumerate", "canonical window invariants for a given n");
    int enum_n = 3;
    enumerate->add_option("-n", enum_n, "complex dimension")->required();
    add_json(enumerate);
    auto* golden = app.add_subcommand("golden", "reproduce the published deformation tables");
    add_json(golden);

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmd_check(input, json_out);
        if (cohom->parsed()) return cmd_cohomology(input, json_out);
        if (big->parsed()) {
            if (!all && (opt_p->count() == 0 || opt_q->count() == 0 || opt_k->count() == 0)) {
                std::cerr << "error: bigolin needs -p, -q and -k (or --all)\n";
                return kExitUsage;
            }
            return cmd_bigolin(input, p, q, k, all, json_out);
        }
        if (zig->parsed()) return cmd_zigzags(input, json_out);
        if (audit->parsed()) return cmd_audit(input, json_out);
        if (enumerate->parsed()) return cmd_enumerate(enum_n, json_out);
        if (golden->parsed()) return cmd_golden(json_out);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        switch (e.kind()) {
            case Error::Kind::axiom_violation: return kExitAxiom;
            case Error::Kind::not_a_complex: return kExitAxiom;
            case Error::Kind::parse: return kExitUsage;
            case Error::Kind::precondition: return kExitUsage;
            case Error::Kind::unsupported: return kExitUsage;
            case Error::Kind::label_mismatch: return kExitUsage;
        }
        return kExitUsage;
    }
    return kExitUsage;
}
