#pragma once

#include "bigolin/double_complex.hpp"
#include "bigolin/window.hpp"

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace bigolin {

// dim ker(outgoing) - rank(incoming) for consecutive maps of a complex.
// Asserts compose(outgoing, incoming) = 0; a nonzero composite raises
// Error::Kind::not_a_complex with a witness basis vector in the detail.
int quotient_dim(const LabeledMatrix& incoming, const LabeledMatrix& outgoing);

int betti(const DoubleComplex& c, int k); // accepts almost-complex input
int dolbeault(const DoubleComplex& c, int p, int q);
int partial_cohom(const DoubleComplex& c, int p, int q);
int aeppli(const DoubleComplex& c, int p, int q);
int bott_chern(const DoubleComplex& c, int p, int q);

// h^k_{p,q} of the window complex; -1 <= p,q <= n.
int bigolin_dim(const DoubleComplex& c, int p, int q, int k);
int bigolin_dim(const Window& w, int k);

// Cohomology of the two short almost-complex complexes on 1-forms and
// (2n-1)-forms. Both accept mu/mubar.
int h1_B(const DoubleComplex& c);
int h_top_B(const DoubleComplex& c);

// Rank of the identity-induced map H^k_{p,q} -> H^{k+1}_{k-q,k-p}; requires
// window_space_identity_check(n,p,q,k) to pass.
int induced_map_rank(const DoubleComplex& c, int p, int q, int k);

// The canonical non-redundant (p,q,k) triples whose h^k_{p,q} are not forced
// to coincide with Betti, Dolbeault, Aeppli or Bott-Chern numbers, after the
// duality / conjugation / coincidence exclusions. Empty for n < 3; for n >= 3
// the length is 2n-3 + (n+9)(n-1)(n-2)/6.
std::vector<std::tuple<int, int, int>> enumerate_invariants(int n);
long invariant_count_formula(int n); // the closed form, meaningful for n >= 3

struct CohomologyProfile {
    int n = 0;
    std::vector<int> betti;                      // k = 0..2n
    std::map<std::pair<int, int>, int> dolbeault;
    std::map<std::pair<int, int>, int> partial;
    std::map<std::pair<int, int>, int> aeppli;
    std::map<std::pair<int, int>, int> bott_chern;
    std::map<std::tuple<int, int, int>, int> bigolin; // the enumerate_invariants triples
    int h1_b = 0, h_top_b = 0;
};
CohomologyProfile compute_profile(const DoubleComplex& c);

struct EulerData {
    std::map<std::pair<int, int>, long> chi_pq; // 0 <= p,q <= n-1
    std::map<int, long> chi_p;                  // alternating Dolbeault sums
};
EulerData euler_data(const DoubleComplex& c);

struct RelationCheck {
    std::string relation; // which identity / inequality
    std::string location; // (p,q,k) instance
    long lhs = 0, rhs = 0;
    bool is_inequality = false; // lhs >= rhs instead of lhs == rhs
    bool pass = false;
};

struct RelationReport {
    std::vector<RelationCheck> checks;
    bool all_pass() const;
    std::string str() const;
};

// Evaluates, as dimension (in)equalities, every metric-free relation the
// window cohomology satisfies on a compact complex manifold: the defining
// coincidences and inclusion, the window shift identities, the corner-rule
// equalities, conjugation/duality symmetry and the Euler-characteristic
// identities. Failures are findings, not errors. Requires a real structure.
RelationReport relation_audit(const DoubleComplex& c);

} // namespace bigolin
