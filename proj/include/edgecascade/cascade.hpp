#ifndef EDGECASCADE_CASCADE_HPP
#define EDGECASCADE_CASCADE_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "edgecascade/catalog.hpp"
#include "edgecascade/linsolve.hpp"

namespace edgecascade {

enum class Provenance { PAPER_TABLE, SOLVED };

// Per-case table of correction terms r_j.  Entry 0 solves the homogeneous
// leading equation exactly.
struct CorrectionTable {
    EdgeCase edge_case;
    std::map<int, ModuleElement> entries;
    std::map<int, Provenance> provenance;

    const ModuleElement& at(int j) const;
    bool has(int j) const { return entries.count(j) != 0; }
    void set(int j, ModuleElement e, Provenance p);
    int max_order() const { return entries.empty() ? -1 : entries.rbegin()->first; }
};

// The published correction tables for every supported case (orders as printed).
CorrectionTable published_corrections(const EdgeCase& c);

// sum_k D_k r_{j-k}, computed exactly; the zero element certifies order j.
ModuleElement residual(const EdgeCase& c, const CorrectionTable& table, int j);

// Degree bounds and sparsity masks of one solve.  allowed_degrees[i] lists
// the y-exponents the i-th basis coefficient may use.
struct AnsatzSpec {
    std::vector<std::set<int>> allowed_degrees;
    int param_degree = 0;

    static AnsatzSpec soft_pattern(const BasisFamily& fam, int j, int param_degree);
    static AnsatzSpec hard_pattern(const BasisFamily& fam, int j, int param_degree);
    static AnsatzSpec dense(const BasisFamily& fam, int max_degree, int param_degree,
                            int min_degree = 0);
    AnsatzSpec escalated(int extra_degree) const;
};

struct SolveResult {
    ModuleElement particular;
    std::vector<ModuleElement> nullspace;
    AnsatzSpec used;
    int escalations = 0;
};

// Builds the linear system for order j by applying D_0 to the ansatz and
// equating coefficients of every (basis, y power, parameter monomial) against
// -sum_{k>=1} D_k r_{j-k}; solved exactly with free variables pinned to zero.
// Escalation policy: on an inconsistent system all degree bounds grow by 2,
// up to three retries.
SolveResult solve_next(const EdgeCase& c, const CorrectionTable& table, int j,
                       const AnsatzSpec& ansatz);
SolveResult solve_next(const EdgeCase& c, const CorrectionTable& table, int j);

// Named differential relations between corrections; returns LHS - RHS;
// the zero element certifies.
ModuleElement check_relation(const std::string& relation_id);
std::vector<std::string> relation_ids();

// Writes elem = C * r0 + remainder, where the remainder has zero coordinate
// at the trailing nonzero coordinate of r0 in the canonical ordering
// (basis index major, y degree minor).
struct Decomposition {
    RationalFn constant;
    ModuleElement remainder;
};
Decomposition decompose_homogeneous(const EdgeCase& c, const ModuleElement& elem);

} // namespace edgecascade

#endif
