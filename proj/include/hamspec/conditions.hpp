#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hamspec/graph.hpp"

namespace hamspec {

// Structured result of testing one sufficient condition for Hamilton-connectedness.
//
//   Certified        the hypothesis and bound hold and no listed exception matches,
//                    so the condition guarantees the graph is Hamilton-connected
//   ExceptionMember  the bound holds but the graph is one of the known extremal
//                    graphs excluded by the condition (all of them non-Hamilton-connected)
//   Inconclusive     hypotheses hold but the bound fails; the condition says nothing
//   NotApplicable    a structural hypothesis (order range, connectivity, minimum degree)
//                    fails
//   Boundary         a spectral comparison landed inside the floating guard band, too
//                    close to the threshold to call either way
enum class Outcome { Certified, ExceptionMember, Inconclusive, NotApplicable, Boundary };

std::string outcome_name(Outcome o);

struct Verdict {
    std::string condition_id;
    Outcome outcome = Outcome::NotApplicable;
    std::map<std::string, double> evidence;  // named quantities backing the outcome
    std::string exception_id;                // set exactly when outcome is ExceptionMember
    std::string note;                        // short human-readable remark, may be empty
};

// Half-width of the guard band for spectral threshold comparisons. Values within
// this distance of a threshold yield Boundary instead of a directional verdict,
// so floating error cannot flip a strict inequality.
inline constexpr double spectral_epsilon = 1e-9;

// Smallest k with 2 <= k <= n/2, d_{k-1} <= k and d_{n-k} <= n-k (1-based into the
// ascending sequence), or nullopt when no such k exists. Absence certifies
// Hamilton-connectedness for n >= 4. Throws std::invalid_argument if d is not
// ascending or has fewer than 3 entries.
std::optional<int> nhc_degree_scan(const DegreeSequence& d);

// Condition identifiers accepted by evaluate_condition, in the fixed order used by
// evaluate_all:
//   nhc_scan   degree-sequence scan; certifies when no witness index exists
//   ore        m >= C(n-1,2) + 3
//   zw         m >= C(n-2,2) + 6   (connected, n >= 6, min degree 3)
//   main       m >= C(n-3,2) + 13  (connected, n >= 11, min degree 3)
//   cor14      m >= C(n-2,2) + 4   (connected, n >= 14, min degree 3)
//   cor15      m >= C(n-2,2) + 3   (connected, n >= 13, min degree 3)
//   yufan_rho  rho(G)  > sqrt(n^2 - 3n + 17/4) - 1/2
//   yufan_comp rho(complement(G)) < sqrt((n-2)^2 / n)
//   yufan_q    q(G)    > 2n - 4 + 2/(n-1)
//   zw_rho     rho(G) >= sqrt(n^2 - 6n + 19)   (connected, n >= 6, min degree 3)
//   zw_q       q(G)   >= 2n - 6 + 14/(n-1)     (connected, n >= 6, min degree 3)
//   main_rho   rho(G)  > n - 3                 (connected, n >= 14, min degree 3)
//   cor_rho    rho(G) >= rho(S_n_3)            (connected, n >= 14, min degree 3)
//   main_q     q(G)    > 2n - 6 + 6/(n-1)      (connected, n >= 13, min degree 3)
//   cor_q      q(G)   >= q(S_n_3)              (connected, n >= 13, min degree 3)
const std::vector<std::string>& condition_ids();

// Evaluates a single condition by id. Throws std::invalid_argument for unknown ids.
Verdict evaluate_condition(const Graph& g, const std::string& id);

// Evaluates every condition in the order listed by condition_ids().
std::vector<Verdict> evaluate_all(const Graph& g);

}  // namespace hamspec
