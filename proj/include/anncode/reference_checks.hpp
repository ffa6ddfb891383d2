#pragma once

// Regression harness over the published worked examples: the three example
// anncodes, the lexicode table and matrices, the Gamma_t facts, the Gamma'
// basis code and the sum/union/homomorphism properties.

#include <functional>
#include <string>
#include <vector>

#include "anncode/gf2.hpp"
#include "anncode/groundgraph.hpp"

namespace anncode {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Graph builders used by the checks; replaceable for mutation testing.
struct ReferenceBuilders {
    std::function<GroundGraph(int)> nim_heap = anncode::nim_heap;
    std::function<GroundGraph(int)> star_into_leaf = anncode::star_into_leaf;
    std::function<GroundGraph()> example2 = anncode::example2_graph;
    std::function<GroundGraph(int)> gamma_t = anncode::gamma_t;
};

/// Worked-example matrices (rows top first).
Gf2Matrix example4_matrix();
Gf2Matrix example5_matrix();
Gf2Matrix example6_matrix();

/// Runs every named check in a fixed order.
std::vector<CheckResult> run_reference_checks(const ReferenceBuilders& builders = {});

/// The Gamma_t block: pair facts, V^f = even-weight positions, |V^f|,
/// max gamma, dim V_0, plus the gamma table audits.
CheckResult check_gamma_t(int t, const ReferenceBuilders& builders = {});

}  // namespace anncode
