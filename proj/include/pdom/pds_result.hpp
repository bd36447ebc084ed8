#pragma once

#include "pdom/graph.hpp"
#include "pdom/propagation.hpp"

namespace pdom {

// A power dominating set together with the audit trail that proves it.
struct PdsResult {
    VertexSet set;
    int cardinality = 0;
    double weight = 0.0;  // equals cardinality for unweighted solves
    bool optimal = false;
    ObservationTrace certificate;
};

}  // namespace pdom
