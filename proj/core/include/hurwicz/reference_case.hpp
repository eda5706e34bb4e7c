#pragma once

#include "hurwicz/model.hpp"
#include "hurwicz/simulate.hpp"

namespace hurwicz {

/// Built-in worked example: operating-environment states a..d where a carries
/// no decision, binary alternatives {0, 1} on b, c, d, and state
/// probabilities (3/10, 3/10, 3/10, 1/10) at both stages. Alternative 0 pays
/// a flat 4; alternative 1 pays (1,2,3,4) on b, (3,5,6,8) on c and
/// (0,4,7,10) on d over the second-stage states a..d.
DecisionTree reference_tree();

/// The 15-record observation log bundled with the reference case, payments
/// included.
ObservationLog reference_log();

}  // namespace hurwicz
