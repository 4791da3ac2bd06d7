#pragma once

#include <json.hpp>

#include "slt/fullsheaf.hpp"

namespace slt {

using json = nlohmann::json;  // object keys are kept sorted

// All integers are emitted as decimal strings; rationals as "p/q" in lowest
// terms.
json to_json(const Int& v);
json to_json(const Rat& v);
json to_json(const ChainIndex& ix);
json to_json(const SltModel& model);

json totals_to_json(const std::map<ChainIndex, Int>& totals);
json alpha_to_json(const std::map<ChainIndex, Rat>& alpha);

}  // namespace slt
