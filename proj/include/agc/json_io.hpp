#pragma once

#include "agc/contract.hpp"
#include "agc/spec_lang.hpp"
#include "agc/suite.hpp"

namespace agc {

/// {"assume": [per-atom minterm bitmasks], "guarantee": [...]}; masks are
/// ascending, one per atom of the subset.
Json contract_json(const Contract& c);

Json eval_json(const EvalResult& result);

}  // namespace agc
