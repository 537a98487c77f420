#pragma once

#include "qswap/network.hpp"
#include "qswap/scalar.hpp"
#include "qswap/state.hpp"

#include <nlohmann/json.hpp>

namespace qswap {

using Json = nlohmann::ordered_json;

std::string rational_to_string(const Rational& r);

/// {"rat": "p/q", "sqrt2": "p/q"}
Json scalar_to_json(const Scalar& s);

/// "A↓" etc.; node names come from the network.
std::string mode_to_string(Mode m, const Network& net);

/// Canonical JSON form: terms in canonical order, scalars as rational pairs.
/// Byte-deterministic for a fixed state, suitable for golden tests.
Json state_to_json(const ManyBodyState& state, const Network& net);

}  // namespace qswap
