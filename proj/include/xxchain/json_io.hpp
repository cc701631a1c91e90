#pragma once

#include "xxchain/chain.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace xxchain {

// Chain document: {"kind":"krawtchouk","N":32,"p":0.5}
//               | {"kind":"homogeneous","N":32,"J":1.0,"B":0.0}
//               | {"kind":"custom","J":[...],"B":[...],"dual":[...]?}
// Schema problems raise std::invalid_argument (usage errors, exit code 2).
ChainSpec chain_spec_from_json(const nlohmann::json& j);

ChainSpec load_chain_spec(const std::string& path);

nlohmann::ordered_json chain_to_json(const Chain& chain);

// A spectrum file is a plain JSON array of reals.
std::vector<double> spectrum_from_json(const nlohmann::json& j);
std::vector<double> load_spectrum(const std::string& path);

} // namespace xxchain
