#pragma once

#include <string>

#include "sandpile/core.hpp"

namespace sandpile {

// {"m": int, "n": int, "a": [...], "sink": int | null, "b": [...]}.
// Missing "sink" reads as a partial configuration. Malformed documents throw
// InputError, integers outside int64 throw OverflowError.
Configuration config_from_json(const std::string& text);
std::string config_to_json(const Configuration& u);

}  // namespace sandpile
