#pragma once

#include <string>

#include "sagnac/assembly.hpp"

namespace sagnac {

// Tabletop speed-meter demonstrator: 1.7 W at 1064 nm, 2.83 m ring round
// trip, 0.85 g input mirrors, 100 g end mirrors, T_itm = 700 ppm, photodiode
// efficiency 0.95, beamsplitter loss 1000 ppm. Arm loss defaults to zero and
// is the usual sweep parameter.
InterferometerSpec glasgow_preset();

// Low-frequency detector scale: 45.73 W at 1064 nm, 2e4 m ring round trip,
// 211 kg mirrors, T_itm = 10000 ppm, photodiode efficiency 0.95, beamsplitter
// loss 1000 ppm.
InterferometerSpec et_lf_preset();

// Lookup by name ("glasgow" or "et-lf"); throws ConfigError for unknown names.
InterferometerSpec preset_by_name(const std::string& name);

}  // namespace sagnac
