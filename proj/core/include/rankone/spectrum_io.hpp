#pragma once

#include <string>
#include <string_view>

#include "rankone/group.hpp"
#include "rankone/spectral_sim.hpp"

namespace rankone {

struct SpectrumConfig {
  PuritySpectrum spectrum;
  SpectralVector f;
};

/// JSON document
///   {"group": "so:3", "rho_prime": 1.0, "atoms": [1, 0.7], "r": 0.4,
///    "omega": [{"param": "c:0.4", "weight": 1}, ...],
///    "f": {"atom_norms": [...], "omega_norms": [...]}}
/// `rho_prime` and `f` are optional. Throws ValidationError on schema or
/// purity violations.
SpectrumConfig parse_spectrum_config(std::string_view json_text);
SpectrumConfig load_spectrum_config(const std::string& path);

std::string to_json(const SpectrumConfig& config);

}  // namespace rankone
