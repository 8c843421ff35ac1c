#include "rankone/spectrum_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "rankone/error.hpp"

namespace rankone {

namespace {

using nlohmann::json;

std::vector<double> number_list(const json& node, const char* what) {
  if (!node.is_array()) throw ValidationError(std::string(what) + " must be an array");
  std::vector<double> out;
  for (const auto& v : node) {
    if (!v.is_number()) throw ValidationError(std::string(what) + " must hold numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

SpectrumConfig parse_spectrum_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("spectrum config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("spectrum config must be a JSON object");
  for (const char* key : {"group", "atoms", "r"}) {
    if (!doc.contains(key)) throw ValidationError(std::string("spectrum config is missing '") + key + "'");
  }
  if (!doc["group"].is_string()) throw ValidationError("'group' must be a string");
  if (!doc["r"].is_number()) throw ValidationError("'r' must be a number");
  const double rho_prime = doc.value("rho_prime", 0.0);

  SpectrumConfig cfg{PuritySpectrum{parse_group(doc["group"].get<std::string>(), rho_prime), {}, 0.0, {}}, {}};
  auto& spec = cfg.spectrum;
  spec.atoms = number_list(doc["atoms"], "atoms");
  spec.r = doc["r"].get<double>();
  if (doc.contains("omega")) {
    if (!doc["omega"].is_array()) throw ValidationError("'omega' must be an array");
    for (const auto& item : doc["omega"]) {
      if (!item.is_object() || !item.contains("param") || !item["param"].is_string()) {
        throw ValidationError("omega entries need a string 'param'");
      }
      OmegaComponent comp{parse_param(item["param"].get<std::string>()), 1.0};
      if (item.contains("weight")) {
        if (!item["weight"].is_number()) throw ValidationError("omega weight must be a number");
        comp.weight = item["weight"].get<double>();
      }
      spec.omega.push_back(comp);
    }
  }
  if (doc.contains("f")) {
    const auto& f = doc["f"];
    if (!f.is_object()) throw ValidationError("'f' must be an object");
    cfg.f.atom_norms = f.contains("atom_norms") ? number_list(f["atom_norms"], "atom_norms")
                                                : std::vector<double>(spec.atoms.size(), 1.0);
    cfg.f.omega_norms = f.contains("omega_norms") ? number_list(f["omega_norms"], "omega_norms")
                                                  : SpectralVector::from_weights(spec).omega_norms;
  } else {
    cfg.f = SpectralVector::from_weights(spec);
  }
  validate_model(spec, cfg.f);
  return cfg;
}

SpectrumConfig load_spectrum_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open spectrum config '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_spectrum_config(buf.str());
}

std::string to_json(const SpectrumConfig& cfg) {
  const auto& g = cfg.spectrum.group;
  json doc;
  doc["group"] = "custom:" + std::to_string(g.n1()) + "," + std::to_string(g.n2());
  doc["rho_prime"] = g.rho_prime();
  doc["atoms"] = cfg.spectrum.atoms;
  doc["r"] = cfg.spectrum.r;
  doc["omega"] = json::array();
  for (const auto& comp : cfg.spectrum.omega) {
    doc["omega"].push_back({{"param", comp.param.to_string()}, {"weight", comp.weight}});
  }
  doc["f"] = {{"atom_norms", cfg.f.atom_norms}, {"omega_norms", cfg.f.omega_norms}};
  return doc.dump(2);
}

}  // namespace rankone
