#include "sbs/json_io.hpp"

namespace sbs {

nlohmann::json to_json(const Mat3& m) {
  nlohmann::json a = nlohmann::json::array();
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) a.push_back(m(r, c));
  return a;
}

Mat3 mat3_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 9)
    fail(errc::invalid_input, "matrix JSON must be a 9-element row-major array");
  Mat3 m;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m(r, c) = j[3 * r + c].get<double>();
  return m;
}

nlohmann::json to_json(const IrrepObject& obj) {
  nlohmann::json a = nlohmann::json::array();
  for (const IrrepComponent& c : obj.components) {
    nlohmann::json jc;
    jc["l"] = c.l;
    jc["parity"] = to_string(c.parity);
    nlohmann::json coeffs = nlohmann::json::array();
    for (int i = 0; i < c.coeffs.size(); ++i) coeffs.push_back(c.coeffs[i]);
    jc["coeffs"] = std::move(coeffs);
    a.push_back(std::move(jc));
  }
  return a;
}

IrrepObject irrep_object_from_json(const nlohmann::json& j) {
  if (!j.is_array()) fail(errc::invalid_input, "irrep object JSON must be an array");
  IrrepObject obj;
  for (const auto& jc : j) {
    IrrepComponent c;
    c.l = jc.at("l").get<int>();
    std::string p = jc.at("parity").get<std::string>();
    if (p == "even") c.parity = Parity::even;
    else if (p == "odd") c.parity = Parity::odd;
    else fail(errc::invalid_input, "parity must be \"even\" or \"odd\"");
    const auto& coeffs = jc.at("coeffs");
    if (c.l < 0 || c.l > 2) fail(errc::unsupported_irrep, "supported l: 0, 1, 2");
    if (static_cast<int>(coeffs.size()) != 2 * c.l + 1)
      fail(errc::invalid_input, "coeffs length must be 2l+1");
    c.coeffs.resize(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) c.coeffs[i] = coeffs[i].get<double>();
    obj.components.push_back(std::move(c));
  }
  return obj;
}

nlohmann::json to_json(const PointGroup& p) {
  nlohmann::json j;
  j["orientation"] = to_json(p.orientation);
  j["name"] = to_string(p.name);
  if (p.n > 0) j["n"] = p.n;
  return j;
}

nlohmann::json finite_group_to_json(const FiniteGroup& g) {
  nlohmann::json j;
  j["order"] = g.order();
  nlohmann::json t = nlohmann::json::array();
  for (uint16_t v : g.table()) t.push_back(v);
  j["compose"] = std::move(t);
  return j;
}

nlohmann::json matrix_group_to_json(const MatrixGroup& g) {
  nlohmann::json j = finite_group_to_json(g.table());
  nlohmann::json labels = nlohmann::json::array();
  for (const Mat3& m : g.mats()) labels.push_back(to_json(m));
  j["labels"] = std::move(labels);
  return j;
}

nlohmann::json subgroup_to_json(const Subgroup& s) {
  nlohmann::json j = nlohmann::json::array();
  for (int m : s.members) j.push_back(m);
  return j;
}

}  // namespace sbs
