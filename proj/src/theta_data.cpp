#include "lgf/theta_data.hpp"

#include <fstream>

#include "lgf/errors.hpp"

namespace lgf::theta {

using nlohmann::json;

namespace {

Complex complex_from(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw DataError(std::string(what) + ": expected [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

CVector vector_from(const json& j, const char* what) {
  if (!j.is_array()) throw DataError(std::string(what) + ": expected an array of [re, im] pairs");
  CVector v(Eigen::Index(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v[Eigen::Index(i)] = complex_from(j[i], what);
  return v;
}

json to_pair(Complex z) { return json::array({z.real(), z.imag()}); }

json to_array(const CVector& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(to_pair(v[i]));
  return a;
}

const json& require(const json& j, const char* key) {
  if (!j.contains(key)) throw DataError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

JacobianSpectralData data_from_json(const json& j) {
  if (!j.is_object()) throw DataError("theta data must be a JSON object");
  const json& gj = require(j, "genus");
  if (!gj.is_number_integer() || gj.get<int>() < 1) throw DataError("genus must be a positive integer");
  const int g = gj.get<int>();

  const CVector flat = vector_from(require(j, "B"), "B");
  if (flat.size() != g * g) throw DataError("B must have genus^2 entries");
  CMatrix b(g, g);
  for (int r = 0; r < g; ++r)
    for (int c = 0; c < g; ++c) b(r, c) = flat[r * g + c];

  JacobianSpectralData data{RiemannMatrix(b), {}, vector_from(require(j, "K"), "K"),
                            vector_from(require(j, "delta_P"), "delta_P"), vector_from(require(j, "delta_Q"), "delta_Q"), {}, {}, {}};
  const json& ag = require(j, "A_gamma");
  if (!ag.is_array()) throw DataError("A_gamma must be an array of vectors");
  for (const json& a : ag) data.a_gamma.push_back(vector_from(a, "A_gamma"));
  if (j.contains("b_periods_P")) data.b_periods_p = vector_from(j["b_periods_P"], "b_periods_P");
  if (j.contains("b_periods_Q")) data.b_periods_q = vector_from(j["b_periods_Q"], "b_periods_Q");
  if (j.contains("samples")) {
    for (const json& s : j["samples"]) {
      data.samples.push_back({vector_from(require(s, "abel"), "abel"), complex_from(require(s, "int_omega_P"), "int_omega_P"),
                              complex_from(require(s, "int_omega_Q"), "int_omega_Q")});
    }
  }
  data.validate();
  if (data.b_period_residual() > 1e-9) throw DataError("b-periods violate the relation b-period = 2 pi i Delta");
  return data;
}

json data_to_json(const JacobianSpectralData& data) {
  const int g = data.genus();
  json j;
  j["genus"] = g;
  json b = json::array();
  for (int r = 0; r < g; ++r)
    for (int c = 0; c < g; ++c) b.push_back(to_pair(data.b.matrix()(r, c)));
  j["B"] = b;
  j["K"] = to_array(data.k);
  j["delta_P"] = to_array(data.delta_p);
  j["delta_Q"] = to_array(data.delta_q);
  json ag = json::array();
  for (const CVector& a : data.a_gamma) ag.push_back(to_array(a));
  j["A_gamma"] = ag;
  if (data.b_periods_p) j["b_periods_P"] = to_array(*data.b_periods_p);
  if (data.b_periods_q) j["b_periods_Q"] = to_array(*data.b_periods_q);
  if (!data.samples.empty()) {
    json s = json::array();
    for (const PathSample& p : data.samples)
      s.push_back({{"abel", to_array(p.abel)}, {"int_omega_P", to_pair(p.int_omega_p)}, {"int_omega_Q", to_pair(p.int_omega_q)}});
    j["samples"] = s;
  }
  return j;
}

JacobianSpectralData load_data(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open theta data file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw DataError("invalid JSON in " + path + ": " + e.what());
  }
  return data_from_json(j);
}

}  // namespace lgf::theta
