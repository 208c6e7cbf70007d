#include "chaosforge/io.hpp"

#include <fstream>

namespace chaosforge {

using nlohmann::json;

json kernel_to_json(const KernelTensor& K) {
  json entries = json::array();
  const Eigen::Index N = K.size();
  for (Eigen::Index x = 0; x < N; ++x)
    entries.push_back(json::array({K[x].real(), K[x].imag()}));
  return json{{"d", K.d()}, {"m", K.m()}, {"n", K.n()}, {"entries", std::move(entries)}};
}

KernelTensor kernel_from_json(const json& j) {
  if (!j.is_object() || !j.contains("d") || !j.contains("m") || !j.contains("n") ||
      !j.contains("entries"))
    throw ValidationError("kernel json: expected object with d, m, n, entries");
  const int d = j.at("d").get<int>();
  const int m = j.at("m").get<int>();
  const int n = j.at("n").get<int>();
  const auto& arr = j.at("entries");
  if (!arr.is_array()) throw ValidationError("kernel json: entries must be an array");
  std::vector<Complex> entries;
  entries.reserve(arr.size());
  for (const auto& e : arr) {
    if (!e.is_array() || e.size() != 2)
      throw ValidationError("kernel json: entries must be [re, im] pairs");
    entries.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return make_kernel(d, m, n, entries);
}

json element_to_json(const ChaosElement& F) {
  json grades = json::array();
  for (const auto& [g, K] : F.grades())
    grades.push_back(json{{"m", g.first}, {"n", g.second}, {"kernel", kernel_to_json(K)}});
  return json{{"d", F.d()},
              {"grades", std::move(grades)},
              {"constant", json::array({F.constant().real(), F.constant().imag()})}};
}

ChaosElement element_from_json(const json& j) {
  if (!j.is_object() || !j.contains("d") || !j.contains("grades"))
    throw ValidationError("element json: expected object with d, grades");
  const int d = j.at("d").get<int>();
  Complex constant = 0.0;
  if (j.contains("constant")) {
    const auto& c = j.at("constant");
    if (!c.is_array() || c.size() != 2)
      throw ValidationError("element json: constant must be [re, im]");
    constant = Complex(c[0].get<double>(), c[1].get<double>());
  }
  ChaosElement F(d, constant);
  for (const auto& g : j.at("grades")) {
    const KernelTensor K = kernel_from_json(g.at("kernel"));
    if (K.m() != g.at("m").get<int>() || K.n() != g.at("n").get<int>())
      throw ValidationError("element json: grade labels disagree with kernel shape");
    F.add_kernel(K);
  }
  return F;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  json j;
  in >> j;
  return j;
}

void save_json_file(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << j.dump(2) << "\n";
  if (!out) throw std::runtime_error("failed writing file: " + path);
}

}  // namespace chaosforge
