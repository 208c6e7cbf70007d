#pragma once

#include <string>

#include "chaosforge/chaos.hpp"
#include "chaosforge/kernel_tensor.hpp"

#include "json.hpp"

namespace chaosforge {

// Kernel JSON: {"d": int, "m": int, "n": int, "entries": [[re, im], ...]}
// with entries row-major, unbarred group first, last index fastest. Readers
// reject wrong-length arrays and non-finite values.
nlohmann::json kernel_to_json(const KernelTensor& K);
KernelTensor kernel_from_json(const nlohmann::json& j);

// Chaos element JSON: {"d": int, "grades": [{"m": int, "n": int,
// "kernel": <kernel object>}], "constant": [re, im]}.
nlohmann::json element_to_json(const ChaosElement& F);
ChaosElement element_from_json(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const nlohmann::json& j, const std::string& path);

}  // namespace chaosforge
