#include "chaosforge/malliavin.hpp"

namespace chaosforge {

namespace {

VectorChaos zero_vector(int d) {
  VectorChaos u;
  u.d = d;
  u.components.assign(static_cast<std::size_t>(d), ChaosElement(d));
  return u;
}

}  // namespace

VectorChaos mall_D(const ChaosElement& F) {
  const int d = F.d();
  VectorChaos u = zero_vector(d);
  for (const auto& [g, K] : F.grades()) {
    const auto [m, n] = g;
    if (m == 0) continue;
    const std::int64_t nU = tensor_size(d, m - 1, 0);
    const std::int64_t nB = tensor_size(d, n, 0);
    for (int k = 0; k < d; ++k) {
      KernelTensor slice(d, m - 1, n);
      for (std::int64_t a = 0; a < nU; ++a)
        for (std::int64_t b = 0; b < nB; ++b)
          slice[a * nB + b] = static_cast<double>(m) * K[(a * d + k) * nB + b];
      u.components[static_cast<std::size_t>(k)].add_presymmetrized(slice);
    }
  }
  return u;
}

VectorChaos mall_Dbar(const ChaosElement& F) {
  const int d = F.d();
  VectorChaos u = zero_vector(d);
  for (const auto& [g, K] : F.grades()) {
    const auto [m, n] = g;
    if (n == 0) continue;
    const std::int64_t nU = tensor_size(d, m, 0);
    const std::int64_t nB = tensor_size(d, n - 1, 0);
    for (int k = 0; k < d; ++k) {
      KernelTensor slice(d, m, n - 1);
      for (std::int64_t a = 0; a < nU; ++a)
        for (std::int64_t b = 0; b < nB; ++b)
          slice[a * nB + b] = static_cast<double>(n) * K[(a * nB + b) * d + k];
      u.components[static_cast<std::size_t>(k)].add_presymmetrized(slice);
    }
  }
  return u;
}

ChaosElement ou_L(const ChaosElement& F) {
  ChaosElement R(F.d(), 0.0);
  for (const auto& [g, K] : F.grades())
    R.add_presymmetrized(K, static_cast<double>(g.first));
  return R;
}

ChaosElement ou_Lbar(const ChaosElement& F) {
  ChaosElement R(F.d(), 0.0);
  for (const auto& [g, K] : F.grades())
    R.add_presymmetrized(K, static_cast<double>(g.second));
  return R;
}

ChaosElement h_inner(const VectorChaos& u, const VectorChaos& v) {
  if (u.d != v.d) throw ShapeError("h_inner: dimension mismatch");
  ChaosElement total(u.d, 0.0);
  for (int k = 0; k < u.d; ++k) {
    const auto& uk = u.components[static_cast<std::size_t>(k)];
    const auto& vk = v.components[static_cast<std::size_t>(k)];
    total = elem_add(total, multiply(uk, conjugate_elem(vk)));
  }
  return total;
}

std::pair<Complex, Complex> wirtinger_fd(const ChaosElement& F, const GaussianSample& s,
                                         int k) {
  if (k < 0 || k >= F.d()) throw ShapeError("wirtinger_fd: coordinate out of range");
  const double h = 1e-5;
  const auto eval_shifted = [&](Complex dz) {
    GaussianSample t = s;
    t.values[static_cast<std::size_t>(k)] += dz;
    return evaluate(F, t);
  };
  const Complex dx = (eval_shifted({h, 0.0}) - eval_shifted({-h, 0.0})) / (2.0 * h);
  const Complex dy = (eval_shifted({0.0, h}) - eval_shifted({0.0, -h})) / (2.0 * h);
  const Complex iu(0.0, 1.0);
  return {(dx - iu * dy) / 2.0, (dx + iu * dy) / 2.0};
}

}  // namespace chaosforge
