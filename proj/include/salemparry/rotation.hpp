#ifndef SALEMPARRY_ROTATION_HPP
#define SALEMPARRY_ROTATION_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "salemparry/scalar.hpp"

namespace salem {

/// c1 = alpha_1 + alpha_2, c2 = alpha_1 alpha_2 + 2.
struct RotationParams {
  Scalar c1;
  Scalar c2;

  static RotationParams from_alphas(const Scalar& alpha1, const Scalar& alpha2);
  bool is_rational() const { return c1.is_rational() && c2.is_rational(); }
  /// c2 > 2|c1| - 2 and c2 - 2 < c1^2/4 < 4, i.e. distinct alphas in (-2, 2).
  bool admissible() const;
};

using Z4 = std::array<Integer, 4>;

/// (k0,k1,k2,k3) -> (k1,k2,k3,k4) with k4 = -ceil(c1 k3 + c2 k2 + c1 k1 + k0 - 1),
/// so 0 < k4 + c1 k3 + c2 k2 + c1 k1 + k0 <= 1.
Z4 step_T(const Z4& state, const RotationParams& params);
Z4 step_T_inverse(const Z4& state, const RotationParams& params);

/// k4 + c1 k3 + c2 k2 + c1 k1 + k0 for consecutive values k0..k4.
Scalar rotation_residual(const std::array<Integer, 5>& k, const RotationParams& params);

enum class OrbitStatus { periodic, cap_exceeded };

struct OrbitRecord {
  Z4 seed{};
  std::vector<Integer> ks;  // k_0, k_1, ... (possibly truncated)
  std::optional<std::size_t> period;
  std::size_t iterations = 0;
  OrbitStatus status = OrbitStatus::cap_exceeded;
};

/// Iterates T from the origin until it returns there or `cap` steps are
/// used. At most `keep` values of k are recorded.
OrbitRecord orbit_from_origin(const RotationParams& params, std::size_t cap, std::size_t keep = SIZE_MAX);

/// Origin-orbit period only; uses machine integers for rational parameters
/// and falls back to exact arithmetic when values grow.
std::optional<std::size_t> origin_period(const RotationParams& params, std::size_t cap);

/// Shifted-addition search from (1, c1, c2, c1, 1). Returns the candidate
/// R(x) = sum k_i x^i, or nothing when `cap` steps pass without stopping.
std::optional<IntPolynomial> shifted_addition_search(const RotationParams& params, std::size_t cap);

/// (a_n, a_{n+1}) -> (a_{n+1}, a_{n+2}) with 0 <= a_{n+2} + lambda a_{n+1} + a_n < 1.
std::array<Integer, 2> step_srs2(const std::array<Integer, 2>& state, const Scalar& lambda);
std::optional<std::size_t> srs2_period(const std::array<Integer, 2>& seed, const Scalar& lambda, std::size_t cap);

std::string to_string(OrbitStatus s);

}  // namespace salem

#endif
