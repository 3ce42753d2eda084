#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relinfo/hydrogenic.hpp"

namespace relinfo::catalog {

using hydrogenic::QuantumState;

inline constexpr int kMaxCatalogN = 8;

/// Every state with n <= n_max in canonical order (n, l, j, m_j ascending).
/// Throws DomainError for n_max outside [1, 8].
std::vector<QuantumState> all_states(int n_max);

/// States with m_j = j only, same ordering.
std::vector<QuantumState> stretched_states(int n_max);

/// Canonical ordering key: n, then l, then j, then m_j.
bool canonical_less(const QuantumState& a, const QuantumState& b);

/// Spectroscopic shorthand: "2s", "3p-" (j = l - 1/2), "4d" (j = l + 1/2),
/// with an optional ":m_j" suffix ("3d:-3/2"); m_j defaults to j.
QuantumState parse_spectroscopic(const std::string& label);

/// "0.5", "-3/2", "1" -> HalfInteger.
HalfInteger parse_half_integer(const std::string& text);

/// Uniform grid of `steps` values from `from` to `to` inclusive.
std::vector<double> linear_grid(double from, double to, int steps);
/// Geometric grid of `steps` values from `from` to `to` inclusive (from > 0).
std::vector<double> log_grid(double from, double to, int steps);

} // namespace relinfo::catalog
