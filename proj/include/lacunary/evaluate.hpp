#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lacunary/lacunary.hpp"

namespace lacunary {

enum class EngineKind { direct, poly, circulant, split, recurrence, cosine };

/// Engine selector; `divisor` is the block count d of the split engine.
struct EngineId {
  EngineKind kind = EngineKind::direct;
  int divisor = 0;

  /// "direct", "poly", "circulant", "split:<d>", "recurrence", "cosine".
  static EngineId parse(std::string_view text);
  std::string str() const;

  /// False only for the cosine form; the split engine's float path is confidence-checked.
  bool exact() const { return kind != EngineKind::cosine; }
  /// Engines that compute residues natively instead of reducing an exact value.
  bool native_modulus() const {
    return kind == EngineKind::poly || kind == EngineKind::circulant || kind == EngineKind::recurrence;
  }

  friend bool operator==(const EngineId&, const EngineId&) = default;
};

struct Evaluation {
  EngineId engine;
  SumParams params;
  /// Exact value, or its representative in [0, modulus) when a modulus was given.
  BigInt value;
  std::optional<std::uint64_t> modulus;
  std::optional<double> rounding_distance;
};

/// Evaluates one sum with the chosen engine.
Evaluation evaluate(const SumParams& params, const EngineId& engine,
                    std::optional<std::uint64_t> modulus = std::nullopt);

/// Evaluates a batch on `jobs` threads; output order follows input order.
std::vector<Evaluation> evaluate_batch(std::span<const SumParams> batch, const EngineId& engine,
                                       std::optional<std::uint64_t> modulus = std::nullopt, unsigned jobs = 1);

}  // namespace lacunary
