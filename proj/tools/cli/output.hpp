#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lacunary/evaluate.hpp"

namespace lacunary::cli {

/// One printed evaluation. Values travel as exact decimal strings.
struct OutputRecord {
  int n = 0;
  int r = 0;
  std::uint64_t m = 0;
  std::string kind;
  std::string engine;
  std::string value;
  std::optional<std::uint64_t> modulus;
  std::int64_t micros = 0;

  static OutputRecord from(const Evaluation& e, std::int64_t micros);
  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

void to_json(nlohmann::json& j, const OutputRecord& rec);
void from_json(const nlohmann::json& j, OutputRecord& rec);

/// `T(5,0,19) = 107883` style line with engine and timing.
std::string format_human(const OutputRecord& rec);

/// "p2:<p>" for p^2, or a plain integer modulus in [2, 2^63).
std::uint64_t parse_modulus(std::string_view text);

/// Comma-separated values and inclusive ranges: "19", "0..20", "1,5,10..12".
std::vector<std::uint64_t> parse_index_list(std::string_view text);

}  // namespace lacunary::cli
