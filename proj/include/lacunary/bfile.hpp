#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lacunary/types.hpp"

namespace lacunary {

/// OEIS b-file: `#` comment lines, then `index value` data lines with
/// consecutive indices. Negative values may use ASCII '-', the LaTeX "--",
/// or the typographic en dash / minus sign.
struct BFile {
  std::string id;
  std::vector<std::pair<std::int64_t, BigInt>> terms;

  std::int64_t offset() const { return terms.empty() ? 0 : terms.front().first; }
};

BFile parse_bfile(std::istream& in, std::string id = {});
BFile read_bfile(const std::string& path);

/// Parses a signed decimal integer accepting the dash variants above.
std::optional<BigInt> parse_signed_integer(std::string_view text);

}  // namespace lacunary
