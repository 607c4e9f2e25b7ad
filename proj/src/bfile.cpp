#include "lacunary/bfile.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lacunary/errors.hpp"

namespace lacunary {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::optional<BigInt> parse_signed_integer(std::string_view text) {
  text = trim(text);
  bool negative = false;
  static constexpr std::string_view dashes[] = {"\xE2\x80\x93", "\xE2\x88\x92", "--", "-"};
  for (auto dash : dashes) {
    if (text.starts_with(dash)) {
      negative = true;
      text.remove_prefix(dash.size());
      break;
    }
  }
  if (text.empty()) return std::nullopt;
  for (char c : text)
    if (c < '0' || c > '9') return std::nullopt;
  const BigInt v{std::string(text)};
  return negative ? BigInt(-v) : v;
}

BFile parse_bfile(std::istream& in, std::string id) {
  BFile file;
  file.id = std::move(id);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;

    const auto split = body.find_first_of(" \t");
    if (split == std::string_view::npos) throw ParseError(line_no, "expected 'index value'");
    const auto index = parse_signed_integer(body.substr(0, split));
    const auto value = parse_signed_integer(body.substr(split + 1));
    if (!index || !value) throw ParseError(line_no, "malformed data line '" + std::string(body) + "'");
    if (*index > BigInt(std::numeric_limits<std::int64_t>::max()) ||
        *index < BigInt(std::numeric_limits<std::int64_t>::min()))
      throw ParseError(line_no, "index out of range");
    const auto idx = index->convert_to<std::int64_t>();
    if (!file.terms.empty() && idx != file.terms.back().first + 1)
      throw ParseError(line_no, "index " + std::to_string(idx) + " does not follow " +
                                    std::to_string(file.terms.back().first));
    file.terms.emplace_back(idx, *value);
  }
  if (file.terms.empty()) throw ParseError(line_no, "no data lines");
  return file;
}

BFile read_bfile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return parse_bfile(in, std::filesystem::path(path).stem().string());
}

}  // namespace lacunary
