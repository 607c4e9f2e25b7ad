#include "output.hpp"

#include <charconv>
#include <sstream>

#include "lacunary/errors.hpp"
#include "lacunary/residue.hpp"

namespace lacunary::cli {

namespace {

std::uint64_t parse_u64(std::string_view text, std::string_view what) {
  std::uint64_t v = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty())
    throw InvalidArgument("bad " + std::string(what) + ": '" + std::string(text) + "'");
  return v;
}

}  // namespace

OutputRecord OutputRecord::from(const Evaluation& e, std::int64_t micros) {
  OutputRecord rec;
  rec.n = e.params.n();
  rec.r = e.params.r();
  rec.m = e.params.m();
  rec.kind = std::string(to_string(e.params.kind()));
  rec.engine = e.engine.str();
  rec.value = to_string(e.value);
  rec.modulus = e.modulus;
  rec.micros = micros;
  return rec;
}

void to_json(nlohmann::json& j, const OutputRecord& rec) {
  j = nlohmann::json{{"n", rec.n},           {"r", rec.r},         {"m", rec.m},
                     {"kind", rec.kind},     {"engine", rec.engine}, {"value", rec.value},
                     {"modulus", nullptr},   {"micros", rec.micros}};
  if (rec.modulus) j["modulus"] = *rec.modulus;
}

void from_json(const nlohmann::json& j, OutputRecord& rec) {
  j.at("n").get_to(rec.n);
  j.at("r").get_to(rec.r);
  j.at("m").get_to(rec.m);
  j.at("kind").get_to(rec.kind);
  j.at("engine").get_to(rec.engine);
  j.at("value").get_to(rec.value);
  j.at("micros").get_to(rec.micros);
  const auto& mod = j.at("modulus");
  rec.modulus = mod.is_null() ? std::nullopt : std::optional<std::uint64_t>(mod.get<std::uint64_t>());
}

std::string format_human(const OutputRecord& rec) {
  std::ostringstream os;
  os << (rec.kind == "star" ? "T*(" : "T(") << rec.n << ',' << rec.r << ',' << rec.m << ')';
  if (rec.modulus) os << " mod " << *rec.modulus;
  os << " = " << rec.value << "  [" << rec.engine << ", " << rec.micros << " us]";
  return os.str();
}

std::uint64_t parse_modulus(std::string_view text) {
  if (text.starts_with("p2:")) {
    const std::uint64_t p = parse_u64(text.substr(3), "modulus");
    if (p < 2 || p > 3037000499ULL) throw InvalidArgument("p2:<p> needs 2 <= p with p^2 < 2^63");
    return p * p;
  }
  const std::uint64_t m = parse_u64(text, "modulus");
  if (m < 2 || m >= Residue::max_modulus) throw InvalidArgument("modulus must lie in [2, 2^63)");
  return m;
}

std::vector<std::uint64_t> parse_index_list(std::string_view text) {
  std::vector<std::uint64_t> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    const auto dots = item.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(parse_u64(item, "index"));
    } else {
      const std::uint64_t lo = parse_u64(item.substr(0, dots), "range start");
      const std::uint64_t hi = parse_u64(item.substr(dots + 2), "range end");
      if (hi < lo) throw InvalidArgument("empty range '" + std::string(item) + "'");
      for (std::uint64_t v = lo; v <= hi; ++v) out.push_back(v);
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (out.empty()) throw InvalidArgument("no values given");
  return out;
}

}  // namespace lacunary::cli
