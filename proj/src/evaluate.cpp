#include "lacunary/evaluate.hpp"

#include <charconv>

#include "lacunary/engines.hpp"
#include "lacunary/errors.hpp"
#include "lacunary/parallel.hpp"
#include "lacunary/recurrence.hpp"

namespace lacunary {

EngineId EngineId::parse(std::string_view text) {
  if (text == "direct") return {EngineKind::direct};
  if (text == "poly") return {EngineKind::poly};
  if (text == "circulant") return {EngineKind::circulant};
  if (text == "recurrence") return {EngineKind::recurrence};
  if (text == "cosine") return {EngineKind::cosine};
  if (text.starts_with("split:")) {
    const auto digits = text.substr(6);
    int d = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), d);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && d >= 1) return {EngineKind::split, d};
  }
  throw InvalidArgument("unknown engine '" + std::string(text) +
                        "' (expected direct, poly, circulant, split:<d>, recurrence, cosine)");
}

std::string EngineId::str() const {
  switch (kind) {
    case EngineKind::direct: return "direct";
    case EngineKind::poly: return "poly";
    case EngineKind::circulant: return "circulant";
    case EngineKind::split: return "split:" + std::to_string(divisor);
    case EngineKind::recurrence: return "recurrence";
    case EngineKind::cosine: return "cosine";
  }
  return "?";
}

namespace {

BigInt reduce(const BigInt& v, std::optional<std::uint64_t> modulus) {
  return modulus ? floor_mod(v, BigInt(*modulus)) : v;
}

}  // namespace

Evaluation evaluate(const SumParams& params, const EngineId& engine, std::optional<std::uint64_t> modulus) {
  Evaluation out{engine, params, BigInt(0), modulus, std::nullopt};
  if (modulus && *modulus < 2) throw InvalidArgument("modulus must be at least 2");

  switch (engine.kind) {
    case EngineKind::direct:
      out.value = reduce(direct_value(params).value, modulus);
      break;
    case EngineKind::poly:
      out.value = modulus ? BigInt(poly_engine(params, *modulus).value()) : poly_engine(params).value;
      break;
    case EngineKind::circulant: {
      const CirculantSpec spec{params.n(), params.kind() == Kind::alternating};
      out.value = modulus ? BigInt(circulant_engine(spec, params.m(), *modulus)[params.r()].value())
                          : circulant_engine(spec, params.m())[params.r()];
      break;
    }
    case EngineKind::split: {
      if (params.r() != 0) throw InvalidArgument("the split engine covers r = 0 only");
      const EngineReport report = split_engine(params.n(), engine.divisor, params.m(), params.kind());
      out.value = reduce(report.value.value, modulus);
      out.rounding_distance = report.rounding_distance;
      break;
    }
    case EngineKind::recurrence: {
      const RecurrenceSpec spec = recurrence_for(params);
      out.value = modulus ? BigInt(recur_eval_as(spec, params.m(), Residue::from_unsigned(1, *modulus)).value())
                          : recur_eval(spec, params.m());
      break;
    }
    case EngineKind::cosine: {
      const EngineReport report = ramus_cosine(params);
      out.value = reduce(report.value.value, modulus);
      out.rounding_distance = report.rounding_distance;
      break;
    }
  }
  return out;
}

std::vector<Evaluation> evaluate_batch(std::span<const SumParams> batch, const EngineId& engine,
                                       std::optional<std::uint64_t> modulus, unsigned jobs) {
  return parallel_map(batch.size(), jobs, [&](std::size_t i) { return evaluate(batch[i], engine, modulus); });
}

}  // namespace lacunary
