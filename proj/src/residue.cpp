#include "lacunary/residue.hpp"

#include <ostream>

namespace lacunary {

Residue Residue::inverse() const {
  if (!bound()) throw NotInvertible("unbound residue has no inverse");
  // Extended Euclid on signed 128-bit values; all magnitudes stay below 2^63.
  __int128 old_r = static_cast<__int128>(value_), r = static_cast<__int128>(modulus_);
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const __int128 q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  if (old_r != 1) throw NotInvertible("residue " + std::to_string(value_) + " is not a unit mod " +
                                      std::to_string(modulus_));
  __int128 m = static_cast<__int128>(modulus_);
  __int128 inv = old_s % m;
  if (inv < 0) inv += m;
  return raw(static_cast<u64>(inv), modulus_);
}

std::ostream& operator<<(std::ostream& os, const Residue& r) {
  if (!r.bound()) return os << r.literal();
  return os << r.value() << " (mod " << r.modulus() << ')';
}

}  // namespace lacunary
