#include "twistor/random.hpp"

namespace twistor {

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

Vec3 random_unit3(Rng& rng) {
  std::normal_distribution<Real> gauss(0.0, 1.0);
  Vec3 v;
  do {
    v << gauss(rng), gauss(rng), gauss(rng);
  } while (v.norm() < 1e-12);
  return v.normalized();
}

}  // namespace twistor
