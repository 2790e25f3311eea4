#pragma once

#include <optional>
#include <string>

#include <twistor/acs.hpp>
#include <twistor/cp3.hpp>
#include <twistor/extremum.hpp>

namespace twistor::app {

struct Classification {
  ACS acs;
  std::optional<std::string> label;
  Blocks blocks;
  Real nijenhuis_norm;
  bool integrable;
  bool ank;
  CP3Point cp3;
  TetraCoords tetra;
  /// Orthogonal to e^5 ^ e^6.
  bool polar_e56;
};

Classification classify(const ACS& acs, std::optional<std::string> label = std::nullopt);

std::string to_json(const Classification& c);
std::string to_text(const Classification& c);

/// Named residuals of a matrix rejected from Z.
std::string membership_json(const MembershipReport& r);
std::string membership_text(const MembershipReport& r);

/// SearchReport plus best_value / sqrt(kappa).
std::string to_json(const SearchReport& r, Direction dir);
std::string to_text(const SearchReport& r, Direction dir);

}  // namespace twistor::app
