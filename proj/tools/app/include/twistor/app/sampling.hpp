#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string_view>
#include <vector>

#include <twistor/acs.hpp>

namespace twistor::app {

enum class SampleSet { Ank, Integrable, Random, Polar, Edge01 };

class BadSetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "ank", "integrable", "random", "polar" or "edge01"; throws BadSetError.
SampleSet parse_sample_set(std::string_view name);
std::string_view to_string(SampleSet set);

/// Structure number `index` of `set` for `seed`. Each index draws from its
/// own generator stream, so samples do not depend on how many precede them.
///   ank         ank_circle_point with (r, x, u) uniform on S^2, theta uniform
///   integrable  statement1_structure of two Haar rotations
///   random      Haar conjugate of I0
///   polar       circle_point with both pole triples uniform on S^2
///   edge01      lemma1_form with (s, c1, c2) uniform on S^2
ACS sample_structure(SampleSet set, std::uint64_t seed, std::uint64_t index);

/// One point of the tetrahedron picture.
struct CloudRow {
  std::array<Real, 4> b{};
  Real nijenhuis_norm = 0.0;
  bool integrable = false;
  bool ank = false;
};

CloudRow make_row(const ACS& acs);

/// Rows for indices 0..count-1, in index order.
std::vector<CloudRow> sample(SampleSet set, int count, std::uint64_t seed, bool parallel = true);

inline constexpr std::string_view kCsvHeader = "b0,b1,b2,b3,nijenhuis_norm,integrable,ank";

/// Header line and one LF-terminated line per row; reals at 17 digits.
void write_csv(std::ostream& out, const std::vector<CloudRow>& rows);
/// Inverse of write_csv; throws ParseError on a malformed header or row.
std::vector<CloudRow> read_csv(std::istream& in);

/// b is a point of the tetrahedron (entries >= 0, sum 1 within 1e-9) and the
/// flags agree with the norm: integrable rows below 1e-6, ank rows at sqrt(kappa).
bool row_consistent(const CloudRow& row);

}  // namespace twistor::app
