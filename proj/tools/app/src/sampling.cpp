#include "twistor/app/sampling.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <string>
#include <thread>

#include <fmt/format.h>
#include <twistor/cp3.hpp>
#include <twistor/nearly_kaehler.hpp>
#include <twistor/nijenhuis.hpp>
#include <twistor/random.hpp>
#include <twistor/z_geometry.hpp>

#include "twistor/app/documents.hpp"

namespace twistor::app {

namespace {

constexpr Real kTwoPi = 6.283185307179586476925286766559;

Real uniform_angle(Rng& rng) { return std::uniform_real_distribution<Real>(0.0, kTwoPi)(rng); }

bool parse_flag(std::string_view s) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw ParseError(fmt::format("expected true/false, got '{}'", s));
}

Real parse_field(const std::string& s) {
  std::size_t used = 0;
  Real v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw ParseError(fmt::format("bad number '{}'", s));
  return v;
}

}  // namespace

SampleSet parse_sample_set(std::string_view name) {
  if (name == "ank") return SampleSet::Ank;
  if (name == "integrable") return SampleSet::Integrable;
  if (name == "random") return SampleSet::Random;
  if (name == "polar") return SampleSet::Polar;
  if (name == "edge01") return SampleSet::Edge01;
  throw BadSetError(fmt::format("unknown sample set '{}'", name));
}

std::string_view to_string(SampleSet set) {
  switch (set) {
    case SampleSet::Ank: return "ank";
    case SampleSet::Integrable: return "integrable";
    case SampleSet::Random: return "random";
    case SampleSet::Polar: return "polar";
    case SampleSet::Edge01: return "edge01";
  }
  return "?";
}

ACS sample_structure(SampleSet set, std::uint64_t seed, std::uint64_t index) {
  Rng rng = make_rng(seed, index);
  switch (set) {
    case SampleSet::Ank: {
      const Vec3 p = random_unit3(rng);
      return ank_circle_point(p(0), p(1), p(2), uniform_angle(rng));
    }
    case SampleSet::Integrable: {
      const Mat3 o1 = random_rotation<3>(rng);
      const Mat3 o2 = random_rotation<3>(rng);
      return statement1_structure(o1, o2);
    }
    case SampleSet::Random:
      return conjugate(vertex_structure(0), random_rotation<6>(rng));
    case SampleSet::Polar: {
      const Vec3 plus = random_unit3(rng);
      const Vec3 minus = random_unit3(rng);
      const PolarPairParams p{plus(0), plus(1), plus(2), minus(0), minus(1), minus(2)};
      return cp3_to_acs(circle_point(p, uniform_angle(rng)));
    }
    case SampleSet::Edge01: {
      const Vec3 p = random_unit3(rng);
      return acs_from_form(lemma1_form(p(0), p(1), p(2)));
    }
  }
  throw BadSetError("unknown sample set");
}

CloudRow make_row(const ACS& acs) {
  CloudRow row;
  row.b = tetra_coords(acs_to_cp3(acs)).b;
  row.nijenhuis_norm = nijenhuis_norm(acs);
  row.integrable = is_integrable(acs);
  row.ank = is_ank(acs);
  return row;
}

std::vector<CloudRow> sample(SampleSet set, int count, std::uint64_t seed, bool parallel) {
  if (count < 1) throw ParseError("count must be at least 1");
  std::vector<CloudRow> rows(static_cast<std::size_t>(count));
  auto fill = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) rows[k] = make_row(sample_structure(set, seed, k));
  };
  const std::size_t workers = parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1;
  if (workers == 1) {
    fill(0, rows.size());
    return rows;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (rows.size() + workers - 1) / workers;
  for (std::size_t begin = 0; begin < rows.size(); begin += chunk)
    pool.emplace_back(fill, begin, std::min(rows.size(), begin + chunk));
  for (auto& t : pool) t.join();
  return rows;
}

void write_csv(std::ostream& out, const std::vector<CloudRow>& rows) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    out << fmt::format("{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{},{}\n", r.b[0], r.b[1], r.b[2], r.b[3],
                       r.nijenhuis_norm, r.integrable, r.ank);
  }
}

std::vector<CloudRow> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw ParseError("missing or unexpected CSV header");
  std::vector<CloudRow> rows;
  while (std::getline(in, line)) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      fields.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 7) throw ParseError(fmt::format("row {} has {} fields", rows.size() + 1, fields.size()));
    CloudRow r;
    for (int k = 0; k < 4; ++k) r.b[k] = parse_field(fields[k]);
    r.nijenhuis_norm = parse_field(fields[4]);
    r.integrable = parse_flag(fields[5]);
    r.ank = parse_flag(fields[6]);
    rows.push_back(r);
  }
  return rows;
}

bool row_consistent(const CloudRow& row) {
  Real sum = 0.0;
  for (Real b : row.b) {
    if (b < -1e-12) return false;
    sum += b;
  }
  if (std::abs(sum - 1.0) > 1e-9) return false;
  if (row.integrable && row.nijenhuis_norm >= 1e-6) return false;
  if (row.ank && std::abs(row.nijenhuis_norm - calibrated_max_norm()) > 1e-6) return false;
  return true;
}

}  // namespace twistor::app
