#include "twistor/app/classify.hpp"

#include <fmt/format.h>
#include <nlohmann/json.hpp>
#include <twistor/nearly_kaehler.hpp>
#include <twistor/nijenhuis.hpp>
#include <twistor/z_geometry.hpp>

#include "twistor/app/documents.hpp"

namespace twistor::app {

namespace {

using Json = nlohmann::ordered_json;

Json mat3_json(const Mat3& m) {
  Json rows = Json::array();
  for (int r = 0; r < 3; ++r) rows.push_back({m(r, 0), m(r, 1), m(r, 2)});
  return rows;
}

std::string mat3_text(const Mat3& m) {
  std::string out;
  for (int r = 0; r < 3; ++r)
    out += fmt::format("    [{:>24.17g} {:>24.17g} {:>24.17g}]\n", m(r, 0), m(r, 1), m(r, 2));
  return out;
}

std::string_view direction_name(Direction d) { return d == Direction::Maximize ? "max" : "min"; }

}  // namespace

Classification classify(const ACS& acs, std::optional<std::string> label) {
  return Classification{acs,
                        std::move(label),
                        blocks(acs),
                        nijenhuis_norm(acs),
                        is_integrable(acs),
                        is_ank(acs),
                        acs_to_cp3(acs),
                        tetra_coords(acs_to_cp3(acs)),
                        polar_contains(TwoForm::basis(5, 6), fundamental_form(acs))};
}

std::string to_json(const Classification& c) {
  Json j;
  j["in_z"] = true;
  if (c.label) j["label"] = *c.label;
  j["blocks"] = {{"A", mat3_json(c.blocks.a)}, {"B", mat3_json(c.blocks.b)}, {"C", mat3_json(c.blocks.c)}};
  j["nijenhuis_norm"] = c.nijenhuis_norm;
  j["integrable"] = c.integrable;
  j["ank"] = c.ank;
  Json cp3 = Json::array();
  for (int a = 0; a < 4; ++a) cp3.push_back(format_complex(c.cp3.coords()(a)));
  j["cp3"] = cp3;
  j["tetra"] = c.tetra.b;
  j["polar_e56"] = c.polar_e56;
  return j.dump(2) + "\n";
}

std::string to_text(const Classification& c) {
  std::string out;
  if (c.label) out += fmt::format("label            {}\n", *c.label);
  out += "in Z             yes\n";
  out += "A\n" + mat3_text(c.blocks.a) + "B\n" + mat3_text(c.blocks.b) + "C\n" + mat3_text(c.blocks.c);
  out += fmt::format("|N|              {:.17g}\n", c.nijenhuis_norm);
  out += fmt::format("integrable       {}\n", c.integrable);
  out += fmt::format("ank              {}\n", c.ank);
  out += "CP3              [";
  for (int a = 0; a < 4; ++a) out += (a ? ", " : "") + format_complex(c.cp3.coords()(a));
  out += "]\n";
  out += fmt::format("tetra            ({:.17g}, {:.17g}, {:.17g}, {:.17g})\n", c.tetra.b[0], c.tetra.b[1],
                     c.tetra.b[2], c.tetra.b[3]);
  out += fmt::format("polar e5^e6      {}\n", c.polar_e56);
  return out;
}

std::string membership_json(const MembershipReport& r) {
  Json j;
  j["in_z"] = false;
  j["residuals"] = {{"complex", r.complex_residual},
                    {"orthogonal", r.orthogonal_residual},
                    {"orientation", r.orientation}};
  return j.dump(2) + "\n";
}

std::string membership_text(const MembershipReport& r) {
  return fmt::format(
      "in Z             no\n"
      "  |J^2 + 1|      {:.17g}\n"
      "  |J^T J - 1|    {:.17g}\n"
      "  orientation    {} (reference {})\n",
      r.complex_residual, r.orthogonal_residual, r.orientation, reference_orientation());
}

std::string to_json(const SearchReport& r, Direction dir) {
  Json j;
  j["direction"] = direction_name(dir);
  j["best_value"] = r.best_value;
  j["ratio"] = r.best_value / calibrated_max_norm();
  j["sqrt_kappa"] = calibrated_max_norm();
  j["iterations"] = r.iterations;
  j["restarts"] = r.restarts;
  j["converged"] = r.converged;
  const Blocks b = blocks(r.best_acs);
  j["norm_a"] = b.a.norm();
  j["norm_c"] = b.c.norm();
  j["matrix"] = StructureDocument::from_acs(r.best_acs).matrix;
  return j.dump(2) + "\n";
}

std::string to_text(const SearchReport& r, Direction dir) {
  const Blocks b = blocks(r.best_acs);
  return fmt::format(
      "direction        {}\n"
      "best |N|         {:.17g}\n"
      "ratio to sqrt(k) {:.17g}\n"
      "sqrt(kappa)      {:.17g}\n"
      "iterations       {}\n"
      "restarts         {}\n"
      "converged        {}\n"
      "|A|, |C|         {:.17g}, {:.17g}\n",
      direction_name(dir), r.best_value, r.best_value / calibrated_max_norm(), calibrated_max_norm(), r.iterations,
      r.restarts, r.converged, b.a.norm(), b.c.norm());
}

}  // namespace twistor::app
