#include "twistor/app/documents.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include <fmt/format.h>
#include <nlohmann/json.hpp>
#include <twistor/error.hpp>

namespace twistor::app {

namespace {

Real parse_real(std::string_view s, std::string_view whole) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  Real out = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (s.empty() || ec != std::errc() || end != s.data() + s.size())
    throw ParseError(fmt::format("cannot parse complex number '{}'", whole));
  return out;
}

}  // namespace

StructureDocument StructureDocument::from_acs(const ACS& acs, std::optional<std::string> label) {
  StructureDocument doc;
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c) doc.matrix[6 * r + c] = acs.matrix()(r, c);
  doc.label = std::move(label);
  return doc;
}

Mat6 StructureDocument::to_matrix() const {
  Mat6 m;
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c) m(r, c) = matrix[6 * r + c];
  return m;
}

ACS StructureDocument::to_acs() const { return ACS::validate(to_matrix()); }

StructureDocument parse_structure_document(std::string_view json) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(fmt::format("invalid JSON: {}", e.what()));
  }
  if (!j.is_object() || !j.contains("matrix") || !j["matrix"].is_array())
    throw ParseError("structure document needs a \"matrix\" array");
  const auto& m = j["matrix"];
  if (m.size() != 36) throw ParseError(fmt::format("matrix has {} entries, expected 36", m.size()));
  StructureDocument doc;
  for (std::size_t k = 0; k < 36; ++k) {
    if (!m[k].is_number()) throw ParseError(fmt::format("matrix entry {} is not a number", k));
    doc.matrix[k] = m[k].get<Real>();
  }
  if (j.contains("label")) {
    if (!j["label"].is_string()) throw ParseError("label must be a string");
    doc.label = j["label"].get<std::string>();
  }
  return doc;
}

std::string to_json(const StructureDocument& doc) {
  nlohmann::ordered_json j;
  j["matrix"] = doc.matrix;
  if (doc.label) j["label"] = *doc.label;
  return j.dump();
}

Complex parse_complex(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw ParseError("empty complex number");
  if (s.back() != 'i') return {parse_real(s, text), 0.0};

  const std::string_view body(s.data(), s.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string_view re = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
  std::string_view im = split == std::string_view::npos ? body : body.substr(split);
  Real imag = 0.0;
  if (im.empty() || im == "+")
    imag = 1.0;
  else if (im == "-")
    imag = -1.0;
  else
    imag = parse_real(im, text);
  return {re.empty() ? 0.0 : parse_real(re, text), imag};
}

CP3Point parse_cp3(std::string_view text) {
  std::vector<Complex> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    parts.push_back(parse_complex(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 4) throw ParseError(fmt::format("expected 4 coordinates, got {}", parts.size()));
  try {
    return CP3Point(parts[0], parts[1], parts[2], parts[3]);
  } catch (const twistor::Error& e) {
    throw ParseError(e.what());
  }
}

std::string format_real(Real x) { return fmt::format("{:.17g}", x); }

std::string format_complex(Complex z) {
  return fmt::format("{:.17g}{}{:.17g}i", z.real(), std::signbit(z.imag()) ? "-" : "+", std::abs(z.imag()));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(fmt::format("cannot open '{}'", path));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(fmt::format("cannot open '{}' for writing", path));
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw IoError(fmt::format("write to '{}' failed", path));
}

}  // namespace twistor::app
