#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <twistor/acs.hpp>
#include <twistor/cp3.hpp>

namespace twistor::app {

/// Malformed command-line or file input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"matrix": [36 reals, row-major], "label": "..."}; label optional.
struct StructureDocument {
  std::array<Real, 36> matrix{};
  std::optional<std::string> label;

  static StructureDocument from_acs(const ACS& acs, std::optional<std::string> label = std::nullopt);
  Mat6 to_matrix() const;
  /// ACS::validate of the matrix; throws twistor::Error on rejection.
  ACS to_acs() const;
};

StructureDocument parse_structure_document(std::string_view json);
std::string to_json(const StructureDocument& doc);

/// "a+bi" with optional whitespace; also "a", "bi", "i", "-i".
Complex parse_complex(std::string_view text);
/// Four comma-separated complex coordinates.
CP3Point parse_cp3(std::string_view text);

/// 17 significant digits, shortest form for integers ("%.17g").
std::string format_real(Real x);
/// a+bi with both parts at 17 significant digits.
std::string format_complex(Complex z);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace twistor::app
