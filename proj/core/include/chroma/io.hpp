#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "chroma/instance.hpp"
#include "chroma/lmcsc.hpp"

namespace chroma::io {

using json = nlohmann::ordered_json;

/// Malformed file or wrong file kind.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed file describing an unusable instance (e.g. diameter != 1).
class InvalidInstance : public Error {
 public:
  using Error::Error;
};

/// Significant digits of every number written to a file.
inline constexpr int kSignificantDigits = 12;

/// Rounds to kSignificantDigits significant digits; -0 becomes 0.
double round_sig(double v);

struct InstanceFile {
  Instance instance;
  /// Optional free-form block naming gadget parts.
  json annotations;
};

/// {"diameter": 1.0, "disks": [{"x", "y", "color"}], "annotations"?}.
/// Throws ParseError on structure errors, InvalidInstance when the diameter
/// is not 1, MissingColor when colors are not contiguous from 0.
InstanceFile parse_instance(const json& j);
json to_json(const InstanceFile& f);

/// {"points": [{"x", "y", "color"}]}.
PrecisePointSet parse_points(const json& j);
json points_to_json(const PrecisePointSet& ps);

struct OracleSummary {
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double radius = 0.0;
};

struct SolutionFile {
  std::string command;
  double radius = 0.0;
  Point center;
  Realization realization;
  std::optional<Circle> centers_circle;
  std::optional<Certificate> certificate;
  std::optional<OracleSummary> oracle;
};

json to_json(const SolutionFile& s);
SolutionFile parse_solution(const json& j);

/// Pretty JSON text with a trailing newline.
std::string dump(const json& j);

/// Reads and parses a JSON file; ParseError on I/O or syntax errors.
json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace chroma::io
