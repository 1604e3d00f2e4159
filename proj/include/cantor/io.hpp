#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cantor/polyline.hpp"
#include "cantor/rational_map.hpp"
#include "cantor/reduction.hpp"
#include "cantor/topology.hpp"

namespace cantor {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "cantor-atlas/1";

/// Parses "re+imi" literals: "0+1.665i", "-2-0.5i", "3i", "1.5".
Complex parse_complex(const std::string& text);
std::string format_complex(Complex z);

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);
/// [re, im] for finite points, the string "inf" for infinity.
Json point_to_json(const SpherePoint& z);
SpherePoint point_from_json(const Json& j);

/// Samples as [t, re, im, chart] with chart 0 = finite, 1 = infinity chart value.
Json polyline_to_json(const Polyline& p);
Polyline polyline_from_json(const Json& j);

/// {generators, permutations (1-based), slots (signed 1-based letters)}.
Json table_to_json(const RecursionTable& t);
RecursionTable table_from_json(const Json& j);
Json quotient_to_json(const QuotientRecursion& q);

/// Preset name plus parameter, or raw ascending coefficient lists.
struct MapSpec {
  std::string preset;  // "kameyama-quartic", "quadratic", or empty for raw
  Complex parameter{0.0, 0.0};
  Poly num;
  Poly den;

  RationalMap resolve() const;
  std::string describe() const;
  bool is_quartic() const { return preset == "kameyama-quartic"; }

  static MapSpec quartic(Complex a) { return {"kameyama-quartic", a, {}, {}}; }
  static MapSpec quadratic(Complex c) { return {"quadratic", c, {}, {}}; }
};

/// Accepts "quartic" as an alias for the quartic preset.
MapSpec make_preset(const std::string& name, Complex parameter);
Json map_to_json(const MapSpec& m);
MapSpec map_from_json(const Json& j);

/// Writes to a temporary file in the same directory, then renames.
void write_atomic(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace cantor
