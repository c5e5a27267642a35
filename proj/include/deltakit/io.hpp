#pragma once

#include <string>
#include <string_view>

#include "deltakit/binary_matroid.hpp"
#include "deltakit/ribbon.hpp"
#include "deltakit/setsystem.hpp"

namespace deltakit {

// JSON exchange formats. Parse functions throw ParseError naming the
// offending field; serializers emit a single compact line.

/// {"ground":["1",...],"feasible":[["3","4"],...]}
SetSystem parse_set_system(std::string_view text);
std::string serialize(const SetSystem& s);

/// {"vertices":[["h1",...],...],"edges":[{"label":"a","ends":["h1","h2"],"twisted":false},...],"isolated_vertices":0}
RotationSystem parse_rotation_system(std::string_view text);
std::string serialize(const RotationSystem& rs);

/// {"labels":["e1",...],"rows":["0110",...]}
Gf2Matrix parse_matrix(std::string_view text);
std::string serialize(const Gf2Matrix& m);

/// Whole file as a string; throws ParseError("file", ...) if unreadable.
std::string read_file(const std::string& path);

}  // namespace deltakit
