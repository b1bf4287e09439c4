#pragma once

#include "powercolor/errors.hpp"
#include "powercolor/graph.hpp"
#include "powercolor/group.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace powercolor {

/// An input error tied to a 1-based line of the source text.
class SpecError : public InputError {
public:
  SpecError(std::size_t line, const std::string &message);

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// Parses one of
///   {"kind":"cayley","identity":i,"table":[[...],...]}
///   {"kind":"perm","degree":m,"generators":[[...],...]}
///   {"kind":"named","name":"cyclic|dihedral|symmetric|quaternion8|product","params":[...]}
/// Unknown fields are rejected. For "product" the params are nested specs.
FiniteGroup parse_group_spec(std::string_view text);

/// Named constructor with textual parameters, as given on a command line.
/// Product components are written name:param,param, e.g. cyclic:6.
FiniteGroup named_group(const std::string &name, const std::vector<std::string> &params);

/// Reads {"vertex_count":n,"edges":[[u,v],...]}; the remaining fields of the
/// power-graph JSON export are accepted and ignored.
BitGraph parse_graph_json(std::string_view text);

} // namespace powercolor
