#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "levifol/errors.hpp"
#include "levifol/vecfield.hpp"

namespace levifol {

/// Rejected foliation source text, located by 1-based line and column.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

/// A parsed foliation definition:
///
///     # comment
///     vars: x, y;
///     gen: -1*y*dx + x*dy;
///     order: 5;          # optional
///     max_degree: 8;     # optional
struct FoliationSpec {
  std::vector<std::string> variables;
  std::vector<std::string> generator_sources;
  std::vector<PolyVectorField> generators;
  std::map<std::string, int> options;
};

FoliationSpec parse_spec(const std::string& source);

/// Parses one expression over the given variables. `d<var>` denotes the coordinate field of a
/// declared variable unless `d<var>` is itself declared. The result must be a vector field.
PolyVectorField parse_field(const std::string& expr, const std::vector<std::string>& vars);
Polynomial parse_polynomial(const std::string& expr, const std::vector<std::string>& vars);

/// Canonical source text; parse_spec(render_spec(s)) reproduces s up to generator sources.
std::string render_spec(const FoliationSpec& spec);

}  // namespace levifol
