#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "osa/exterior.hpp"
#include "osa/matroid.hpp"

namespace osa {

enum class InputFormat { Circuits, Matrix, Graph };

std::string format_name(InputFormat f);
InputFormat parse_format(const std::string& name);
/// `.circuits`, `.matrix`, `.graph`.
std::optional<InputFormat> format_from_extension(const std::string& path);

struct ParsedInput {
  InputFormat format = InputFormat::Circuits;
  Matroid matroid = Matroid::from_circuits(0, {});
  std::optional<Arrangement> arrangement;
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;  // 0-based endpoints
};

/// Input files. Blank lines and `#` comments are ignored; an optional
/// `labels: a b c ...` line names the ground elements.
///   circuits: `n <N>`, then one circuit per line as 1-based indices
///   matrix:   `<n> <d>`, then n rows of d integers or fractions p/q
///   graph:    `<V> <E>`, then E lines `u v` with 1-based vertices
/// Ground sets larger than `max_n` are rejected.
ParsedInput parse_input(std::istream& in, InputFormat format, int max_n = 12);
ParsedInput parse_input_file(const std::string& path, InputFormat format, int max_n = 12);

/// Order given as element labels from smallest to largest, separated by
/// whitespace, commas or `<`.
VariableOrder parse_order(const Matroid& m, const std::string& text);

}  // namespace osa
