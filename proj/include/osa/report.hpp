#pragma once

#include <string>

#include <json.hpp>

#include "osa/io.hpp"
#include "osa/osideal.hpp"
#include "osa/search.hpp"
#include "osa/torsion.hpp"

namespace osa {

inline constexpr const char* kToolName = "osa";
inline constexpr const char* kToolVersion = "1.0.0";

// JSON report pieces. nlohmann::json objects keep keys sorted, and every
// list below has a fixed order, so dumps are byte-stable.

/// Circuits in canonical order as label lists, by position in `order` when
/// given (otherwise ground-set order).
nlohmann::json circuit_labels(const Matroid& m, Subset c, const VariableOrder* order = nullptr);
nlohmann::json matroid_summary(const Matroid& m);
nlohmann::json input_echo(const ParsedInput& input);
nlohmann::json basis_json(const Matroid& m, const GroebnerBasis& gb);
nlohmann::json dims_json(const GradedDims& dims);
nlohmann::json torsion_json(const TorsionReport& report);
nlohmann::json search_json(const Matroid& m, const SearchResult& result);
nlohmann::json verification_json(const PropositionCheck& check);

/// Wraps a command payload with the input echo, matroid summary and tool
/// metadata.
nlohmann::json make_document(const std::string& command, const ParsedInput& input, nlohmann::json payload);

/// Rebuilds the matroid from a document's input echo.
Matroid matroid_from_document(const nlohmann::json& doc);

/// Two-space indented dump with a trailing newline.
std::string canonical_dump(const nlohmann::json& doc);

/// Terms of `f` from largest to smallest under `order`, e.g.
/// `e[P y z] - e[H y z] + e[H P z]`.
std::string render_element(const Matroid& m, const ExtElement& f, const VariableOrder& order);

}  // namespace osa
