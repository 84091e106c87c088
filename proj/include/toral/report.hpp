#pragma once

#include "toral/circle.hpp"
#include "toral/classify.hpp"
#include "toral/compare.hpp"
#include "toral/ktheory.hpp"
#include "toral/translation.hpp"
#include "toral/types.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace toral {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "toral 1.0.0";

/// Parsed analysis input: the integer matrix plus the exact translation
/// (rationals as strings, irrational symbols by name).  A numeric shadow of
/// the translation may be supplied for the simulation commands only.
struct InputSpec {
    long n = 0;
    IntMatrix matrix{1, 1};
    TranslationVector translation;
    std::optional<std::vector<double>> translation_float;

    /// Numeric translation for simulation: the explicit float shadow when
    /// given, otherwise the rational part converted (irrational symbols
    /// without a shadow are rejected).
    std::vector<double> numeric_translation() const;
};

/// Parses an input document.  Throws parse_error on malformed JSON, missing
/// or ill-typed fields, bad rational strings, or dimension mismatches.
InputSpec parse_input_spec(const std::string& text);

/// Structural echo of the input (rationals back to strings).
Json json_input(const InputSpec& spec);

Json json_verdict(const TransitivityVerdict& v);
Json json_ktheory(const KTheoryReport& r);
Json json_presentation(const AlgebraPresentation& p);
Json json_comparison(const ComparisonReport& r);
Json json_grid_result(const GridCoverResult& r);

/// Wraps a command payload in the versioned report envelope: schema_version,
/// generator, input echo, and the assumption notes (the declared Q-linear
/// independence of irrational symbols is echoed, never verified).
Json make_document(const std::string& command, const std::vector<InputSpec>& inputs,
                   Json payload);

/// Canonical serialization; parse(serialize(doc)) == doc byte for byte.
std::string serialize_document(const Json& doc);

}  // namespace toral
