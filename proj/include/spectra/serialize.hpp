#pragma once

// JSON/CSV serialization for the CLI artifacts. All emitted objects carry a
// schema_version field and round-trip through the corresponding parsers.

#include "spectra/gap.hpp"
#include "spectra/gausscantor.hpp"
#include "spectra/renorm.hpp"
#include "spectra/sigma.hpp"

#include <json.hpp>

#include <string>

namespace spectra {

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          pos(position) {}
    size_t pos;
};

inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::json;

Json to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json to_json(const Surd& s);
Surd surd_from_json(const Json& j);

Json to_json(const CReal& x);

Json to_json(const Word& w);
Word word_from_json(const Json& j);

Json to_json(const AlphabetPair& p);
AlphabetPair pair_from_json(const Json& j);

Json to_json(const RenormDecomposition& d);
Json to_json(const RenormTrace& t);
Json to_json(const SigmaSet& s);
SigmaSet sigma_set_from_json(const Json& j);
Json to_json(const TheoremReport& r);
Json to_json(const QrSet& q);
Json to_json(const CoveringReport& c);
Json to_json(const GapReport& g);
Json to_json(const DimensionBracket& b);

/// Exact bound expressions: rational | decimal | "3+e^-R" | "3+B^-N" |
/// "3-B^-N". Throws ParseError with the offending position.
Bound parse_bound(const std::string& expr);

/// Exact decimal/scientific literal ("1e-12", "0.25", "7/2") to a rational.
Rat parse_rational(const std::string& text);

std::string covering_csv(const std::vector<CoveringReport>& rows);

}  // namespace spectra
