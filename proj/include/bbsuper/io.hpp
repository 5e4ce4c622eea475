#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "bbsuper/charformula.hpp"
#include "bbsuper/datum.hpp"
#include "bbsuper/root_table.hpp"
#include "bbsuper/series.hpp"
#include "bbsuper/verma_oracle.hpp"

namespace bbsuper::io {

using nlohmann::json;

/// Reads a JSON document; parse failures become Error(Parse) with the line.
json load_json(const std::filesystem::path& path);

/// {"A": [[int]], "D": [int], "odd": [1-based index]}
OddCartanDatum datum_from_json(const json& j);
/// Input fields plus the derived index classes (1-based).
json datum_to_json(const OddCartanDatum& datum);

/// "p/q" or "p"; plain JSON integers are accepted on input.
Rational rational_from_json(const json& j);
std::string rational_to_string(const Rational& q);

/// {"Lambda": {i: "p/q"}, "alpha": {...}, "delta": {...}}, 1-based keys,
/// zero entries omitted on output.
Weight weight_from_json(const json& j, std::size_t rank);
json weight_to_json(const Weight& w);

/// {"H": int, "base": Weight, "terms": [{"exp": [int], "coef": "decimal"}]}
json series_to_json(const CharSeries& s);
CharSeries series_from_json(const json& j, std::size_t rank);

/// [{"root": [int], "mult": int, "parity": "even|odd", "class": "real|imaginary"}]
json root_table_to_json(const RootTable& table);
RootTable root_table_from_json(const json& j, std::size_t rank, int H);

json character_to_json(const CharacterResult& result);

/// [{"mu_offset": [int], "dim": int}]
json oracle_rows_to_json(const std::vector<OracleRow>& rows);

}  // namespace bbsuper::io
