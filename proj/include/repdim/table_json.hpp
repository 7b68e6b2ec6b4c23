#ifndef REPDIM_TABLE_JSON_HPP
#define REPDIM_TABLE_JSON_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "repdim/character_table.hpp"

namespace repdim {

using OrderedJson = nlohmann::ordered_json;

OrderedJson cyclo_to_json(const Cyclo& value);
Cyclo cyclo_from_json(const nlohmann::json& j);

OrderedJson table_to_json(const CharacterTable& table);

/// Compact single-line rendering; byte-identical for equal tables.
std::string export_table(const CharacterTable& table);

/// Parses and re-verifies (exact orthogonality) a table. Throws ParseError
/// on malformed JSON or schema violations and VerificationError if the
/// table is not a valid character table.
CharacterTable import_table(std::string_view text);
CharacterTable table_from_json(const nlohmann::json& j);

/// Human-readable table with values in zeta notation.
std::string pretty_table(const CharacterTable& table);

}  // namespace repdim

#endif  // REPDIM_TABLE_JSON_HPP
