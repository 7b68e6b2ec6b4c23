#include "repdim/table_json.hpp"

#include <algorithm>
#include <sstream>

#include "repdim/error.hpp"

namespace repdim {

OrderedJson cyclo_to_json(const Cyclo& value) {
  OrderedJson j;
  j["e"] = value.conductor();
  j["coeffs"] = value.coeffs();
  return j;
}

Cyclo cyclo_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("e") || !j.contains("coeffs"))
    throw ParseError("cyclotomic value must be {\"e\": n, \"coeffs\": [...]}");
  const auto e = j.at("e").get<unsigned>();
  if (e == 0) throw ParseError("conductor must be positive");
  try {
    return Cyclo::from_coefficients(e, j.at("coeffs").get<std::vector<std::int64_t>>());
  } catch (const DomainError& err) {
    throw ParseError(err.what());
  }
}

OrderedJson table_to_json(const CharacterTable& table) {
  OrderedJson j;
  j["spec"] = table.spec;
  j["order"] = table.order;
  j["conductor"] = table.conductor;
  auto& classes = j["classes"] = OrderedJson::array();
  for (const auto& c : table.classes) {
    OrderedJson cj;
    cj["size"] = c.size;
    cj["rep_order"] = c.rep_order;
    cj["inverse"] = c.inverse;
    cj["powers"] = c.powers;
    classes.push_back(std::move(cj));
  }
  auto& rows = j["characters"] = OrderedJson::array();
  for (const auto& chi : table.characters) {
    OrderedJson rj;
    rj["degree"] = chi.degree;
    auto& values = rj["values"] = OrderedJson::array();
    for (const auto& v : chi.values) values.push_back(cyclo_to_json(v));
    rows.push_back(std::move(rj));
  }
  return j;
}

std::string export_table(const CharacterTable& table) { return table_to_json(table).dump(); }

CharacterTable table_from_json(const nlohmann::json& j) {
  CharacterTable table;
  try {
    table.spec = j.at("spec").get<std::string>();
    table.order = j.at("order").get<std::size_t>();
    table.conductor = j.at("conductor").get<unsigned>();
    if (table.order == 0 || table.conductor == 0) throw ParseError("order and conductor must be positive");
    for (const auto& cj : j.at("classes")) {
      ClassInfo c;
      c.size = cj.at("size").get<std::size_t>();
      c.rep_order = cj.at("rep_order").get<unsigned>();
      c.inverse = cj.at("inverse").get<std::size_t>();
      c.powers = cj.at("powers").get<std::vector<std::uint32_t>>();
      table.classes.push_back(std::move(c));
    }
    const std::size_t k = table.classes.size();
    for (const auto& c : table.classes) {
      if (c.inverse >= k) throw ParseError("inverse class index out of range");
      if (c.rep_order == 0 || table.conductor % c.rep_order != 0)
        throw ParseError("class order must divide the conductor");
      if (c.powers.size() != table.conductor) throw ParseError("power map length must equal the conductor");
      if (std::any_of(c.powers.begin(), c.powers.end(), [&](std::uint32_t x) { return x >= k; }))
        throw ParseError("power map entry out of range");
    }
    for (const auto& rj : j.at("characters")) {
      Character chi;
      chi.degree = rj.at("degree").get<unsigned>();
      for (const auto& vj : rj.at("values")) {
        Cyclo v = cyclo_from_json(vj);
        if (v.conductor() != table.conductor) throw ParseError("value conductor differs from table conductor");
        chi.values.push_back(std::move(v));
      }
      if (chi.values.size() != k) throw ParseError("each character needs one value per class");
      table.characters.push_back(std::move(chi));
    }
  } catch (const nlohmann::json::exception& err) {
    throw ParseError(std::string("table JSON: ") + err.what());
  }
  verify_table(table);
  return table;
}

CharacterTable import_table(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw ParseError(std::string("table JSON: ") + err.what());
  }
  return table_from_json(j);
}

std::string pretty_table(const CharacterTable& table) {
  const std::size_t k = table.class_count();
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{""}, sizes{"size"}, orders{"order"};
  for (std::size_t j = 0; j < k; ++j) {
    header.push_back(std::to_string(j + 1));
    sizes.push_back(std::to_string(table.classes[j].size));
    orders.push_back(std::to_string(table.classes[j].rep_order));
  }
  cells.push_back(header);
  cells.push_back(sizes);
  cells.push_back(orders);
  for (std::size_t r = 0; r < table.characters.size(); ++r) {
    std::vector<std::string> row{"X." + std::to_string(r + 1)};
    for (const auto& v : table.characters[r].values) row.push_back(v.to_string());
    cells.push_back(std::move(row));
  }
  std::vector<std::size_t> width(k + 1, 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) {
      // Count code points so that the zeta glyph takes one column.
      std::size_t n = 0;
      for (unsigned char ch : row[c]) n += (ch & 0xC0) != 0x80;
      width[c] = std::max(width[c], n);
    }
  std::ostringstream out;
  out << table.spec << "  order " << table.order << ", " << k << " classes\n";
  for (std::size_t r = 0; r < cells.size(); ++r) {
    for (std::size_t c = 0; c < cells[r].size(); ++c) {
      std::size_t n = 0;
      for (unsigned char ch : cells[r][c]) n += (ch & 0xC0) != 0x80;
      out << std::string(width[c] - n + (c ? 2 : 0), ' ') << cells[r][c];
    }
    out << '\n';
    if (r == 2) out << '\n';
  }
  return out.str();
}

}  // namespace repdim
