#include "sqtile/document.hpp"

#include <json.hpp>

#include "sqtile/errors.hpp"
#include "sqtile/expr_parse.hpp"

namespace sqtile {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what, path);
}

const json& field(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) schema_error(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) schema_error(path + "." + key, "missing field");
  return *it;
}

std::string string_field(const json& obj, const char* key, const std::string& path) {
  const json& v = field(obj, key, path);
  if (!v.is_string()) schema_error(path + "." + key, "expected a string");
  return v.get<std::string>();
}

Rational rational_field(const json& obj, const char* key, const std::string& path) {
  const std::string s = string_field(obj, key, path);
  try {
    return Rational::parse(s);
  } catch (const DivisionByZero&) {
    schema_error(path + "." + key, "zero denominator in '" + s + "'");
  } catch (const ParseError&) {
    schema_error(path + "." + key, "malformed rational '" + s + "'");
  }
}

LinExpr expr_field(const json& obj, const char* key, const std::string& path,
                   const GeneratorTable& table) {
  const std::string s = string_field(obj, key, path);
  const std::string where = path + "." + key;
  try {
    return parse_expr(s, table);
  } catch (const UndeclaredSymbol& e) {
    throw UndeclaredSymbol(e.token(), e.column(), where);
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what(), e.token(), 0, e.column());
  }
}

}  // namespace

Tiling parse_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    const std::size_t at = e.byte == 0 ? 0 : std::min(e.byte - 1, text.size());
    const std::string token = at < text.size() ? std::string(1, text[at]) : "<end>";
    throw ParseError("JSON syntax error at line " + std::to_string(line) + ", column " +
                         std::to_string(col) + " near '" + token + "'",
                     token, line, col);
  }
  if (!doc.is_object()) schema_error("$", "document must be a JSON object");

  Tiling t;
  if (const auto it = doc.find("generators"); it != doc.end()) {
    if (!it->is_array()) schema_error("generators", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const json& g = (*it)[i];
      const std::string path = "generators[" + std::to_string(i) + "]";
      const std::string symbol = string_field(g, "symbol", path);
      const bool has_lo = g.contains("lo");
      const bool has_hi = g.contains("hi");
      if (!has_lo && !has_hi) {
        if (!default_generator(symbol)) {
          schema_error(path, "generator '" + symbol + "' needs lo and hi");
        }
        t.table.declare_default(symbol);
      } else {
        t.table.declare(symbol, rational_field(g, "lo", path), rational_field(g, "hi", path));
      }
    }
  }

  const json& outer = field(doc, "outer", "$");
  t.outer_w = expr_field(outer, "w", "outer", t.table);
  t.outer_h = expr_field(outer, "h", "outer", t.table);

  const json& tiles = field(doc, "tiles", "$");
  if (!tiles.is_array()) schema_error("tiles", "expected an array");
  if (tiles.empty()) schema_error("tiles", "at least one tile is required");
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    const std::string path = "tiles[" + std::to_string(i) + "]";
    const json& p = tiles[i];
    t.tiles.push_back({expr_field(p, "x", path, t.table), expr_field(p, "y", path, t.table),
                       expr_field(p, "w", path, t.table), expr_field(p, "h", path, t.table)});
  }
  return t;
}

std::string serialize_document(const Tiling& t) {
  ordered_json doc;
  doc["generators"] = ordered_json::array();
  for (const auto& g : t.table.declared()) {
    doc["generators"].push_back({{"symbol", g.symbol}, {"lo", g.lo.str()}, {"hi", g.hi.str()}});
  }
  doc["outer"] = {{"w", format(t.outer_w, t.table)}, {"h", format(t.outer_h, t.table)}};
  doc["tiles"] = ordered_json::array();
  for (const auto& p : t.tiles) {
    doc["tiles"].push_back({{"x", format(p.x, t.table)},
                            {"y", format(p.y, t.table)},
                            {"w", format(p.w, t.table)},
                            {"h", format(p.h, t.table)}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace sqtile
