#include "cli/commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "sqtile/construct.hpp"
#include "sqtile/dehn.hpp"
#include "sqtile/document.hpp"
#include "sqtile/errors.hpp"
#include "sqtile/expr_parse.hpp"
#include "sqtile/hamel.hpp"
#include "sqtile/svg.hpp"

namespace sqtile::cli {

namespace {

using ojson = nlohmann::ordered_json;

struct Options {
  std::string format = "text";
  std::vector<std::string> gens;
  std::string file;
  std::string width;
  std::string height;
  std::string ratio;
  std::string out_path;
  std::string y = "-1";
  std::vector<std::string> sides;
  int precision = 6;
};

// What a command produced: the JSON report, the text report, and an optional
// payload (document or SVG) that goes to --out or stdout.
struct Result {
  ojson json = ojson::object();
  std::ostringstream text;
  std::string payload;
  int code = kOk;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'", path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'", path);
  out << data;
}

GeneratorTable table_from_flags(const std::vector<std::string>& gens) {
  GeneratorTable table;
  for (const auto& g : gens) {
    const GenSpec s = parse_gen_flag(g);
    table.declare(s.symbol, Rational::parse(s.lo), Rational::parse(s.hi));
  }
  return table;
}

// Declares built-in constants that an expression mentions but --gen did not.
void declare_builtins_used(const std::string& expr, GeneratorTable& table) {
  std::size_t i = 0;
  while (i < expr.size()) {
    const auto c = static_cast<unsigned char>(expr[i]);
    if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < expr.size() &&
             (std::isalnum(static_cast<unsigned char>(expr[j])) || expr[j] == '_'))
        ++j;
      const std::string sym = expr.substr(i, j - i);
      if (!table.find(sym) && default_generator(sym)) table.declare_default(sym);
      i = j;
    } else {
      ++i;
    }
  }
}

ojson generators_json(const GeneratorTable& table) {
  ojson arr = ojson::array();
  for (const auto& g : table.declared()) {
    arr.push_back({{"symbol", g.symbol}, {"lo", g.lo.str()}, {"hi", g.hi.str()}});
  }
  return arr;
}

void warn_on_relation(const GeneratorTable& table, std::ostream& err) {
  if (table.size() < 2 || table.size() > 5) return;
  if (auto rel = table.find_small_relation(3)) {
    err << "warning: generators may be linearly dependent (small integer relation:";
    for (std::size_t i = 0; i < rel->size(); ++i) {
      err << ' ' << (*rel)[i] << '*' << table[i].symbol;
    }
    err << ")\n";
  }
}

ojson failure_json(const ValidationFailure& f, const GeneratorTable& table) {
  ojson j{{"kind", to_string(f.kind)}, {"tiles", f.tiles}};
  if (f.cell_x && f.cell_y) j["cell"] = {*f.cell_x, *f.cell_y};
  if (f.witness_x && f.witness_y) {
    j["witness"] = {{"x", format(*f.witness_x, table)}, {"y", format(*f.witness_y, table)}};
  }
  j["detail"] = f.detail;
  return j;
}

void describe_failures(const ValidationReport& rep, const GeneratorTable& table, Result& r) {
  ojson arr = ojson::array();
  for (const auto& f : rep.failures) {
    arr.push_back(failure_json(f, table));
    r.text << "  " << to_string(f.kind);
    if (!f.tiles.empty()) {
      r.text << " tiles";
      for (auto t : f.tiles) r.text << ' ' << t;
    }
    if (f.cell_x && f.cell_y) r.text << " cell (" << *f.cell_x << ", " << *f.cell_y << ")";
    if (f.witness_x && f.witness_y) {
      r.text << " at (" << format(*f.witness_x, table) << ", " << format(*f.witness_y, table)
             << ")";
    }
    r.text << ": " << f.detail << '\n';
  }
  r.json["failures"] = std::move(arr);
}

bool has_ambiguity(const ValidationReport& rep) {
  for (const auto& f : rep.failures) {
    if (f.kind == FailureKind::ambiguous) return true;
  }
  return false;
}

Rational negative_y(const std::string& text) {
  Rational y = Rational::parse(text);
  if (y.sign() >= 0) throw ParseError("--y must be negative", text);
  return y;
}

void cmd_validate(const Options& o, Result& r, std::ostream& err) {
  const Tiling t = parse_document(read_file(o.file));
  warn_on_relation(t.table, err);
  const ValidationReport rep = validate(t);
  r.json["file"] = o.file;
  r.json["tiles"] = t.tiles.size();
  r.json["verdict"] = rep.valid() ? "valid" : "invalid";
  r.text << o.file << ": " << (rep.valid() ? "valid" : "invalid") << " (" << t.tiles.size()
         << " tiles)\n";
  describe_failures(rep, t.table, r);
  r.code = rep.valid() ? kOk : (has_ambiguity(rep) ? kAmbiguous : kRefuted);
}

void cmd_decide(const Options& o, Result& r, std::ostream& err) {
  GeneratorTable table = table_from_flags(o.gens);
  declare_builtins_used(o.width, table);
  declare_builtins_used(o.height, table);
  warn_on_relation(table, err);
  const LinExpr w = parse_expr(o.width, table);
  const LinExpr h = parse_expr(o.height, table);
  const Rational y = negative_y(o.y);

  r.json["generators"] = generators_json(table);
  r.json["width"] = format(w, table);
  r.json["height"] = format(h, table);
  const Verdict v = decide(w, h, table, y);
  if (const auto* ok = std::get_if<Tilable>(&v)) {
    r.json["verdict"] = "tilable";
    r.json["ratio"] = ok->ratio.str();
    r.text << "tilable: height = " << ok->ratio << " * width\n";
    r.code = kOk;
    return;
  }
  const auto& cert = std::get<NotTilable>(v).certificate;
  const Basis basis = extract_basis({w, h}, table);
  const Rational outer = y_area(w, h, basis, cert.y);
  r.json["verdict"] = "not_tilable";
  r.json["certificate"] = {{"y", cert.y.str()}, {"outer_y_area", outer.str()}};
  r.text << "not tilable: sides are incommensurable\n"
         << "certificate: y = " << cert.y << "; outer y-area = " << outer
         << " < 0, every square has y-area (a + b*y)^2 >= 0\n";
  r.code = kRefuted;
}

void cmd_verify(const Options& o, Result& r, std::ostream& err) {
  const Tiling t = parse_document(read_file(o.file));
  warn_on_relation(t.table, err);
  const Rational y = negative_y(o.y);
  r.json["file"] = o.file;

  if (const auto q = commensurability_ratio(t.outer_w, t.outer_h)) {
    // Rational ratio: a square tiling may exist, so check this one directly.
    r.json["outer_ratio"] = q->str();
    const ValidationReport rep = validate(t);
    if (!rep.valid()) {
      r.json["verdict"] = "refuted";
      r.json["refutation"] = to_string(RefutationKind::geometry_invalid);
      r.text << "refuted: geometry_invalid\n";
      describe_failures(rep, t.table, r);
      r.code = has_ambiguity(rep) ? kAmbiguous : kRefuted;
      return;
    }
    for (std::size_t i = 0; i < t.tiles.size(); ++i) {
      if (!is_square(t.tiles[i])) {
        r.json["verdict"] = "refuted";
        r.json["refutation"] = to_string(RefutationKind::tile_not_square);
        r.json["tile"] = i;
        r.text << "refuted: tile_not_square (tile " << i << ")\n";
        r.code = kRefuted;
        return;
      }
    }
    r.json["verdict"] = "square_tiling";
    r.text << "valid square tiling (" << t.tiles.size() << " squares)\n";
    r.code = kOk;
    return;
  }

  const Refutation ref = refute_square_tiling(t, y);
  r.json["verdict"] = "refuted";
  r.json["refutation"] = to_string(ref.kind);
  r.text << "refuted: " << to_string(ref.kind);
  if (ref.tile) {
    r.json["tile"] = *ref.tile;
    r.text << " (tile " << *ref.tile << ")";
  }
  r.text << '\n';
  if (ref.kind == RefutationKind::geometry_invalid) describe_failures(ref.geometry, t.table, r);
  if (ref.balance) {
    r.json["balance"] = {{"y", ref.balance->y.str()},
                         {"outer", ref.balance->outer.str()},
                         {"tile_sum", ref.balance->tile_sum.str()}};
    r.text << "  y = " << ref.balance->y << ": outer y-area " << ref.balance->outer
           << " != tile sum " << ref.balance->tile_sum << '\n';
  }
  r.code = ref.kind == RefutationKind::geometry_invalid && has_ambiguity(ref.geometry)
               ? kAmbiguous
               : kRefuted;
}

void cmd_construct(const Options& o, Result& r, std::ostream&) {
  GeneratorTable table = table_from_flags(o.gens);
  LinExpr w, h;
  if (!o.ratio.empty()) {
    if (!o.width.empty() || !o.height.empty()) {
      throw ParseError("use either --ratio or --width/--height", "--ratio");
    }
    const Rational q = Rational::parse(o.ratio);
    if (q.sign() <= 0) throw ParseError("--ratio must be positive", o.ratio);
    w = LinExpr(1);
    h = LinExpr(q);
  } else {
    if (o.width.empty() || o.height.empty()) {
      throw ParseError("construct needs --ratio or both --width and --height", "");
    }
    declare_builtins_used(o.width, table);
    declare_builtins_used(o.height, table);
    w = parse_expr(o.width, table);
    h = parse_expr(o.height, table);
  }
  const Verdict v = decide(w, h, table);
  if (std::holds_alternative<NotTilable>(v)) {
    r.json["verdict"] = "not_tilable";
    r.text << "not tilable: sides are incommensurable\n";
    r.code = kRefuted;
    return;
  }
  const Tiling t = euclid_tiling(w, h, table);
  const auto cf = continued_fraction(std::get<Tilable>(v).ratio);
  ojson quotients = ojson::array();
  for (const auto& q : cf.quotients) quotients.push_back(q.get_str());
  r.payload = serialize_document(t);
  r.json["squares"] = t.tiles.size();
  r.json["quotients"] = quotients;
  r.json["document"] = ojson::parse(r.payload);
  r.text << "constructed " << t.tiles.size() << " squares\n";
  r.code = kOk;
}

Sqrt2Num to_sqrt2(const LinExpr& e, const GeneratorTable& table, std::size_t sqrt2) {
  Sqrt2Num out(e.coeff(GeneratorTable::kUnit), e.coeff(sqrt2));
  for (const auto& [i, c] : e.terms()) {
    if (i != GeneratorTable::kUnit && i != sqrt2) {
      throw ParseError("only rationals and sqrt2 are allowed here, got '" + format(e, table) + "'",
                       table[i].symbol);
    }
  }
  return out;
}

void cmd_analyze_good(const Options& o, Result& r, std::ostream&) {
  GeneratorTable table = table_from_flags(o.gens);
  if (!table.find("sqrt2")) table.declare_default("sqrt2");
  const std::size_t s2 = *table.find("sqrt2");
  if (o.sides.empty()) throw ParseError("analyze-good needs at least one --side", "--side");

  const Sqrt2Num tw = to_sqrt2(parse_expr(o.width, table), table, s2);
  const Sqrt2Num th = to_sqrt2(parse_expr(o.height, table), table, s2);
  std::vector<Sqrt2Num> sides;
  for (const auto& s : o.sides) sides.push_back(to_sqrt2(parse_expr(s, table), table, s2));

  const GoodSquareAnalysis a = analyze_good_squares(sides, tw, th);
  r.json["target"] = {{"w", tw.str()}, {"h", th.str()}};
  r.json["A"] = a.A.str();
  r.json["B"] = a.B.str();
  r.json["C"] = a.C.str();
  r.json["target_area"] = a.target_area.str();
  r.json["squares_area"] = a.squares_area.str();
  r.json["area_identity_holds"] = a.area_identity_holds;
  r.json["contradiction"] = to_string(a.contradiction);
  r.text << "A = " << a.A << ", B = " << a.B << ", C = " << a.C << '\n'
         << "target area " << a.target_area << ", squares' area " << a.squares_area << '\n'
         << "area identity " << (a.area_identity_holds ? "holds" : "fails") << '\n'
         << "contradiction: " << to_string(a.contradiction) << '\n';
  r.code = a.contradiction == GoodContradiction::none ? kOk : kRefuted;
}

void cmd_render(const Options& o, Result& r, std::ostream& err) {
  const Tiling t = parse_document(read_file(o.file));
  warn_on_relation(t.table, err);
  if (o.precision < 0 || o.precision > 30) throw ParseError("--precision out of range", "");
  const ValidationReport rep = validate(t);
  r.json["file"] = o.file;
  if (!rep.valid()) {
    r.json["verdict"] = "invalid";
    r.text << o.file << ": invalid, not rendered\n";
    describe_failures(rep, t.table, r);
    r.code = has_ambiguity(rep) ? kAmbiguous : kRefuted;
    return;
  }
  r.payload = render_svg(t, o.precision);
  r.json["verdict"] = "valid";
  r.json["svg"] = r.payload;
  r.code = kOk;
}

}  // namespace

GenSpec parse_gen_flag(const std::string& text) {
  const auto eq = text.find('=');
  const auto bad = [&] {
    return ParseError("expected SYMBOL=[lo,hi], got '" + text + "'", text);
  };
  if (eq == std::string::npos) throw bad();
  std::string rest = text.substr(eq + 1);
  std::erase_if(rest, [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
  if (rest.size() < 5 || rest.front() != '[' || rest.back() != ']') throw bad();
  const auto comma = rest.find(',');
  if (comma == std::string::npos) throw bad();
  return {text.substr(0, eq), rest.substr(1, comma - 1),
          rest.substr(comma + 1, rest.size() - comma - 2)};
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact squared-rectangle toolkit: validate tilings, decide square-tilability, "
               "construct square tilings, render SVG"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--gen", o.gens, "Generator SYMBOL=[lo,hi] (repeatable)");

  auto* validate_cmd = app.add_subcommand("validate", "Check that a tiling document is a cutting");
  validate_cmd->add_option("file", o.file)->required();

  auto* decide_cmd = app.add_subcommand("decide", "Decide whether a rectangle can be squared");
  decide_cmd->add_option("--width", o.width)->required();
  decide_cmd->add_option("--height", o.height)->required();
  decide_cmd->add_option("--y", o.y, "Negative certificate parameter");

  auto* verify_cmd = app.add_subcommand("verify", "Refute a claimed square tiling");
  verify_cmd->add_option("file", o.file)->required();
  verify_cmd->add_option("--y", o.y, "Negative refutation parameter");

  auto* construct_cmd = app.add_subcommand("construct", "Build a square tiling");
  construct_cmd->add_option("--ratio", o.ratio, "Height/width ratio P/Q");
  construct_cmd->add_option("--width", o.width);
  construct_cmd->add_option("--height", o.height);
  construct_cmd->add_option("--out", o.out_path);

  auto* analyze_cmd =
      app.add_subcommand("analyze-good", "Area and conjugate-area test for squares in Q(sqrt2)");
  analyze_cmd->add_option("--width", o.width)->required();
  analyze_cmd->add_option("--height", o.height)->required();
  analyze_cmd->add_option("--side", o.sides, "Square side a + b*sqrt2 (repeatable)");

  auto* render_cmd = app.add_subcommand("render", "Render a valid tiling as SVG");
  render_cmd->add_option("file", o.file)->required();
  render_cmd->add_option("--precision", o.precision, "Decimal digits");
  render_cmd->add_option("--out", o.out_path);

  for (auto* sub : app.get_subcommands({})) {
    sub->fallthrough();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  Result r;
  r.json["command"] = name;
  try {
    if (name == "validate") cmd_validate(o, r, err);
    else if (name == "decide") cmd_decide(o, r, err);
    else if (name == "verify") cmd_verify(o, r, err);
    else if (name == "construct") cmd_construct(o, r, err);
    else if (name == "analyze-good") cmd_analyze_good(o, r, err);
    else if (name == "render") cmd_render(o, r, err);
  } catch (const AmbiguousComparison& e) {
    r.code = kAmbiguous;
    r.json["error"] = e.what();
    r.text << "ambiguous: " << e.what() << "\n";
  } catch (const Error& e) {
    r.code = kInputError;
    r.json["error"] = e.what();
    r.text << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    r.code = kInputError;
    r.json["error"] = e.what();
    r.text << "error: " << e.what() << '\n';
  } catch (const std::logic_error& e) {
    // Only reachable when declared generators are not independent.
    r.code = kInputError;
    r.json["error"] = e.what();
    r.text << "error: " << e.what() << '\n';
  }
  r.json["exit_code"] = r.code;

  try {
    if (!r.payload.empty() && !o.out_path.empty()) {
      write_file(o.out_path, r.payload);
      r.text << "wrote " << o.out_path << '\n';
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  if (o.format == "json") {
    out << r.json.dump(2) << '\n';
  } else if (!r.payload.empty() && o.out_path.empty()) {
    out << r.payload;
  } else {
    (r.code == kInputError ? err : out) << r.text.str();
  }
  return r.code;
}

}  // namespace sqtile::cli
