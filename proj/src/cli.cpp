#include "symknot/cli.hpp"

#include <cstdlib>
#include <map>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "symknot/alexander.hpp"
#include "symknot/bracket.hpp"
#include "symknot/dt_code.hpp"
#include "symknot/errors.hpp"
#include "symknot/fingerprint.hpp"
#include "symknot/goeritz.hpp"
#include "symknot/knotoid.hpp"
#include "symknot/poly_json.hpp"
#include "symknot/rational.hpp"
#include "symknot/reference_table.hpp"
#include "symknot/scheme.hpp"
#include "symknot/search.hpp"

namespace symknot {

namespace {

using nlohmann::json;

struct InputFlags {
  std::string pd, dt, knotoid, scheme_path, assign;
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> values;
  if (text.empty()) return values;
  std::string body = text;
  for (char& c : body)
    if (c == ',') c = ' ';
  std::istringstream in(body);
  std::string token;
  while (in >> token) {
    try {
      values.push_back(std::stoi(token));
    } catch (const std::exception&) {
      raise(ErrorKind::MalformedToken, "bad integer '" + token + "'");
    }
  }
  return values;
}

SymmetricUnionScheme load_scheme(const InputFlags& in) {
  SymmetricUnionScheme s = load_scheme_file(in.scheme_path);
  if (!in.assign.empty()) s = instantiate_template(s, parse_int_list(in.assign));
  return s;
}

// Code flags accept inline text, "@path" for a file, or "-" for stdin.
std::string resolve_code_text(const std::string& value) {
  if (value == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  if (!value.empty() && value[0] == '@') {
    std::ifstream file(value.substr(1));
    if (!file) raise(ErrorKind::MalformedToken, "cannot open input file " + value.substr(1));
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
  }
  return value;
}

// Resolves --pd/--dt/--scheme to a diagram; schemes are expanded.
PlanarDiagram diagram_from_flags(const InputFlags& in) {
  int sources = (!in.pd.empty()) + (!in.dt.empty()) + (!in.scheme_path.empty());
  if (sources != 1)
    raise(ErrorKind::MalformedToken, "need exactly one of --pd, --dt, --scheme");
  if (!in.pd.empty()) return parse_pd(resolve_code_text(in.pd));
  if (!in.dt.empty()) return parse_dt(parse_dt_text(resolve_code_text(in.dt)));
  return expand(load_scheme(in));
}

void emit(std::ostream& out, const std::string& output_path, const std::string& text) {
  if (output_path.empty()) {
    out << text;
    if (!text.empty() && text.back() != '\n') out << "\n";
    return;
  }
  std::ofstream file(output_path);
  if (!file) raise(ErrorKind::MalformedToken, "cannot open output file " + output_path);
  file << text;
}

std::vector<std::pair<int, int>> parse_bounds(const std::string& text, std::size_t slots) {
  std::vector<std::pair<int, int>> bounds;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t colon = item.find(':');
    if (colon == std::string::npos)
      raise(ErrorKind::MalformedToken, "bounds look like lo:hi, got '" + item + "'");
    try {
      bounds.emplace_back(std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1)));
    } catch (const std::exception&) {
      raise(ErrorKind::MalformedToken, "bad bound '" + item + "'");
    }
  }
  if (bounds.size() == 1 && slots > 1) bounds.assign(slots, bounds[0]);
  return bounds;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"symmetric-union knot toolkit"};
  app.require_subcommand(1);

  InputFlags in;
  std::string output_path;
  std::string format;  // per-command default: invariants json, others text
  int max_crossings = kDefaultCrossingCap;
  std::string side = "down";
  std::string table_path;
  std::string bounds_text;
  int jobs = 1;
  bool omit_after_found = false;

  auto add_inputs = [&](CLI::App* cmd, bool with_knotoid = false) {
    cmd->add_option("--pd", in.pd, "PD code text");
    cmd->add_option("--dt", in.dt, "DT code (comma separated)");
    cmd->add_option("--scheme", in.scheme_path, "scheme JSON file");
    cmd->add_option("--assign", in.assign, "template parameters, comma separated");
    if (with_knotoid) cmd->add_option("--knotoid", in.knotoid, "knotoid text");
  };
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format: json|text (invariants defaults to json)");
    cmd->add_option("--output", output_path, "write result to file instead of stdout");
  };

  CLI::App* validate_cmd = app.add_subcommand("validate", "parse and validate an input");
  add_inputs(validate_cmd, true);
  add_common(validate_cmd);

  CLI::App* expand_cmd = app.add_subcommand("expand", "expand a scheme to its full diagram");
  expand_cmd->add_option("--scheme", in.scheme_path, "scheme JSON file")->required();
  expand_cmd->add_option("--assign", in.assign, "template parameters");
  add_common(expand_cmd);

  CLI::App* partial_cmd = app.add_subcommand("partial", "extract the partial knot of a scheme");
  partial_cmd->add_option("--scheme", in.scheme_path, "scheme JSON file")->required();
  partial_cmd->add_option("--assign", in.assign, "template parameters");
  add_common(partial_cmd);

  CLI::App* invariants_cmd = app.add_subcommand("invariants", "exact invariants of a diagram");
  add_inputs(invariants_cmd);
  invariants_cmd->add_option("--max-crossings", max_crossings, "bracket crossing cap")->capture_default_str();
  add_common(invariants_cmd);

  CLI::App* knotoid_cmd = app.add_subcommand("knotoid", "knotoid code of a scheme");
  knotoid_cmd->add_option("--scheme", in.scheme_path, "scheme JSON file")->required();
  knotoid_cmd->add_option("--assign", in.assign, "template parameters");
  knotoid_cmd->add_option("--side", side, "fold side: down|up");
  add_common(knotoid_cmd);

  CLI::App* fold_cmd = app.add_subcommand("fold", "rebuild a scheme from a knotoid");
  fold_cmd->add_option("--knotoid", in.knotoid, "knotoid text")->required();
  add_common(fold_cmd);

  CLI::App* ingest_cmd = app.add_subcommand("ingest", "load and validate a reference table");
  ingest_cmd->add_option("--table", table_path, "CSV reference table")->required();
  add_common(ingest_cmd);

  CLI::App* identify_cmd = app.add_subcommand("identify", "match a diagram against a table");
  add_inputs(identify_cmd);
  identify_cmd->add_option("--table", table_path, "CSV reference table")->required();
  identify_cmd->add_option("--max-crossings", max_crossings, "bracket crossing cap");
  add_common(identify_cmd);

  CLI::App* search_cmd = app.add_subcommand("search", "sweep template twist parameters");
  search_cmd->add_option("--scheme", in.scheme_path, "template JSON file")->required();
  search_cmd->add_option("--bounds", bounds_text, "per-slot bounds lo:hi[,lo:hi...]")->required();
  search_cmd->add_option("--table", table_path, "CSV reference table")->required();
  search_cmd->add_option("--jobs", jobs, "parallel workers")->capture_default_str();
  search_cmd->add_option("--max-crossings", max_crossings, "total crossing cap")->capture_default_str();
  search_cmd->add_flag("--omit-after-found", omit_after_found,
                       "report each name only at its first hit");
  add_common(search_cmd);

  CLI::App* crossings_cmd = app.add_subcommand("crossings", "total crossing count of a scheme");
  crossings_cmd->add_option("--scheme", in.scheme_path, "scheme JSON file")->required();
  crossings_cmd->add_option("--assign", in.assign, "template parameters");
  add_common(crossings_cmd);

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (format.empty()) format = invariants_cmd->parsed() ? "json" : "text";
    if (format != "json" && format != "text")
      raise(ErrorKind::MalformedToken, "unknown format " + format);
    const bool as_json = (format == "json");

    if (validate_cmd->parsed()) {
      json j;
      if (!in.knotoid.empty()) {
        KnotoidDiagram k = knotoid_from_text(resolve_code_text(in.knotoid));
        j = {{"kind", "knotoid"},
             {"passes", k.passes.size()},
             {"realizable", is_realizable(k)}};
      } else if (!in.scheme_path.empty() && in.assign.empty()) {
        SymmetricUnionScheme s = load_scheme_file(in.scheme_path);
        j = {{"kind", s.is_template() ? "template" : "scheme"},
             {"half_crossings", s.half_crossings.size()},
             {"open_slots", s.open_slots.size()},
             {"total_crossings", s.is_template() ? json() : json(total_crossings(s))}};
      } else {
        PlanarDiagram d = diagram_from_flags(in);
        j = {{"kind", "diagram"},
             {"crossings", d.crossings.size()},
             {"components", component_count(d)}};
      }
      if (as_json) {
        emit(out, output_path, j.dump(2));
      } else {
        std::ostringstream line;
        line << "ok";
        for (const auto& [key, value] : j.items()) line << " " << key << "=" << value.dump();
        emit(out, output_path, line.str());
      }
      return 0;
    }

    if (expand_cmd->parsed() || partial_cmd->parsed()) {
      SymmetricUnionScheme s = load_scheme(in);
      PlanarDiagram d = expand_cmd->parsed() ? expand(s) : partial_knot(s);
      if (as_json) {
        json j{{"pd", print_pd(d)},
               {"crossings", d.crossings.size()},
               {"components", component_count(d)}};
        emit(out, output_path, j.dump(2));
      } else {
        emit(out, output_path, print_pd(d));
      }
      return 0;
    }

    if (invariants_cmd->parsed()) {
      PlanarDiagram d = diagram_from_flags(in);
      int components = component_count(d);
      json j;
      j["crossings"] = d.crossings.size();
      j["components"] = components;
      if (components == 1) {
        OrientedDiagram o = orient(d);
        LaurentPoly v = jones(d, max_crossings);
        LaurentPoly delta = alexander(o);
        j["writhe"] = o.writhe;
        j["determinant"] = determinant_checked(d);
        j["signature"] = signature(d);
        j["jones"] = poly_to_json(v);
        j["alexander"] = poly_to_json(delta);
        auto factor = fox_milnor(delta);
        j["fox_milnor"] = factor ? poly_to_json(*factor) : json();
      }
      if (as_json) {
        emit(out, output_path, j.dump(2));
      } else {
        std::ostringstream lines;
        for (const auto& [key, value] : j.items()) lines << key << "=" << value.dump() << "\n";
        emit(out, output_path, lines.str());
      }
      return 0;
    }

    if (knotoid_cmd->parsed()) {
      SymmetricUnionScheme s = load_scheme(in);
      FoldSide fold_side;
      if (side == "down")
        fold_side = FoldSide::Down;
      else if (side == "up")
        fold_side = FoldSide::Up;
      else
        raise(ErrorKind::MalformedToken, "side must be down or up");
      KnotoidDiagram k = scheme_to_knotoid(s, fold_side);
      if (as_json)
        emit(out, output_path, json{{"knotoid", knotoid_to_text(k)}}.dump(2));
      else
        emit(out, output_path, knotoid_to_text(k));
      return 0;
    }

    if (fold_cmd->parsed()) {
      KnotoidDiagram k = knotoid_from_text(resolve_code_text(in.knotoid));
      SymmetricUnionScheme s = knotoid_to_scheme(k);
      emit(out, output_path, scheme_to_json(s));
      return 0;
    }

    if (ingest_cmd->parsed()) {
      ReferenceTable table = ingest_table(table_path);
      std::map<std::string, int> status_counts;
      for (const auto& row : table.rows) status_counts[row.status] += 1;
      json j{{"rows", table.rows.size()}, {"provenance", table.provenance}};
      for (const auto& [status, count] : status_counts) j["status_counts"][status] = count;
      if (as_json)
        emit(out, output_path, j.dump(2));
      else {
        std::ostringstream line;
        line << "rows=" << table.rows.size();
        for (const auto& [status, count] : status_counts)
          line << " status[" << status << "]=" << count;
        emit(out, output_path, line.str());
      }
      return 0;
    }

    if (identify_cmd->parsed()) {
      PlanarDiagram d = diagram_from_flags(in);
      ReferenceTable table = ingest_table(table_path);
      InvariantFingerprint fp = fingerprint(d, false, max_crossings);
      std::vector<std::string> names = identify(fp, table);
      if (as_json) {
        json j{{"determinant", fp.determinant},
               {"signature_abs", fp.signature_abs},
               {"jones_canonical", poly_to_json(fp.jones_canon)},
               {"candidates", names}};
        emit(out, output_path, j.dump(2));
      } else {
        std::ostringstream line;
        if (names.empty()) {
          line << "unidentified";
        } else {
          for (std::size_t i = 0; i < names.size(); ++i) line << (i ? " " : "") << names[i];
        }
        emit(out, output_path, line.str());
      }
      return 0;
    }

    if (search_cmd->parsed()) {
      SymmetricUnionScheme templ = load_scheme_file(in.scheme_path);
      ReferenceTable table = ingest_table(table_path);
      SearchOptions options;
      options.jobs = jobs;
      options.omit_after_found = omit_after_found;
      options.max_total_crossings = max_crossings;
      if (const char* env = std::getenv("SYMUNION_BUDGET")) {
        try {
          options.max_expansions = std::stoull(env);
        } catch (const std::exception&) {
          raise(ErrorKind::MalformedToken, "SYMUNION_BUDGET must be an integer");
        }
      }
      auto bounds = parse_bounds(bounds_text, templ.open_slots.size());
      SearchReport report = search(templ, bounds, table, options);
      emit(out, output_path, as_json ? report_to_json(report) : report_to_text(report));
      return 0;
    }

    if (crossings_cmd->parsed()) {
      SymmetricUnionScheme s = load_scheme(in);
      int total = total_crossings(s);
      if (as_json)
        emit(out, output_path, json{{"total_crossings", total}}.dump(2));
      else
        emit(out, output_path, std::to_string(total));
      return 0;
    }

    err << "usage error: no subcommand\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace symknot
