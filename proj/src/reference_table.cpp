#include "symknot/reference_table.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "symknot/bracket.hpp"
#include "symknot/errors.hpp"

namespace symknot {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(field);
      field.clear();
    } else if (c != '\r') {
      field += c;
    }
  }
  fields.push_back(field);
  return fields;
}

std::string trimmed(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

}  // namespace

const ReferenceRow* ReferenceTable::find(const std::string& name) const {
  for (const auto& row : rows)
    if (row.name == name) return &row;
  return nullptr;
}

ReferenceTable ingest_table_text(const std::string& csv, const std::string& provenance) {
  ReferenceTable table;
  table.provenance = provenance;
  std::istringstream in(csv);
  std::string line;
  bool have_header = false;
  bool has_jones_column = false;
  std::set<std::string> names;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trimmed(line).empty()) continue;
    auto fields = split_csv_line(line);
    for (auto& f : fields) f = trimmed(f);
    if (!have_header) {
      if (fields.size() < 4 || fields[0] != "name" || fields[1] != "crossings" ||
          fields[2] != "determinant" || fields[3] != "status")
        raise(ErrorKind::MalformedRow, "expected header name,crossings,determinant,status[,jones]");
      if (fields.size() == 5 && fields[4] == "jones")
        has_jones_column = true;
      else if (fields.size() > 4)
        raise(ErrorKind::MalformedRow, "unexpected header columns");
      have_header = true;
      continue;
    }
    if (fields.size() != (has_jones_column ? 5u : 4u))
      raise(ErrorKind::MalformedRow, "line " + std::to_string(line_no) + ": wrong field count");
    ReferenceRow row;
    row.name = fields[0];
    if (row.name.empty())
      raise(ErrorKind::MalformedRow, "line " + std::to_string(line_no) + ": empty name");
    if (!names.insert(row.name).second)
      raise(ErrorKind::DuplicateName, "name " + row.name + " repeated");
    try {
      row.crossings = std::stoi(fields[1]);
      row.determinant = std::stoi(fields[2]);
    } catch (const std::exception&) {
      raise(ErrorKind::MalformedRow, "line " + std::to_string(line_no) + ": bad integer field");
    }
    if (row.determinant <= 0)
      raise(ErrorKind::MalformedRow, "line " + std::to_string(line_no) + ": determinant must be positive");
    row.status = fields[3];
    if (has_jones_column && !fields[4].empty())
      row.jones_canon = jones_canonical(LaurentPoly::parse_compact(Var::t, fields[4]).as_x());
    table.rows.push_back(std::move(row));
  }
  if (!have_header || table.rows.empty())
    raise(ErrorKind::MalformedRow, "table has no data rows");
  return table;
}

ReferenceTable ingest_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorKind::MalformedRow, "cannot open table file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return ingest_table_text(buf.str(), path);
}

std::vector<std::string> identify(const InvariantFingerprint& fp, const ReferenceTable& table) {
  std::vector<std::string> names;
  for (const auto& row : table.rows) {
    if (row.determinant != fp.determinant) continue;
    if (row.jones_canon && *row.jones_canon != fp.jones_canon) continue;
    names.push_back(row.name);
  }
  return names;
}

}  // namespace symknot
