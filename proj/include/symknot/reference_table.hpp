#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symknot/fingerprint.hpp"
#include "symknot/laurent.hpp"

namespace symknot {

struct ReferenceRow {
  std::string name;
  int crossings = 0;
  int determinant = 0;
  std::string status;
  std::optional<LaurentPoly> jones_canon;  // canonicalized on ingest, in x
};

// Name -> invariant table; rows keep file order, names unique.
struct ReferenceTable {
  std::vector<ReferenceRow> rows;
  std::string provenance;

  const ReferenceRow* find(const std::string& name) const;
};

// CSV with header name,crossings,determinant,status[,jones]; the optional
// jones column uses compact "exp:coeff;exp:coeff" form in the variable t.
ReferenceTable ingest_table_text(const std::string& csv, const std::string& provenance);
ReferenceTable ingest_table(const std::string& path);

// Names whose stored invariants all agree with the fingerprint, in table
// order. Determinant always compared; Jones when the row stores one.
std::vector<std::string> identify(const InvariantFingerprint& fp, const ReferenceTable& table);

}  // namespace symknot
