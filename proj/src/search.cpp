#include "symknot/search.hpp"

#include <atomic>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "symknot/errors.hpp"
#include "symknot/poly_json.hpp"

namespace symknot {

namespace {

using nlohmann::json;

std::vector<int> assignment_at(std::uint64_t index, const std::vector<std::pair<int, int>>& bounds) {
  std::vector<int> values(bounds.size());
  for (std::size_t i = bounds.size(); i-- > 0;) {
    std::uint64_t size = static_cast<std::uint64_t>(bounds[i].second - bounds[i].first + 1);
    values[i] = bounds[i].first + static_cast<int>(index % size);
    index /= size;
  }
  return values;
}

struct Outcome {
  enum class Kind { Row, MultiComponent, OverCap } kind = Kind::Row;
  SearchRow row;
};

json fingerprint_json(const InvariantFingerprint& fp) {
  json j;
  j["determinant"] = fp.determinant;
  j["signature_abs"] = fp.signature_abs;
  j["jones_canonical"] = poly_to_json(fp.jones_canon);
  if (fp.alexander) j["alexander"] = poly_to_json(*fp.alexander);
  return j;
}

}  // namespace

std::uint64_t fnv1a_hash(const std::string& text) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  return hash;
}

SearchReport search(const SymmetricUnionScheme& templ,
                    const std::vector<std::pair<int, int>>& bounds, const ReferenceTable& table,
                    const SearchOptions& options) {
  validate_scheme(templ, /*allow_open=*/true);
  if (templ.open_slots.empty())
    raise(ErrorKind::InvalidScheme, "search requires a template with open slots");
  if (bounds.size() != templ.open_slots.size())
    raise(ErrorKind::ArityMismatch,
          "template has " + std::to_string(templ.open_slots.size()) + " open slots, got " +
              std::to_string(bounds.size()) + " bounds");
  for (const auto& [lo, hi] : bounds)
    if (lo > hi) raise(ErrorKind::ArityMismatch, "empty bound interval");

  SearchReport report;
  report.slots = templ.open_slots;
  report.bounds = bounds;
  report.omit_after_found = options.omit_after_found;
  report.max_total_crossings = options.max_total_crossings;
  report.template_hash = fnv1a_hash(scheme_to_json(templ));

  std::uint64_t total = 1;
  for (const auto& [lo, hi] : bounds) {
    std::uint64_t size = static_cast<std::uint64_t>(hi - lo + 1);
    if (total > UINT64_MAX / size) raise(ErrorKind::ResourceLimit, "assignment space overflow");
    total *= size;
  }
  report.assignments_total = total;
  std::uint64_t limit = total;
  if (limit > options.max_expansions) {
    limit = options.max_expansions;
    report.partial = true;
  }

  std::vector<std::optional<Outcome>> outcomes(static_cast<std::size_t>(limit));
  std::atomic<std::uint64_t> cursor{0};
  std::atomic<bool> failed{false};
  std::string failure;
  std::mutex failure_mutex;

  auto worker = [&]() {
    while (!failed.load(std::memory_order_relaxed)) {
      std::uint64_t index = cursor.fetch_add(1, std::memory_order_relaxed);
      if (index >= limit) return;
      try {
        std::vector<int> values = assignment_at(index, bounds);
        SymmetricUnionScheme s = instantiate_template(templ, values);
        Outcome outcome;
        outcome.row.assignment = values;
        outcome.row.total_crossings = total_crossings(s);
        if (outcome.row.total_crossings > options.max_total_crossings) {
          outcome.kind = Outcome::Kind::OverCap;
        } else {
          PlanarDiagram d = expand(s);
          if (component_count(d) != 1) {
            outcome.kind = Outcome::Kind::MultiComponent;
          } else {
            outcome.kind = Outcome::Kind::Row;
            outcome.row.fp = fingerprint(d, /*with_alexander=*/false, options.max_total_crossings);
            outcome.row.candidates = identify(outcome.row.fp, table);
          }
        }
        outcomes[static_cast<std::size_t>(index)] = std::move(outcome);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        failed.store(true, std::memory_order_relaxed);
        if (failure.empty()) failure = e.what();
      }
    }
  };

  int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failed.load()) throw Error(ErrorKind::ResourceLimit, "search aborted: " + failure);

  std::set<std::string> found;
  for (std::uint64_t i = 0; i < limit; ++i) {
    Outcome& outcome = *outcomes[static_cast<std::size_t>(i)];
    switch (outcome.kind) {
      case Outcome::Kind::MultiComponent:
        report.skipped_multi_component += 1;
        continue;
      case Outcome::Kind::OverCap:
        report.skipped_crossing_cap += 1;
        continue;
      case Outcome::Kind::Row:
        break;
    }
    report.evaluated += 1;
    SearchRow row = std::move(outcome.row);
    if (options.omit_after_found) {
      std::vector<std::string> fresh_names;
      for (const auto& name : row.candidates)
        if (!found.count(name)) fresh_names.push_back(name);
      row.candidates = std::move(fresh_names);
    }
    for (const auto& name : row.candidates)
      if (found.insert(name).second) report.names_found.push_back(name);
    if (!row.candidates.empty()) report.identified_rows += 1;
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string report_to_json(const SearchReport& report) {
  json j;
  j["version"] = report.version;
  j["template_hash"] = report.template_hash;
  j["slots"] = report.slots;
  json jbounds = json::array();
  for (const auto& [lo, hi] : report.bounds) jbounds.push_back({lo, hi});
  j["bounds"] = jbounds;
  j["omit_after_found"] = report.omit_after_found;
  j["max_total_crossings"] = report.max_total_crossings;
  j["assignments_total"] = report.assignments_total;
  j["evaluated"] = report.evaluated;
  j["skipped_multi_component"] = report.skipped_multi_component;
  j["skipped_crossing_cap"] = report.skipped_crossing_cap;
  j["identified_rows"] = report.identified_rows;
  j["partial"] = report.partial;
  j["names_found"] = report.names_found;
  json rows = json::array();
  for (const auto& row : report.rows) {
    json r;
    r["assignment"] = row.assignment;
    r["total_crossings"] = row.total_crossings;
    r["fingerprint"] = fingerprint_json(row.fp);
    r["candidates"] = row.candidates;
    rows.push_back(r);
  }
  j["rows"] = rows;
  return j.dump(2);
}

std::string report_to_text(const SearchReport& report) {
  std::ostringstream out;
  out << "search report (version " << report.version << ", template hash " << report.template_hash
      << ")\n";
  out << "bounds:";
  for (std::size_t i = 0; i < report.bounds.size(); ++i)
    out << " slot" << report.slots[i] << "=[" << report.bounds[i].first << ","
        << report.bounds[i].second << "]";
  out << "\n";
  out << "assignments=" << report.assignments_total << " evaluated=" << report.evaluated
      << " skipped_multi=" << report.skipped_multi_component
      << " skipped_cap=" << report.skipped_crossing_cap << " identified=" << report.identified_rows
      << (report.partial ? " PARTIAL" : "") << "\n";
  for (const auto& row : report.rows) {
    out << "(";
    for (std::size_t i = 0; i < row.assignment.size(); ++i)
      out << (i ? "," : "") << row.assignment[i];
    out << ") crossings=" << row.total_crossings << " det=" << row.fp.determinant
        << " |sigma|=" << row.fp.signature_abs << " jones=" << row.fp.jones_canon.serialize_compact();
    out << " candidates=";
    if (row.candidates.empty()) {
      out << "-";
    } else {
      for (std::size_t i = 0; i < row.candidates.size(); ++i)
        out << (i ? "," : "") << row.candidates[i];
    }
    out << "\n";
  }
  out << "names found:";
  if (report.names_found.empty()) out << " none";
  for (const auto& name : report.names_found) out << " " << name;
  out << "\n";
  return out.str();
}

}  // namespace symknot
