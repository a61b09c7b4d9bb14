#pragma once

// Table reproduction, flat row serialization and the cross-oracle sweep.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "eaqmds/families.hpp"

namespace eaqmds {

struct CatalogRow {
  std::string family;
  std::uint64_t q = 0;
  std::optional<std::uint64_t> h;
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t d = 0;
  std::int64_t c = 0;
  bool mds = false;
  Verified verified = Verified::BchOnly;
  std::optional<int> source_table;  // not serialized

  friend bool operator==(const CatalogRow&, const CatalogRow&) = default;
};

CatalogRow to_catalog_row(const FamilyRow& row, std::optional<int> table = std::nullopt);

/// One (family, q, h) line of a published parameter table.
struct TableEntry {
  int table = 0;
  FamilyId family;
  std::uint64_t q = 0;
  std::uint64_t h = 0;
};

/// Tables 1, 2, 4, 5 and 6 in publication order. Table 7 has no rows of its
/// own; it only contributes range footnotes.
std::vector<TableEntry> table_entries(int table);
bool is_known_table(int table) noexcept;

/// A table line rendered from computed rows: "[[82,88-2d,d;4]]_{9}" and
/// "12<=d<=26 even". The k column is written as K-2d with K = k + 2d, which
/// must be constant over the rows.
struct TableLine {
  int table = 0;
  std::uint64_t q = 0;
  std::uint64_t h = 0;
  std::string code;
  std::string range;
};

TableLine summarize(int table, const std::vector<CatalogRow>& rows);

struct CatalogConfig {
  std::vector<int> tables = {1, 2, 4, 5, 6, 7};
  std::optional<std::vector<FamilyId>> families;  // nullopt: all
  EnumerateOptions enumerate;
};

struct Catalog {
  std::vector<CatalogRow> rows;  // (family, q, h, d) ascending, no duplicates
  std::vector<TableLine> lines;
  std::vector<std::string> footnotes;
};

Catalog build_catalog(const CatalogConfig& config);

/// Header `family,q,h,n,k,d,c,mds,verified`; footnotes follow as `# ` lines.
/// Both writers recheck n + c - k = 2(d-1) on every row flagged mds and throw
/// VerificationFailure when it fails.
void write_csv(std::ostream& out, const std::vector<CatalogRow>& rows,
               const std::vector<std::string>& footnotes = {});
void write_json(std::ostream& out, const std::vector<CatalogRow>& rows);

/// Sweep over small q checking every oracle on every instance.
struct VerifyConfig {
  std::uint64_t q_min = 3;
  std::uint64_t q_max = 13;
  std::optional<std::vector<FamilyId>> families;
  bool include_qmds = true;
  bool exact_distance = true;
  DistanceOptions distance;
  /// Extra (family, q, h) triples outside the q window.
  std::vector<TableEntry> extra;
};

struct VerifyRecord {
  FamilyId family;
  std::uint64_t q = 0;
  std::uint64_t h = 0;
  std::int64_t k_index = 0;
  std::uint64_t n = 0;
  std::size_t t_size = 0;
  std::size_t predicted = 0;
  std::size_t combinatorial = 0;
  std::size_t rank = 0;
  std::size_t bch = 0;
  std::int64_t k = 0;
  bool singleton_equality = false;
  std::optional<std::size_t> exact;
  bool exact_skipped = false;  // oracle budget exceeded
  std::string error;           // empty when every check passed

  bool ok() const noexcept { return error.empty(); }
};

struct VerifyReport {
  std::vector<VerifyRecord> records;
  std::size_t failures() const noexcept;
};

VerifyReport run_verify(const VerifyConfig& config);
VerifyRecord verify_instance(const Tower& tower, const FamilyInstance& inst, const VerifyConfig& config);

/// (family, q, h) triples with odd prime power q in [q_min, q_max].
std::vector<TableEntry> applicable_instances(std::uint64_t q_min, std::uint64_t q_max,
                                             const std::optional<std::vector<FamilyId>>& families);

void write_verify_report(std::ostream& out, const VerifyReport& report);

}  // namespace eaqmds
