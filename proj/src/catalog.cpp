#include "eaqmds/catalog.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <tuple>

#include "eaqmds/errors.hpp"
#include "eaqmds/numtheory.hpp"
#include "json.hpp"

namespace eaqmds {

namespace {

bool family_selected(const std::optional<std::vector<FamilyId>>& filter, FamilyId f) {
  return !filter || std::find(filter->begin(), filter->end(), f) != filter->end();
}

void recheck(const CatalogRow& r) {
  if (r.mds && r.n + r.c - r.k != 2 * (r.d - 1)) {
    throw VerificationFailure(r.family + " q=" + std::to_string(r.q) + " d=" + std::to_string(r.d) +
                              ": row flagged mds fails n + c - k = 2(d-1)");
  }
}

auto sort_key(const CatalogRow& r) {
  const auto fam = parse_family(r.family);
  return std::make_tuple(fam ? static_cast<int>(*fam) : 99, r.q, r.h.value_or(0), r.d, r.c);
}

std::string verified_name(Verified v) { return to_string(v); }

}  // namespace

CatalogRow to_catalog_row(const FamilyRow& row, std::optional<int> table) {
  CatalogRow r;
  r.family = family_name(row.family);
  r.q = row.q;
  if (row.family == FamilyId::QM1_H) r.h = row.h;
  r.n = row.params.n;
  r.k = row.params.k;
  r.d = row.params.d;
  r.c = row.params.c;
  r.mds = row.params.mds;
  r.verified = row.verified;
  r.source_table = table;
  return r;
}

std::vector<TableEntry> table_entries(int table) {
  using F = FamilyId;
  std::vector<TableEntry> out;
  auto add = [&](F f, std::uint64_t q, std::uint64_t h = 0) { out.push_back({table, f, q, h}); };
  switch (table) {
    case 1:
      // 19 = 3 mod 4: that line of the table is only reachable through the
      // q = 3 mod 4 construction, which has the same parameters.
      for (std::uint64_t q : {9, 13, 17, 19, 25, 29}) add(q % 4 == 1 ? F::Q2P1_NEGA : F::Q2P1_CONSTA, q);
      break;
    case 2:
      for (std::uint64_t q : {7, 11, 19, 23, 31, 43}) add(F::Q2P1_CONSTA, q);
      break;
    case 4:
      for (std::uint64_t q : {13, 23, 43, 53}) add(F::TENTH_3, q);
      break;
    case 5:
      for (std::uint64_t q : {17, 27, 37, 47}) add(F::TENTH_7, q);
      break;
    case 6:
      add(F::QM1_H, 11, 3);
      add(F::QM1_H, 17, 3);
      add(F::QM1_H, 19, 5);
      add(F::QM1_H, 29, 5);
      add(F::QM1_H, 13, 7);
      add(F::QM1_H, 41, 7);
      break;
    default:
      break;
  }
  return out;
}

bool is_known_table(int table) noexcept {
  return table == 1 || table == 2 || table == 4 || table == 5 || table == 6 || table == 7;
}

TableLine summarize(int table, const std::vector<CatalogRow>& rows) {
  if (rows.empty()) throw InvalidInput("summarize: no rows");
  const CatalogRow& a = rows.front();
  const std::int64_t K = a.k + 2 * a.d;
  std::int64_t lo = a.d;
  std::int64_t hi = a.d;
  std::set<std::int64_t> ds;
  for (const auto& r : rows) {
    if (r.n != a.n || r.c != a.c || r.q != a.q || r.k + 2 * r.d != K) {
      throw VerificationFailure("summarize: rows do not follow a single [[n,K-2d,d;c]] line");
    }
    lo = std::min(lo, r.d);
    hi = std::max(hi, r.d);
    ds.insert(r.d);
  }
  std::int64_t step = ds.size() > 1 ? *std::next(ds.begin()) - *ds.begin() : 1;
  for (std::int64_t d = lo; d <= hi; d += step) {
    if (!ds.count(d)) throw VerificationFailure("summarize: d values are not an arithmetic run");
  }
  if (static_cast<std::int64_t>(ds.size()) != (hi - lo) / step + 1) {
    throw VerificationFailure("summarize: d values are not an arithmetic run");
  }
  TableLine line;
  line.table = table;
  line.q = a.q;
  line.h = a.h.value_or(0);
  line.code = "[[" + std::to_string(a.n) + "," + std::to_string(K) + "-2d,d;" + std::to_string(a.c) + "]]_{" +
              std::to_string(a.q) + "}";
  line.range = std::to_string(lo) + "<=d<=" + std::to_string(hi) + (step == 2 ? " even" : "");
  return line;
}

Catalog build_catalog(const CatalogConfig& config) {
  for (int t : config.tables) {
    if (!is_known_table(t)) throw InvalidInput("unknown table " + std::to_string(t));
  }
  Catalog cat;
  std::map<std::tuple<FamilyId, std::uint64_t, std::uint64_t>, std::vector<FamilyRow>> cache;
  auto rows_for = [&](const TableEntry& e) -> const std::vector<FamilyRow>& {
    const auto key = std::make_tuple(e.family, e.q, e.h);
    auto it = cache.find(key);
    if (it == cache.end()) {
      EnumerateOptions opt = config.enumerate;
      opt.include_qmds = false;  // tables list the EA range only
      it = cache.emplace(key, enumerate_family(e.family, e.q, e.h, opt)).first;
    }
    return it->second;
  };

  std::set<std::tuple<int, std::uint64_t, std::uint64_t, std::int64_t>> seen;
  std::vector<int> tables = config.tables;
  std::sort(tables.begin(), tables.end());
  tables.erase(std::unique(tables.begin(), tables.end()), tables.end());
  for (int t : tables) {
    for (const TableEntry& e : table_entries(t)) {
      if (!family_selected(config.families, e.family)) continue;
      std::vector<CatalogRow> line_rows;
      for (const FamilyRow& fr : rows_for(e)) {
        CatalogRow row = to_catalog_row(fr, t);
        line_rows.push_back(row);
        const auto key = std::make_tuple(static_cast<int>(e.family), e.q, e.h, row.d);
        if (seen.insert(key).second) cat.rows.push_back(std::move(row));
      }
      cat.lines.push_back(summarize(t, line_rows));
      if (t == 1 && e.family == FamilyId::Q2P1_CONSTA) {
        cat.footnotes.push_back("table 1 q=" + std::to_string(e.q) +
                                ": q = 3 mod 4, row produced by Q2P1_CONSTA (same n, k, d, c)");
      }
      if (t == 6) {
        const RangeReport rep = analyze_range(e.family, e.q, e.h);
        const std::uint64_t tight = (e.q + 1) / e.h + 1;
        const std::uint64_t alt = (e.q + 1) * (e.h - 1) / (2 * e.h) + 1;
        cat.footnotes.push_back("table 6 q=" + std::to_string(e.q) + " h=" + std::to_string(e.h) +
                                ": verified " + std::to_string(rep.computed.lo) + "<=d<=" +
                                std::to_string(rep.computed.hi) + " (|T_ss|=" + std::to_string(rep.tss_below) +
                                " just below); lower bounds (q+1)/h+1 = " + std::to_string(tight) +
                                " and (q+1)(h-1)/(2h)+1 = " + std::to_string(alt));
      }
    }
    if (t == 7) {
      for (FamilyId f : {FamilyId::TENTH_3, FamilyId::TENTH_7}) {
        if (!family_selected(config.families, f)) continue;
        const int src = f == FamilyId::TENTH_3 ? 4 : 5;
        const std::int64_t extra = f == FamilyId::TENTH_3 ? 2 : 4;
        for (const TableEntry& e : table_entries(src)) {
          const RangeReport rep = analyze_range(f, e.q);
          const auto m = static_cast<std::int64_t>(e.q / 10);
          cat.footnotes.push_back("table 7 " + std::string(family_name(f)) + " q=" + std::to_string(e.q) +
                                  " (m=" + std::to_string(m) + "): verified " + std::to_string(rep.computed.lo) + "<=d<=" +
                                  std::to_string(rep.computed.hi) + " even (|T_ss|=" +
                                  std::to_string(rep.tss_above) + " at d=" + std::to_string(rep.computed.hi + 2) +
                                  "); 6m+" + std::to_string(extra) + " = " + std::to_string(6 * m + extra) +
                                  ", summary bound 4m+" + std::to_string(extra) + " = " +
                                  std::to_string(4 * m + extra));
        }
      }
    }
  }
  std::sort(cat.rows.begin(), cat.rows.end(),
            [](const CatalogRow& a, const CatalogRow& b) { return sort_key(a) < sort_key(b); });
  return cat;
}

void write_csv(std::ostream& out, const std::vector<CatalogRow>& rows, const std::vector<std::string>& footnotes) {
  out << "family,q,h,n,k,d,c,mds,verified\n";
  for (const auto& r : rows) {
    recheck(r);
    out << r.family << ',' << r.q << ',';
    if (r.h) out << *r.h;
    out << ',' << r.n << ',' << r.k << ',' << r.d << ',' << r.c << ',' << (r.mds ? "true" : "false") << ','
        << verified_name(r.verified) << '\n';
  }
  for (const auto& f : footnotes) out << "# " << f << '\n';
}

void write_json(std::ostream& out, const std::vector<CatalogRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    recheck(r);
    nlohmann::ordered_json o;
    o["family"] = r.family;
    o["q"] = r.q;
    o["h"] = r.h ? nlohmann::ordered_json(*r.h) : nlohmann::ordered_json(nullptr);
    o["n"] = r.n;
    o["k"] = r.k;
    o["d"] = r.d;
    o["c"] = r.c;
    o["mds"] = r.mds;
    o["verified"] = verified_name(r.verified);
    arr.push_back(std::move(o));
  }
  out << arr.dump(2) << '\n';
}

std::size_t VerifyReport::failures() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const VerifyRecord& r) { return !r.ok(); }));
}

std::vector<TableEntry> applicable_instances(std::uint64_t q_min, std::uint64_t q_max,
                                             const std::optional<std::vector<FamilyId>>& families) {
  std::vector<TableEntry> out;
  for (FamilyId f : kAllFamilies) {
    if (!family_selected(families, f)) continue;
    for (std::uint64_t q = q_min; q <= q_max; ++q) {
      if (f == FamilyId::QM1_H) {
        for (std::uint64_t h : {3, 5, 7}) {
          if (is_applicable(f, q, h)) out.push_back({0, f, q, h});
        }
      } else if (is_applicable(f, q)) {
        out.push_back({0, f, q, 0});
      }
    }
  }
  return out;
}

VerifyRecord verify_instance(const Tower& tower, const FamilyInstance& inst, const VerifyConfig& config) {
  const FamilyLayout& L = inst.layout;
  VerifyRecord rec;
  rec.family = L.family;
  rec.q = L.q;
  rec.h = L.h;
  rec.k_index = inst.k;
  rec.n = L.spec.n;
  rec.t_size = inst.t.size();
  rec.predicted = inst.predicted_tss;
  auto note = [&](const std::string& what) {
    if (!rec.error.empty()) rec.error += "; ";
    rec.error += what;
  };
  try {
    const ConstacyclicCode code = build_code(tower, inst.t);
    rec.bch = code.bch_delta;
    rec.combinatorial = ebits_combinatorial(inst.t);
    rec.rank = ebits_rank_oracle(code);
    rec.k = static_cast<std::int64_t>(L.spec.n) - 2 * static_cast<std::int64_t>(inst.t.size()) +
            static_cast<std::int64_t>(rec.combinatorial);
    const auto n = static_cast<std::int64_t>(L.spec.n);
    const auto d = static_cast<std::int64_t>(rec.bch);
    rec.singleton_equality = n + static_cast<std::int64_t>(rec.combinatorial) - rec.k == 2 * (d - 1);
    if (rec.combinatorial != rec.predicted) note("predicted |T_ss| differs from decomposition");
    if (rec.rank != rec.combinatorial) note("rank(HH^dagger) differs from |T_ss|");
    if (rec.bch != inst.t.size() + 1) note("bch bound is not |T|+1");
    if (!rec.singleton_equality) note("EA-Singleton equality fails");
    if (config.exact_distance) {
      try {
        const auto dist = exact_distance_small(code, config.distance);
        if (dist.status == DistanceResult::Status::Exact) {
          rec.exact = dist.distance;
          if (dist.distance < code.bch_delta) note("exact distance below bch bound");
          if (dist.distance != code.spec.n - code.dim + 1) note("exact distance is not n-k+1");
        }
      } catch (const BudgetExceeded&) {
        rec.exact_skipped = true;
      }
    }
  } catch (const std::exception& e) {
    note(e.what());
  }
  return rec;
}

VerifyReport run_verify(const VerifyConfig& config) {
  std::vector<TableEntry> targets = applicable_instances(config.q_min, config.q_max, config.families);
  for (const auto& e : config.extra) {
    if (family_selected(config.families, e.family)) targets.push_back(e);
  }
  VerifyReport report;
  for (const TableEntry& e : targets) {
    const FamilyLayout L = family_layout(e.family, e.q, e.h);
    const Tower tower = Tower::make(L.spec);
    const std::int64_t first = config.include_qmds ? L.k_lo : L.k_ea;
    const auto count = static_cast<std::size_t>(L.k_hi - first + 1);
    std::vector<VerifyRecord> recs(count);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
      auto& rec = recs[static_cast<std::size_t>(i)];
      try {
        rec = verify_instance(tower, family_defining_set(e.family, e.q, e.h, first + i), config);
      } catch (const std::exception& ex) {
        rec.family = e.family;
        rec.q = e.q;
        rec.h = e.h;
        rec.k_index = first + i;
        rec.error = ex.what();
      }
    }
    report.records.insert(report.records.end(), recs.begin(), recs.end());
  }
  return report;
}

void write_verify_report(std::ostream& out, const VerifyReport& report) {
  out << "family,q,h,k_index,n,|T|,predicted,combinatorial,rank,bch,k,singleton,exact,status\n";
  for (const auto& r : report.records) {
    out << family_name(r.family) << ',' << r.q << ',';
    if (r.family == FamilyId::QM1_H) out << r.h;
    out << ',' << r.k_index << ',' << r.n << ',' << r.t_size << ',' << r.predicted << ',' << r.combinatorial << ','
        << r.rank << ',' << r.bch << ',' << r.k << ',' << (r.singleton_equality ? "eq" : "NO") << ',';
    if (r.exact) {
      out << *r.exact;
    } else if (r.exact_skipped) {
      out << "budget";
    }
    out << ',' << (r.ok() ? "ok" : "FAIL: " + r.error) << '\n';
  }
  out << "# instances=" << report.records.size() << " failures=" << report.failures() << '\n';
}

}  // namespace eaqmds
