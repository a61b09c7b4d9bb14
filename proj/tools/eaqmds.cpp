// eaqmds: command-line frontend for the EA-quantum MDS toolkit.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input or config.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eaqmds/catalog.hpp"
#include "eaqmds/errors.hpp"
#include "eaqmds/kernels.hpp"
#include "json.hpp"

using namespace eaqmds;
using nlohmann::ordered_json;

namespace {

struct Globals {
  std::string format = "csv";
  std::string out_path;
  int workers = 0;
  std::size_t distance_cap = 0;
  std::uint64_t distance_budget = 1'000'000;
};

struct SingleCode {
  std::uint64_t q = 0, r = 0, n = 0;
  std::vector<std::uint64_t> cosets;
  std::vector<std::uint64_t> elements;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw InvalidInput("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  void finish() {
    stream().flush();
    if (!stream()) throw std::runtime_error("write failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::string join(const std::vector<std::uint64_t>& v, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

std::vector<FamilyId> parse_families(const std::vector<std::string>& names) {
  std::vector<FamilyId> out;
  for (const auto& s : names) {
    if (s.empty()) continue;  // --families "" selects nothing
    auto f = parse_family(s);
    if (!f) throw InvalidInput("unknown family " + s);
    out.push_back(*f);
  }
  return out;
}

DefiningSet single_defining_set(const SingleCode& sc, const CodeSpec& spec) {
  if (sc.cosets.empty() == sc.elements.empty()) {
    throw InvalidInput("give exactly one of --cosets or --elements");
  }
  return sc.elements.empty() ? DefiningSet::from_cosets(spec, sc.cosets)
                             : DefiningSet::from_elements(spec, sc.elements);
}

DistanceOptions distance_options(const Globals& g) {
  DistanceOptions d;
  d.cap = g.distance_cap;
  d.budget = g.distance_budget;
  return d;
}

void cmd_cosets(const Globals& g, const SingleCode& sc) {
  const CodeSpec spec = CodeSpec::make(sc.q, sc.r, sc.n);
  const auto parts = partition(spec);
  Output out(g.out_path);
  auto classify = [](const CyclotomicCoset& c) -> std::string {
    if (is_skew_symmetric(c)) return "skew-symmetric";
    return "paired-with-C_" + std::to_string(skew_partner(c).leader);
  };
  if (g.format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& c : parts) {
      arr.push_back({{"leader", c.leader}, {"elements", c.elements}, {"class", classify(c)}});
    }
    out.stream() << arr.dump(2) << '\n';
  } else {
    out.stream() << "leader,size,elements,class\n";
    for (const auto& c : parts) {
      out.stream() << c.leader << ',' << c.elements.size() << ',' << join(c.elements) << ',' << classify(c) << '\n';
    }
  }
  out.finish();
}

void cmd_decompose(const Globals& g, const SingleCode& sc) {
  const CodeSpec spec = CodeSpec::make(sc.q, sc.r, sc.n);
  const DefiningSet t = single_defining_set(sc, spec);
  auto image = t_minus_q(t);
  std::sort(image.begin(), image.end());
  const Decomposition d = decompose(t);
  Output out(g.out_path);
  if (g.format == "json") {
    ordered_json o = {{"q", spec.q},       {"r", spec.r},         {"n", spec.n},
                      {"T", t.elements()}, {"T_minus_q", image},  {"T_ss", d.t_ss},
                      {"T_sas", d.t_sas},  {"ebits", d.t_ss.size()}, {"dual_containing", d.t_ss.empty()},
                      {"coset_closed", t.is_coset_closed()}};
    out.stream() << o.dump(2) << '\n';
  } else {
    out.stream() << "set,size,elements\n"
                 << "T," << t.size() << ',' << join(t.elements()) << '\n'
                 << "T^-q," << image.size() << ',' << join(image) << '\n'
                 << "T_ss," << d.t_ss.size() << ',' << join(d.t_ss) << '\n'
                 << "T_sas," << d.t_sas.size() << ',' << join(d.t_sas) << '\n'
                 << "# dual_containing=" << (d.t_ss.empty() ? "true" : "false")
                 << " coset_closed=" << (t.is_coset_closed() ? "true" : "false") << '\n';
  }
  out.finish();
}

// Shared by `code` and single-code `verify`; returns false when a check fails.
bool run_single_code(const Globals& g, const SingleCode& sc, bool exact) {
  const CodeSpec spec = CodeSpec::make(sc.q, sc.r, sc.n);
  const DefiningSet t = single_defining_set(sc, spec);
  const Tower tower = Tower::make(spec);
  const ConstacyclicCode code = build_code(tower, t);
  const EaqParams p = derive_eaq(code);
  DistanceOptions dopt = distance_options(g);
  const MdsCheck classical = is_classical_mds(code, dopt);
  std::optional<std::size_t> dist;
  bool ok = true;
  if (exact) {
    try {
      const auto r = exact_distance_small(code, dopt);
      if (r.status == DistanceResult::Status::Exact) {
        dist = r.distance;
        ok = r.distance >= code.bch_delta;
      }
    } catch (const BudgetExceeded& e) {
      std::cerr << "note: " << e.what() << '\n';
    }
  }
  std::vector<std::string> coeffs;
  for (Elem e : code.gen_poly.coeffs()) coeffs.push_back(tower.base->format(e));

  Output out(g.out_path);
  if (g.format == "json") {
    ordered_json o = {{"q", spec.q},
                      {"r", spec.r},
                      {"n", spec.n},
                      {"m", spec.m},
                      {"dim", code.dim},
                      {"T_size", t.size()},
                      {"bch_delta", code.bch_delta},
                      {"gen_poly", coeffs},
                      {"ebits", p.c},
                      {"ea", {{"n", p.n}, {"k", p.k}, {"d", p.d}, {"c", p.c}, {"mds", p.mds}}},
                      {"classical", to_string(classical.verdict)},
                      {"exact_distance", dist ? ordered_json(*dist) : ordered_json(nullptr)}};
    out.stream() << o.dump(2) << '\n';
  } else {
    out.stream() << "q,r,n,m,dim,T_size,bch_delta,ea_n,ea_k,ea_d,ea_c,ea_mds,classical,exact_distance,gen_poly\n"
                 << spec.q << ',' << spec.r << ',' << spec.n << ',' << spec.m << ',' << code.dim << ',' << t.size()
                 << ',' << code.bch_delta << ',' << p.n << ',' << p.k << ',' << p.d << ',' << p.c << ','
                 << (p.mds ? "true" : "false") << ',' << to_string(classical.verdict) << ','
                 << (dist ? std::to_string(*dist) : "") << ',';
    for (std::size_t i = 0; i < coeffs.size(); ++i) out.stream() << (i ? " " : "") << coeffs[i];
    out.stream() << '\n';
  }
  out.finish();
  return ok;
}

void write_rows(const Globals& g, const std::vector<CatalogRow>& rows, const std::vector<std::string>& notes) {
  Output out(g.out_path);
  if (g.format == "json") {
    write_json(out.stream(), rows);
    for (const auto& n : notes) std::cerr << "# " << n << '\n';
  } else {
    write_csv(out.stream(), rows, notes);
  }
  out.finish();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement-assisted quantum MDS codes from constacyclic codes"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  app.set_config("--config", "", "TOML config file; command-line flags override it");

  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", g.out_path, "Output path (default stdout)");
  app.add_option("--workers", g.workers, "Worker threads (default: OpenMP default)")->check(CLI::PositiveNumber);
  app.add_option("--distance-cap", g.distance_cap, "Largest weight the distance oracle tries (0: n-k+1)");
  app.add_option("--distance-budget", g.distance_budget, "Subset budget of the distance oracle")
      ->check(CLI::PositiveNumber);

  SingleCode sc;
  auto add_spec = [&sc](CLI::App* sub) {
    sub->add_option("--q", sc.q, "Field parameter q (prime power)")->required();
    sub->add_option("--r", sc.r, "Order r of eta, dividing q+1")->required();
    sub->add_option("--n", sc.n, "Code length")->required();
  };
  auto add_set = [&sc](CLI::App* sub) {
    sub->add_option("--cosets", sc.cosets, "Coset representatives forming T")->delimiter(',');
    sub->add_option("--elements", sc.elements, "Raw elements of T (not closed up)")->delimiter(',');
  };

  auto* cosets = app.add_subcommand("cosets", "Partition Omega into q^2-cyclotomic cosets");
  add_spec(cosets);

  auto* decomp = app.add_subcommand("decompose", "Split a defining set into T_ss and T_sas");
  add_spec(decomp);
  add_set(decomp);

  bool code_exact = false;
  auto* code = app.add_subcommand("code", "Build one constacyclic code and its EA parameters");
  add_spec(code);
  add_set(code);
  code->add_flag("--exact", code_exact, "Run the exact distance oracle");

  std::string family_name_opt;
  std::uint64_t fam_q = 0, fam_h = 0;
  bool qmds = false, fam_exact = false, no_rank = false;
  auto* family = app.add_subcommand("family", "Enumerate one family at fixed q");
  family->set_help_flag("--help", "Print this help message and exit");  // frees -h for --h
  family->add_option("--family", family_name_opt, "Q2P1_NEGA, Q2P1_CONSTA, TENTH_3, TENTH_7 or QM1_H")->required();
  family->add_option("--q", fam_q, "q")->required();
  family->add_option("--h", fam_h, "h for QM1_H");
  family->add_flag("--qmds", qmds, "Also emit the c=0 datapoints below the EA range");
  family->add_flag("--exact", fam_exact, "Confirm d with the exact distance oracle where affordable");
  family->add_flag("--no-rank", no_rank, "Skip the rank(HH^dagger) oracle");

  std::vector<int> tables = {1, 2, 4, 5, 6, 7};
  std::vector<std::string> cat_families;
  bool cat_exact = false, summary = false, cat_no_rank = false;
  auto* catalog = app.add_subcommand("catalog", "Reproduce the published parameter tables");
  catalog->add_option("--tables", tables, "Tables to build")->delimiter(',');
  auto* fam_filter = catalog->add_option("--families", cat_families, "Family filter")->delimiter(',');
  catalog->add_flag("--exact", cat_exact, "Confirm d with the exact distance oracle where affordable");
  catalog->add_flag("--no-rank", cat_no_rank, "Skip the rank(HH^dagger) oracle");
  catalog->add_flag("--summary", summary, "Print one rendered line per table row instead of codes");

  std::uint64_t q_min = 3, q_max = 13;
  std::vector<std::string> ver_families;
  bool no_exact = false;
  auto* verify = app.add_subcommand("verify", "Run every oracle over a range of q, or on one code");
  verify->add_option("--q-min", q_min, "Smallest q of the sweep");
  verify->add_option("--q-max", q_max, "Largest q of the sweep");
  auto* ver_filter = verify->add_option("--families", ver_families, "Family filter")->delimiter(',');
  verify->add_flag("--no-exact", no_exact, "Skip the exact distance oracle");
  verify->add_option("--q", sc.q, "Single code: q");
  verify->add_option("--r", sc.r, "Single code: r");
  verify->add_option("--n", sc.n, "Single code: n");
  add_set(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (g.workers > 0) kernels::set_worker_count(g.workers);

    if (cosets->parsed()) {
      cmd_cosets(g, sc);
    } else if (decomp->parsed()) {
      cmd_decompose(g, sc);
    } else if (code->parsed()) {
      if (!run_single_code(g, sc, code_exact)) return 1;
    } else if (family->parsed()) {
      const auto f = parse_family(family_name_opt);
      if (!f) throw InvalidInput("unknown family " + family_name_opt);
      EnumerateOptions opt;
      opt.include_qmds = qmds;
      opt.exact_distance = fam_exact;
      opt.rank_oracle = !no_rank;
      opt.distance = distance_options(g);
      std::vector<CatalogRow> rows;
      for (const auto& r : enumerate_family(*f, fam_q, fam_h, opt)) rows.push_back(to_catalog_row(r));
      write_rows(g, rows, {});
    } else if (catalog->parsed()) {
      CatalogConfig cfg;
      cfg.tables = tables;
      if (fam_filter->count() > 0 || !cat_families.empty()) cfg.families = parse_families(cat_families);
      cfg.enumerate.exact_distance = cat_exact;
      cfg.enumerate.rank_oracle = !cat_no_rank;
      cfg.enumerate.distance = distance_options(g);
      const Catalog cat = build_catalog(cfg);
      if (summary) {
        Output out(g.out_path);
        if (g.format == "json") {
          ordered_json arr = ordered_json::array();
          for (const auto& l : cat.lines) {
            arr.push_back({{"table", l.table},
                           {"q", l.q},
                           {"h", l.h ? ordered_json(l.h) : ordered_json(nullptr)},
                           {"code", l.code},
                           {"range", l.range}});
          }
          out.stream() << arr.dump(2) << '\n';
        } else {
          out.stream() << "table,q,h,code,range\n";
          for (const auto& l : cat.lines) {
            out.stream() << l.table << ',' << l.q << ',' << (l.h ? std::to_string(l.h) : "") << ',' << l.code << ','
                         << l.range << '\n';
          }
          for (const auto& n : cat.footnotes) out.stream() << "# " << n << '\n';
        }
        out.finish();
      } else {
        write_rows(g, cat.rows, cat.footnotes);
      }
    } else if (verify->parsed()) {
      if (sc.q != 0 || !sc.cosets.empty() || !sc.elements.empty()) {
        if (!run_single_code(g, sc, !no_exact)) return 1;
        return 0;
      }
      VerifyConfig cfg;
      cfg.q_min = q_min;
      cfg.q_max = q_max;
      if (ver_filter->count() > 0 || !ver_families.empty()) cfg.families = parse_families(ver_families);
      cfg.exact_distance = !no_exact;
      cfg.distance = distance_options(g);
      const VerifyReport report = run_verify(cfg);
      Output out(g.out_path);
      write_verify_report(out.stream(), report);
      out.finish();
      if (report.failures() > 0) return 1;
    }
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
