#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "tricensus/checks.hpp"
#include "tricensus/generators.hpp"
#include "tricensus/parallel.hpp"
#include "tricensus/pointset_io.hpp"
#include "tricensus/report.hpp"

namespace {

using namespace tricensus;

constexpr int kExitOk = 0;
constexpr int kExitAuditFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input selection shared by the analysis subcommands: a point-set file or an
// inline generator spec.
struct InputSpec {
  std::string path;
  std::size_t grid_m = 0;
  std::size_t random_n = 0;
  std::size_t half_line_n = 0;
  std::uint64_t seed = 1;
  long range = 8;
  unsigned denom_log2 = 4;

  void attach(CLI::App* cmd, bool with_mirror = false) {
    auto* in = cmd->add_option("--in", path, "point set file (text, `x y` per line)");
    auto* g = cmd->add_option("--grid", grid_m, "generate an m x m integer grid");
    auto* r = cmd->add_option("--random", random_n, "generate n random dyadic-rational points");
    auto* h = cmd->add_option("--half-line", half_line_n,
                              "generate the N/2-on-a-line boundary configuration");
    in->excludes(g)->excludes(r)->excludes(h);
    g->excludes(r)->excludes(h);
    r->excludes(h);
    cmd->add_option("--seed", seed, "random generator seed")->capture_default_str();
    cmd->add_option("--range", range, "random lattice half-width")->capture_default_str();
    cmd->add_option("--denom-log2", denom_log2, "random lattice denominator exponent")
        ->capture_default_str();
    (void)with_mirror;
  }

  PointSet load() const {
    if (!path.empty()) return read_point_set_file(path);
    GenSpec spec;
    spec.seed = seed;
    spec.half_width = range;
    spec.denom_log2 = denom_log2;
    if (grid_m > 0) {
      spec.kind = GenSpec::Kind::grid;
      spec.side = grid_m;
    } else if (random_n > 0) {
      spec.kind = GenSpec::Kind::random;
      spec.count = random_n;
    } else if (half_line_n > 0) {
      spec.kind = GenSpec::Kind::half_line;
      spec.count = half_line_n;
    } else {
      throw UsageError("no input: pass --in FILE or one of --grid/--random/--half-line");
    }
    return make_point_set(spec);
  }
};

void write_text(const std::string& path, const std::string& payload) {
  if (path.empty() || path == "-") {
    std::cout << payload;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << payload;
}

std::string census_csv(const json& j) {
  std::ostringstream out;
  out << "n_points,n_triangles,key_kind,n_classes,Q,sum_m_sq,cs_lower_bound_num,cs_lower_bound_den\n";
  out << j["n_points"] << "," << j["n_triangles"] << "," << j["key_kind"].get<std::string>() << ","
      << j["n_classes"] << "," << j["Q"] << "," << j["sum_m_sq"] << ","
      << j["cs_lower_bound_num"].get<std::string>() << ","
      << j["cs_lower_bound_den"].get<std::string>() << "\n";
  return out.str();
}

int run(int argc, char** argv) {
  CLI::App app{"Exact census of triangle congruence/similarity classes and of the rigid-motion "
               "(R^3) and conformal (C^2) line lifts of a planar point set"};
  app.require_subcommand(1);
  app.fallthrough();  // global options (e.g. --threads) may follow the subcommand

  unsigned threads = default_thread_count();
  app.add_option("--threads", threads, "worker threads for census/arrangement")
      ->capture_default_str();

  // generate
  auto* gen = app.add_subcommand("generate", "emit a point set in the text format");
  InputSpec gen_in;
  gen_in.attach(gen);
  std::string gen_mirror_of;
  gen->add_option("--mirror-of", gen_mirror_of, "reflect the points of FILE across --line");
  std::string gen_line;
  gen->add_option("--line", gen_line,
                  "mirror line as `a b c` (ax + by + c = 0); default: vertical right of the box");
  std::string gen_out;
  gen->add_option("--out", gen_out, "output path (default stdout)");

  // census
  auto* cen = app.add_subcommand("census", "class census, pair counts, Cauchy-Schwarz bound");
  InputSpec cen_in;
  cen_in.attach(cen);
  std::string cen_kind = "congruence-full";
  cen->add_option("--kind", cen_kind,
                  "congruence-full | congruence-direct | similarity-direct | similarity-full")
      ->capture_default_str();
  bool cen_degenerate = false;
  cen->add_flag("--include-degenerate", cen_degenerate, "key collinear triples too");
  bool cen_reflections = false;
  cen->add_flag("--reflections", cen_reflections,
                "use the reflective (full) reading of the chosen key kind");
  bool cen_strict = false;
  cen->add_flag("--strict", cen_strict, "fail (exit 1) when a line carries more than N/2 points");
  std::string cen_out, cen_format = "json";
  cen->add_option("--out", cen_out, "output path (default stdout)");
  cen->add_option("--format", cen_format, "json | csv")->capture_default_str();

  // arrangement
  auto* arr = app.add_subcommand("arrangement",
                                 "rich-point histogram, dyadic buckets, and audits of a lift");
  InputSpec arr_in;
  arr_in.attach(arr);
  std::string arr_lift = "motion";
  arr->add_option("--lift", arr_lift, "motion | conformal")->capture_default_str();
  bool arr_identity_lines = true;
  arr->add_flag("--include-identity-lines,!--exclude-identity-lines", arr_identity_lines,
                "keep the N vertical lines L_pp in the motion family (default on)");
  bool arr_reflections = false;
  arr->add_flag("--reflections", arr_reflections,
                "conformal reflection variant: conjugate sources before lifting");
  std::size_t arr_max_n = 60;
  arr->add_option("--max-n", arr_max_n, "largest point count the O(L^2) path accepts")
      ->capture_default_str();
  std::size_t arr_k0 = 3;
  arr->add_option("--k0", arr_k0, "dyadic bucket threshold")->capture_default_str();
  std::string arr_out, arr_json;
  arr->add_option("--out", arr_out, "histogram CSV path (default stdout)");
  arr->add_option("--json", arr_json, "summary JSON path (default stdout)");

  // oracle-check
  auto* orc = app.add_subcommand(
      "oracle-check", "brute-force verification: key partitions, lift triple counts, audits");
  InputSpec orc_in;
  orc_in.attach(orc);
  std::size_t orc_cap = 10;
  orc->add_option("--cap", orc_cap, "largest point count the O(N^6) oracle accepts")
      ->capture_default_str();
  std::string orc_out;
  orc->add_option("--out", orc_out, "output path (default stdout)");

  // sweep
  auto* swp = app.add_subcommand("sweep", "grid censuses over a range of sides m");
  std::size_t swp_from = 4, swp_to = 12, swp_step = 2;
  swp->add_option("--m-from", swp_from, "first grid side")->capture_default_str();
  swp->add_option("--m-to", swp_to, "last grid side")->capture_default_str();
  swp->add_option("--m-step", swp_step, "grid side step")->capture_default_str();
  std::string swp_kind = "congruence-full";
  swp->add_option("--kind", swp_kind, "key kind")->capture_default_str();
  std::string swp_out;
  swp->add_option("--out", swp_out, "CSV path (default stdout)");

  // report
  auto* rep = app.add_subcommand("report", "bundle: all four censuses plus available audits");
  InputSpec rep_in;
  rep_in.attach(rep);
  std::size_t rep_oracle_cap = 10, rep_arr_cap = 60;
  rep->add_option("--oracle-cap", rep_oracle_cap, "run oracle checks up to this N")
      ->capture_default_str();
  rep->add_option("--arrangement-cap", rep_arr_cap, "run arrangements up to this N")
      ->capture_default_str();
  std::string rep_out;
  rep->add_option("--out", rep_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints the message / help text
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (gen->parsed()) {
    PointSet ps = [&] {
      if (!gen_mirror_of.empty()) {
        GenSpec spec;
        spec.kind = GenSpec::Kind::mirror_of;
        spec.base = read_point_set_file(gen_mirror_of);
        if (!gen_line.empty()) {
          std::istringstream ls(gen_line);
          std::string a, b, c;
          if (!(ls >> a >> b >> c)) throw UsageError("--line expects `a b c`");
          spec.mirror_line = RatLine{Rat::parse(a), Rat::parse(b), Rat::parse(c)};
        }
        return make_point_set(spec);
      }
      return gen_in.load();
    }();
    std::ostringstream out;
    write_point_set(out, ps);
    write_text(gen_out, out.str());
    return kExitOk;
  }

  if (cen->parsed()) {
    PointSet ps = cen_in.load();
    CensusOptions opts;
    opts.include_degenerate = cen_degenerate;
    opts.threads = threads;
    opts.strict_hypothesis = cen_strict;
    KeyKind kind = key_kind_from_string(cen_kind);
    if (cen_reflections) {
      if (kind == KeyKind::congruence_direct) kind = KeyKind::congruence_full;
      if (kind == KeyKind::similarity_direct) kind = KeyKind::similarity_full;
    }
    ClassCensus c;
    try {
      c = census(ps, kind, opts);
    } catch (const HypothesisViolation& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitAuditFailure;
    }
    const json j = census_report(c);
    write_text(cen_out, cen_format == "csv" ? census_csv(j) : dump_report(j));
    if (!c.hypothesis_ok)
      std::cerr << "warning: " << c.max_on_line << " points on one line exceed N/2 = "
                << c.n_points << "/2; Theorem-level guarantees lapse, counts remain exact\n";
    return kExitOk;
  }

  if (arr->parsed()) {
    PointSet ps = arr_in.load();
    if (ps.size() > arr_max_n)
      throw UsageError("arrangement: N = " + std::to_string(ps.size()) + " exceeds --max-n = " +
                       std::to_string(arr_max_n) + " (O(N^4) line pairs)");
    RichPointHistogram h;
    BoundRegime regime;
    if (arr_lift == "motion") {
      regime = BoundRegime::guth_katz;
      h = rich_points(motion_lines(ps, arr_identity_lines), threads);
    } else if (arr_lift == "conformal") {
      regime = BoundRegime::szemeredi_trotter;
      h = rich_points(conformal_lines(ps, arr_reflections), threads);
    } else {
      throw UsageError("--lift must be `motion` or `conformal`");
    }
    json j = arrangement_report(h, ps.size(), regime, arr_k0);
    if (arr_lift == "motion" && ps.size() <= 12) {
      const CoplanarityAudit cop =
          coplanarity_audit(motion_lines(ps, arr_identity_lines), ps.size());
      j["coplanarity_audit"] = {
          {"ok", cop.ok}, {"max_lines_in_plane", cop.max_lines_in_plane}, {"limit", cop.limit}};
    }
    std::ostringstream csv;
    write_histogram_csv(csv, h, ps.size(), regime, arr_k0);
    write_text(arr_out, csv.str());
    write_text(arr_json, dump_report(j));
    const bool ok = j["concurrency_audit"]["ok"].get<bool>() &&
                    (!j.contains("coplanarity_audit") || j["coplanarity_audit"]["ok"].get<bool>());
    return ok ? kExitOk : kExitAuditFailure;
  }

  if (orc->parsed()) {
    PointSet ps = orc_in.load();
    if (ps.size() > orc_cap)
      throw UsageError("oracle-check: N = " + std::to_string(ps.size()) + " exceeds --cap = " +
                       std::to_string(orc_cap));
    json j;
    j["n_points"] = ps.size();
    bool all_ok = true;
    for (KeyKind kind : all_key_kinds()) {
      const EquivalenceCheck check = census_equivalence_check(ps, kind, orc_cap);
      all_ok = all_ok && check.ok;
      j["key_partitions"][std::string(to_string(kind))] = equivalence_json(check);
    }
    const LiftEquivalence motion = motion_lift_equivalence(ps, threads);
    const LiftEquivalence conformal = similitude_lift_equivalence(ps, threads);
    const AZeroAudit a0 = a_zero_audit(ps);
    const HalvingIdentity halving = halving_identity(ps);
    const ConcurrencyAudit motion_audit = concurrency_audit(motion.histogram, ps.size());
    const ConcurrencyAudit conformal_audit = concurrency_audit(conformal.histogram, ps.size());
    j["motion_lift"] = lift_equivalence_json(motion);
    j["conformal_lift"] = lift_equivalence_json(conformal);
    j["a_zero_audit"] = a_zero_json(a0);
    j["halving_identity"] = halving_json(halving);
    j["motion_concurrency"] = {{"ok", motion_audit.ok},
                               {"max_multiplicity", motion_audit.max_multiplicity},
                               {"limit", motion_audit.limit}};
    j["conformal_concurrency"] = {{"ok", conformal_audit.ok},
                                  {"max_multiplicity", conformal_audit.max_multiplicity},
                                  {"limit", conformal_audit.limit}};
    all_ok = all_ok && motion.ok && conformal.ok && a0.ok && halving.ok && motion_audit.ok &&
             conformal_audit.ok;
    j["ok"] = all_ok;
    write_text(orc_out, dump_report(j));
    return all_ok ? kExitOk : kExitAuditFailure;
  }

  if (swp->parsed()) {
    if (swp_from < 2 || swp_to < swp_from || swp_step == 0)
      throw UsageError("sweep: need 2 <= m-from <= m-to and m-step >= 1");
    const KeyKind kind = key_kind_from_string(swp_kind);
    std::ostringstream out;
    out << "m,n_points,n_triangles,n_classes,classes_per_n2,classes_log_n_per_n2,q,sum_m_sq,"
           "cs_lower_bound\n";
    for (std::size_t m = swp_from; m <= swp_to; m += swp_step) {
      CensusOptions opts;
      opts.threads = threads;
      const ClassCensus c = census(grid(m), kind, opts);
      const PairCounts pc = pair_counts(c);
      const double n2 = static_cast<double>(c.n_points) * static_cast<double>(c.n_points);
      out << m << "," << c.n_points << "," << c.n_triangles << "," << c.n_classes() << ","
          << static_cast<double>(c.n_classes()) / n2 << ","
          << static_cast<double>(c.n_classes()) * std::log(static_cast<double>(c.n_points)) / n2
          << "," << pc.pairs_same_class << "," << pc.sum_m_sq << ","
          << class_lower_bound(c).to_string() << "\n";
    }
    write_text(swp_out, out.str());
    return kExitOk;
  }

  if (rep->parsed()) {
    PointSet ps = rep_in.load();
    json j;
    j["n_points"] = ps.size();
    const HypothesisReport hyp = validate_hypothesis(ps);
    j["hypothesis"] = {{"ok", hyp.ok}, {"max_on_line", hyp.max_on_line}};
    if (hyp.witness)
      j["hypothesis"]["witness"] = {hyp.witness->a.to_string(), hyp.witness->b.to_string()};
    CensusOptions opts;
    opts.threads = threads;
    for (KeyKind kind : all_key_kinds())
      j["census"][std::string(to_string(kind))] = census_report(census(ps, kind, opts));
    bool all_ok = true;
    if (ps.size() <= rep_arr_cap) {
      const RichPointHistogram hm = rich_points(motion_lines(ps), threads);
      const RichPointHistogram hc = rich_points(conformal_lines(ps), threads);
      j["arrangement"]["motion"] = arrangement_report(hm, ps.size(), BoundRegime::guth_katz, 3);
      j["arrangement"]["conformal"] =
          arrangement_report(hc, ps.size(), BoundRegime::szemeredi_trotter, 3);
      all_ok = all_ok && concurrency_audit(hm, ps.size()).ok && concurrency_audit(hc, ps.size()).ok;
    }
    if (ps.size() <= rep_oracle_cap) {
      for (KeyKind kind : all_key_kinds()) {
        const EquivalenceCheck check = census_equivalence_check(ps, kind, rep_oracle_cap);
        all_ok = all_ok && check.ok;
        j["key_partitions"][std::string(to_string(kind))] = equivalence_json(check);
      }
      const LiftEquivalence motion = motion_lift_equivalence(ps, threads);
      const LiftEquivalence conformal = similitude_lift_equivalence(ps, threads);
      j["motion_lift"] = lift_equivalence_json(motion);
      j["conformal_lift"] = lift_equivalence_json(conformal);
      all_ok = all_ok && motion.ok && conformal.ok;
    }
    j["ok"] = all_ok;
    write_text(rep_out, dump_report(j));
    return all_ok ? kExitOk : kExitAuditFailure;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "internal invariant failure: " << e.what() << "\n";
    return kExitAuditFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
