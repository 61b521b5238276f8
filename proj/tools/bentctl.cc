// bentctl: construct and analyze bent functions from the command line.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bent/construct.h"
#include "bent/decomp.h"
#include "bent/derivative.h"
#include "bent/errors.h"
#include "bent/io.h"
#include "bent/parallel.h"
#include "bent/rng.h"
#include "bent/verify/suite.h"

namespace {

using namespace bent;
using nlohmann::json;

enum Exit { kOk = 0, kVerifyFailed = 1, kParameter = 2, kParse = 3, kResource = 4 };

struct Global {
  int threads = 0;
  std::uint64_t seed = 0;
  bool json = false;
};

struct ConstructArgs {
  std::string family;
  int m = 0;
  int k = 0;
  std::uint64_t e = 0;
  int n = 2;
  int kprime = 1;
  std::string p = "trace";
  std::string q = "id";
  std::string pi = "inverse";
  std::string form = "f";
  bool c0 = false;
  Elem alpha = 1, beta = 1, gamma = 1;
  std::string out;
};

std::uint64_t parse_u64(const std::string& s) {
  std::size_t pos = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(s, &pos, 0);
  } catch (const std::exception&) {
    throw ParameterError("not a number: " + s);
  }
  if (pos != s.size()) throw ParameterError("not a number: " + s);
  return v;
}

// id | inverse | power:E | <file>
PermTable load_perm(const Field& f, const std::string& spec) {
  if (spec == "id") return identity_perm(f);
  if (spec == "inverse") return power_perm(f, f.size() - 2);
  if (spec.rfind("power:", 0) == 0) return power_perm(f, parse_u64(spec.substr(6)));
  std::ifstream in(spec);
  if (!in) throw ParameterError("cannot open " + spec);
  PermTable p = read_perm(in);
  if (p.m != f.m()) throw ParameterError("permutation is over GF(2^" + std::to_string(p.m) + ")");
  return make_perm(f, std::move(p.table));
}

// trace | inverse-trace | id | <file>
SubfieldFn load_subfield_fn(const Field& f, int k, const std::string& spec) {
  const Subfield s(f, k);
  if (spec == "trace") return subfield_trace_fn(s);
  if (spec == "inverse-trace") return subfield_inverse_trace_fn(s);
  if (spec == "id") return subfield_identity(s);
  std::ifstream in(spec);
  if (!in) throw ParameterError("cannot open " + spec);
  SubfieldFn p = read_subfield_fn(in);
  if (p.m != f.m() || p.k != k) throw ParameterError("function file has the wrong m or k");
  return p;
}

BoolFn quadratic_bent(int n, Xorshift64Star& rng) {
  if (n % 2 != 0) throw ParameterError("gmm family needs even n");
  const BoolFn base = BoolFn::from(n, [&](std::uint64_t x) {
    int v = 0;
    for (int i = 0; i < n; i += 2) v ^= static_cast<int>((x >> i) & (x >> (i + 1)) & 1);
    return v != 0;
  });
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  const LinearMap l = LinearMap::random_invertible(n, rng);
  return ea_transform(base, l, rng.next() & mask, rng.next() & mask, (rng.next() & 1) != 0);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

BoolFn build(const ConstructArgs& a, std::uint64_t seed) {
  const std::string& fam = a.family;
  if (fam == "mm") {
    require(a.m >= 1, "--m required");
    const Field f = Field::make(a.m);
    return mm(f, load_perm(f, a.pi));
  }
  if (fam == "gmm") {
    require(a.k >= 1, "--k required");
    const Field fk = Field::make(a.k);
    Xorshift64Star rng(seed);
    std::vector<BoolFn> family;
    for (std::uint32_t z = 0; z < fk.size(); ++z) family.push_back(quadratic_bent(a.n, rng));
    return gmm(fk, family);
  }
  if (fam == "psap") {
    require(a.m >= 1, "--m required");
    const Field f = Field::make(a.m);
    return psap(f, load_subfield_fn(f, a.m, a.p));
  }
  if (fam == "gpsap" || fam == "gpsap-trace" || fam == "partition") {
    require(a.m >= 1 && a.k >= 1 && a.e >= 1, "--m, --k and --e required");
    const Field f = Field::make(a.m);
    const GpsParams params = validate_gps_params(a.m, a.k, a.e);
    if (fam == "gpsap") {
      require(a.form == "f" || a.form == "g", "--form must be f or g");
      return gpsap(f, params, load_subfield_fn(f, a.k, a.p), a.c0, a.form == "f" ? GpsForm::kF : GpsForm::kG);
    }
    if (fam == "gpsap-trace") return gpsap_trace_form(f, params, load_perm(f, a.q));
    return partition_bent(f, params, default_partition_assignment(a.k));
  }
  if (fam == "cor-ex1") return build_cor_ex(a.m, a.k, {CorExVariant::kInverse, 1});
  if (fam == "cor-ex2") return build_cor_ex(a.m, a.k, {CorExVariant::kGold, a.kprime});
  if (fam == "psffff") {
    require(a.m >= 1 && a.k >= 1, "--m and --k required");
    const Field f = Field::make(a.m);
    return psffff(f, a.k, load_subfield_fn(f, a.k, a.p == "trace" ? "id" : a.p), a.alpha, a.beta, a.gamma);
  }
  throw ParameterError("unknown family " + fam);
}

json summary(const BoolFn& f) {
  const auto w = walsh_transform(f);
  json j;
  j["n"] = f.n();
  j["weight"] = f.weight();
  j["degree"] = anf_degree(f);
  j["balanced"] = is_balanced(f);
  j["bent"] = is_bent_spectrum(w, f.n());
  const auto s = plateaued_order_spectrum(w, f.n());
  j["plateaued"] = s ? json(*s) : json(nullptr);
  return j;
}

void print_kv(const json& j) {
  for (const auto& [k, v] : j.items()) {
    if (v.is_object()) {
      std::cout << k << ":";
      for (const auto& [a, b] : v.items()) std::cout << " " << a << "x" << b;
      std::cout << "\n";
    } else if (v.is_string()) {
      std::cout << k << ": " << v.get<std::string>() << "\n";
    } else {
      std::cout << k << ": " << v.dump() << "\n";
    }
  }
}

void emit(const Global& g, const json& j) {
  if (g.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    print_kv(j);
  }
}

int cmd_construct(const Global& g, const ConstructArgs& a) {
  const BoolFn f = build(a, g.seed);
  if (!a.out.empty()) save_truth_table(a.out, f);
  json j;
  j["family"] = a.family;
  j.update(summary(f));
  j.erase("balanced");
  j.erase("plateaued");
  if (!a.out.empty()) j["out"] = a.out;
  emit(g, j);
  return kOk;
}

int cmd_analyze(const Global& g, const std::string& path, const std::string& dual_out,
                const std::string& spectrum_out) {
  const BoolFn f = load_truth_table(path);
  json j = summary(f);
  json hist = json::object();
  for (const auto& [amp, cnt] : ext_walsh_spectrum(f)) hist[std::to_string(amp)] = cnt;
  j["spectrum"] = hist;
  if (j["bent"].get<bool>() && !dual_out.empty()) {
    save_truth_table(dual_out, dual(f));
    j["dual"] = dual_out;
  }
  if (!spectrum_out.empty()) {
    std::ofstream os(spectrum_out);
    if (!os) throw ParameterError("cannot write " + spectrum_out);
    write_spectrum_csv(os, walsh_transform(f));
  }
  emit(g, j);
  return kOk;
}

std::string hex(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << v;
  return os.str();
}

int cmd_msubspace(const Global& g, const std::string& path, std::optional<int> max_dim, bool find_all) {
  const BoolFn f = load_truth_table(path);
  const int index = linearity_index(f, max_dim);
  json j;
  j["n"] = f.n();
  j["linearity_index"] = index;
  if (max_dim) j["capped_at"] = *max_dim;
  if (index > 0) {
    const auto subs = enumerate_m_subspaces(f, index);
    j["count"] = subs.size();
    json list = json::array();
    for (std::size_t i = 0; i < subs.size() && (find_all || i == 0); ++i) {
      json basis = json::array();
      for (std::uint64_t b : subs[i].basis()) basis.push_back(hex(b));
      list.push_back(basis);
    }
    j["subspaces"] = list;
  }
  if (g.json) {
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  std::cout << "n: " << f.n() << "\nlinearity_index: " << index << "\n";
  if (max_dim) std::cout << "capped_at: " << *max_dim << "\n";
  if (j.contains("count")) std::cout << "count: " << j["count"].get<std::size_t>() << "\n";
  if (j.contains("subspaces")) {
    for (const auto& basis : j["subspaces"]) {
      std::cout << "subspace:";
      for (const auto& b : basis) std::cout << " " << b.get<std::string>();
      std::cout << "\n";
    }
  }
  return kOk;
}

int cmd_decompose(const Global& g, const std::string& path, const std::string& u, const std::string& v,
                  bool scan, const ScanOptions& opts, const std::string& csv) {
  const BoolFn f = load_truth_table(path);
  if (scan) {
    const ScanSummary s = scan_decompositions(f, opts);
    if (!csv.empty()) {
      std::ofstream os(csv);
      if (!os) throw ParameterError("cannot write " + csv);
      write_scan_csv(os, s);
    }
    json j{{"n", s.n}, {"planes", s.planes}, {"all_bent", s.all_bent}, {"all_semibent", s.all_semibent},
           {"mixed", s.mixed}};
    if (csv.empty() && !g.json) {
      write_scan_csv(std::cout, s);
    } else {
      emit(g, j);
    }
    return kOk;
  }
  if (u.empty() || v.empty()) throw ParameterError("--u and --v, or --scan, required");
  const DecompositionReport r = classify_decomposition(f, parse_u64("0x" + u), parse_u64("0x" + v));
  if (g.json) {
    std::cout << report_json(r) << "\n";
  } else {
    write_report(std::cout, r);
  }
  return kOk;
}

int cmd_verify(const Global& g, const std::string& level, const std::vector<int>& only) {
  verify::SuiteOptions opts;
  opts.level = level == "full" ? verify::Level::kFull : verify::Level::kFast;
  opts.seed = g.seed;
  opts.only = only;
  const auto results = verify::run_suite(opts, [&](const verify::CriterionResult& r) {
    if (!g.json) std::cout << verify::format_result(r) << std::endl;
  });
  if (g.json) std::cout << verify::results_json(results) << "\n";
  for (const auto& r : results) {
    if (!r.pass) return kVerifyFailed;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct and analyze bent functions"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--threads", g.threads, "Worker threads (default $BENT_THREADS, then all cores)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for randomized choices");
  app.add_flag("--json", g.json, "Machine-readable output");

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a bent function and write its truth table");
  construct->add_option("--family", ca.family)
      ->required()
      ->check(CLI::IsMember({"mm", "gmm", "psap", "gpsap", "gpsap-trace", "cor-ex1", "cor-ex2", "psffff",
                             "partition"}));
  construct->add_option("--m", ca.m);
  construct->add_option("--k", ca.k);
  construct->add_option("--e", ca.e);
  construct->add_option("--n", ca.n, "gmm: variables of each family member");
  construct->add_option("--kprime", ca.kprime, "cor-ex2: Gold exponent 2^k'+1");
  construct->add_option("--P", ca.p, "trace | inverse-trace | id | file");
  construct->add_option("--Q", ca.q, "gpsap-trace: id | inverse | power:E | file");
  construct->add_option("--pi", ca.pi, "mm: id | inverse | power:E | file");
  construct->add_option("--form", ca.form, "gpsap: f or g");
  construct->add_flag("--c0", ca.c0);
  construct->add_option("--alpha", ca.alpha);
  construct->add_option("--beta", ca.beta);
  construct->add_option("--gamma", ca.gamma);
  construct->add_option("--out,-o", ca.out, "Truth-table output file");

  std::string path, dual_out, spectrum_out;
  auto* analyze = app.add_subcommand("analyze", "Degree, balancedness, spectrum and dual of a function");
  analyze->add_option("file", path)->required()->check(CLI::ExistingFile);
  analyze->add_option("--dual-out", dual_out, "Write the dual here when bent");
  analyze->add_option("--spectrum-out", spectrum_out, "Write the Walsh spectrum as CSV");

  std::optional<int> max_dim;
  bool find_all = false;
  auto* msub = app.add_subcommand("msubspace", "Linearity index and M-subspaces");
  msub->add_option("file", path)->required()->check(CLI::ExistingFile);
  msub->add_option("--max-dim", max_dim)->check(CLI::NonNegativeNumber);
  msub->add_flag("--find-all", find_all, "List every M-subspace of maximal dimension");

  std::string u, v, csv;
  bool scan = false;
  ScanOptions sopts;
  auto* decompose = app.add_subcommand("decompose", "Restrictions to the cosets of <u,v>^perp");
  decompose->add_option("file", path)->required()->check(CLI::ExistingFile);
  decompose->add_option("--u", u, "hex");
  decompose->add_option("--v", v, "hex");
  decompose->add_flag("--scan", scan, "Classify every 2-dimensional span");
  decompose->add_flag("--allow-large", sopts.allow_large, "Scan beyond n = 12");
  decompose->add_flag("--keep-mixed", sopts.keep_mixed, "List Mixed planes in the CSV");
  decompose->add_option("--csv", csv, "Scan CSV output file");

  std::string suite = "paper", level = "fast";
  std::vector<int> only;
  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
  verify->add_option("--suite", suite)->check(CLI::IsMember({"paper"}));
  verify->add_option("--level", level)->check(CLI::IsMember({"fast", "full"}));
  verify->add_option("--only", only, "Criterion ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParameter;
  }

  try {
    if (g.threads > 0) set_thread_count(g.threads);
    if (*construct) return cmd_construct(g, ca);
    if (*analyze) return cmd_analyze(g, path, dual_out, spectrum_out);
    if (*msub) return cmd_msubspace(g, path, max_dim, find_all);
    if (*decompose) return cmd_decompose(g, path, u, v, scan, sopts, csv);
    if (*verify) return cmd_verify(g, level, only);
  } catch (const ParseError& e) {
    std::cerr << "bentctl: parse error: " << e.what() << "\n";
    return kParse;
  } catch (const ResourceError& e) {
    std::cerr << "bentctl: " << e.what() << "\n";
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "bentctl: " << e.what() << "\n";
    return kParameter;
  }
  return kOk;
}
