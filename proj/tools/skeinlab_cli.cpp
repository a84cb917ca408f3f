#include <atomic>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "skeinlab/bt_algebra.hpp"
#include "skeinlab/classical.hpp"
#include "skeinlab/diagram.hpp"
#include "skeinlab/poly_io.hpp"
#include "skeinlab/table.hpp"
#include "skeinlab/theta.hpp"

using json = nlohmann::ordered_json;
using namespace skeinlab;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitCap = 3;
constexpr int kExitMissing = 4;

json poly_terms(const LaurentPoly& p) {
  json arr = json::array();
  for (const auto& [m, c] : p.terms()) {
    json mono = json::object();
    for (int i = 0; i < kNumVars; ++i)
      if (m.exp[i] != 0) mono[kVarNames[i]] = m.exp[i];
    arr.push_back({{"monomial", mono}, {"coeff", c.get_str()}});
  }
  return arr;
}

json value_json(const std::string& input, const std::string& invariant,
                const std::string& normalization, const LaurentFraction& f) {
  json out;
  out["input"] = input;
  out["invariant"] = invariant;
  json vars = json::array();
  for (int i = 0; i < kNumVars; ++i) {
    bool used = false;
    for (const auto& [m, c] : f.num().terms())
      if (m.exp[i] != 0) used = true;
    for (const auto& [m, c] : f.den().terms())
      if (m.exp[i] != 0) used = true;
    if (used) vars.push_back(kVarNames[i]);
  }
  out["variables"] = vars;
  out["normalization"] = normalization;
  out["polynomial"] = poly_terms(f.num());
  if (!f.is_poly()) out["denominator"] = poly_terms(f.den());
  out["text"] = to_string(f);
  return out;
}

std::string read_source(const std::string& arg) {
  std::ifstream in(arg);
  if (!in) return arg;  // not a file: treat as literal PD text
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct InvariantArgs {
  std::string pd, braid, invariant = "theta", route = "partition";
  std::string e_value, split_norm = "consistent";
  bool lambda_q4 = false;
  int cap = kDefaultCrossingCap;
};

int run_invariant(const InvariantArgs& a) {
  SplitNormalization norm = a.split_norm == "printed"
                                ? SplitNormalization::kPrinted
                                : SplitNormalization::kConsistent;
  LaurentFraction val;
  std::string input;
  if (!a.braid.empty()) {
    input = "braid " + a.braid;
    BraidWord w = parse_braid(a.braid, 2);
    if (a.invariant == "theta" && a.route == "trace") {
      val = theta_trace(w);
    } else {
      LinkDiagram L = braid_closure(w);
      if (a.invariant == "V")
        val = jones(L, JonesVar::q, a.cap);
      else if (a.invariant == "P")
        val = homflypt(L, a.cap);
      else if (a.invariant == "Theta")
        val = Theta_partition(L, a.cap);
      else
        val = a.route == "skein" ? theta_skein(L, norm, a.cap)
                                 : theta_partition(L, a.cap);
    }
  } else {
    std::string pd_text = read_source(a.pd);
    input = "pd " + a.pd;
    LinkDiagram L = parse_pd(pd_text);
    if (a.invariant == "V")
      val = jones(L, JonesVar::q, a.cap);
    else if (a.invariant == "P")
      val = homflypt(L, a.cap);
    else if (a.invariant == "Theta")
      val = Theta_partition(L, a.cap);
    else if (a.route == "trace")
      throw MalformedRecord("trace route needs --braid input");
    else
      val = a.route == "skein" ? theta_skein(L, norm, a.cap)
                               : theta_partition(L, a.cap);
  }
  if (a.lambda_q4) val = substitute(val, Var::s, parse_fraction("q^2"));
  if (!a.e_value.empty())
    val = substitute(val, Var::E, parse_fraction(a.e_value));
  json out = value_json(input, a.invariant, a.split_norm, val);
  std::printf("%s\n%s\n", to_string(val).c_str(), out.dump(2).c_str());
  return 0;
}

int report(bool ok, const std::string& label, const std::string& detail) {
  std::printf("%s  %s%s%s\n", ok ? "PASS" : "FAIL", label.c_str(),
              detail.empty() ? "" : ": ", detail.c_str());
  return ok ? 0 : kExitFail;
}

int reproduce_thistlethwaite(const std::vector<LinkTableEntry>& table) {
  const auto* tl = find_entry(table, "thistlethwaite");
  const auto* un2 = find_entry(table, "unlink2");
  const auto* k31 = find_entry(table, "trefoil_left");
  const auto* k41 = find_entry(table, "figure8");
  if (!tl || !un2 || !k31 || !k41)
    throw MissingData("thistlethwaite suite needs entries thistlethwaite, unlink2, trefoil_left, figure8");
  LinkDiagram L = parse_pd(tl->pd);
  LinkDiagram U = parse_pd(un2->pd);
  int rc = 0;

  LaurentFraction v = jones(L), vu = jones(U);
  rc |= report(v == parse_fraction("-q - q^-1") && v == vu,
               "V(thistlethwaite) = -q - q^-1 = V(unlink2)", to_string(v));

  LaurentFraction th = theta_partition(L);
  LaurentFraction v31 = jones(parse_pd(k31->pd));
  LaurentFraction v41 = jones(parse_pd(k41->pd));
  LaurentFraction expect =
      parse_fraction("(1 - E^-1) (q + q^-1)") * v31 * v41 + v;
  rc |= report(th == expect,
               "theta(thistlethwaite) = (1 - E^-1)(q + q^-1) V(3_1) V(4_1) + V",
               to_string(th));

  LaurentFraction thu = theta_partition(U);
  rc |= report(thu == parse_fraction("-(q + q^-1) E^-1") && !(th == thu),
               "theta(unlink2) = -(q + q^-1)/E and theta distinguishes the pair",
               "difference " + to_string(th - thu));

  rc |= report(substitute(th, Var::E, 1) == v,
               "theta collapses to V at E = 1", "");
  return rc;
}

int reproduce_algebra() {
  int rc = 0;
  auto basis = enumerate_basis(3);
  rc |= report(basis.size() == 30, "dim E_3(q) = 30",
               std::to_string(basis.size()) + " basis elements");
  PTLReport r = ptl_ideal_check();
  rc |= report(r.ideal_ok,
               "m * b_{1,2} = q^l(w) b_{1,2} for all 30 basis elements", "");
  rc |= report(r.rho_value == parse_fraction("((q^2+1) q z + E) (q z + E)"),
               "rho(b_{1,2}) = ((q^2+1)qz + E)(qz + E)", to_string(r.rho_value));
  rc |= report(!r.matches_printed_roots,
               "z-roots are -q^-1 E/(q^2+1) and -q^-1 E (second differs from "
               "the published -q^-1/E)",
               r.roots[0] + ", " + r.roots[1]);
  return rc;
}

int reproduce_pairs(const std::vector<LinkTableEntry>& table) {
  static const char* kPairs[][2] = {
      {"L11n358_0_1", "L11n418_0_0"}, {"L11a467_0_1", "L11a527_0_0"},
      {"L11n325_1_1", "L11n424_0_0"}, {"L10n79_1_1", "L10n95_1_0"},
      {"L11a404_1_1", "L11a428_0_1"}, {"L10n76_1_1", "L11n425_1_0"}};
  std::vector<std::string> missing;
  for (const auto& pr : kPairs)
    for (const char* name : pr)
      if (!find_entry(table, name)) missing.push_back(name);
  if (!missing.empty()) {
    std::string list;
    for (const auto& m : missing) list += (list.empty() ? "" : ", ") + m;
    throw MissingData("pairs suite: no bundled PD codes for " + list);
  }
  int rc = 0;
  for (const auto& pr : kPairs) {
    CompareReport r = compare(parse_pd(find_entry(table, pr[0])->pd),
                              parse_pd(find_entry(table, pr[1])->pd));
    rc |= report(r.v_equal && r.p_equal && !r.theta_equal,
                 std::string(pr[0]) + " vs " + pr[1],
                 "theta difference " + to_string(r.theta_diff));
  }
  return rc;
}

int run_reproduce(const std::string& suite) {
  auto table = load_bundled_table();
  int rc = 0;
  bool missing = false;
  auto run = [&](const std::string& name, auto&& fn) {
    if (suite != "all" && suite != name) return;
    try {
      rc |= fn();
    } catch (const MissingData& e) {
      std::printf("MISSING  %s: %s\n", name.c_str(), e.what());
      missing = true;
    }
  };
  run("pairs", [&] { return reproduce_pairs(table); });
  run("thistlethwaite", [&] { return reproduce_thistlethwaite(table); });
  run("algebra", [&] { return reproduce_algebra(); });
  if (missing && rc == 0) return kExitMissing;
  return rc;
}

struct Row {
  std::string status = "ok";
  std::map<std::string, LaurentFraction> values;
};

int run_table(const std::string& input, const std::string& output,
              const std::string& format, std::vector<std::string> invariants,
              const std::string& cache_path, int jobs) {
  std::vector<LinkTableEntry> entries;
  try {
    entries = load_table(input);
  } catch (const MissingData& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kExitMissing;
  }

  std::map<std::string, std::string> cache;
  if (!cache_path.empty()) {
    std::ifstream in(cache_path);
    std::string line;
    while (std::getline(in, line)) {
      size_t tab = line.find('\t');
      if (tab != std::string::npos)
        cache[line.substr(0, tab)] = line.substr(tab + 1);
    }
  }

  std::vector<Row> rows(entries.size());
  std::atomic<size_t> cursor{0};
  std::mutex cache_mu;
  auto worker = [&] {
    for (size_t i; (i = cursor.fetch_add(1)) < entries.size();) {
      Row& row = rows[i];
      LinkDiagram L;
      try {
        L = parse_pd(entries[i].pd);
      } catch (const std::exception&) {
        row.status = "parse-error";
        continue;
      }
      std::string key;
      {
        std::lock_guard<std::mutex> lk(cache_mu);
        key = canonical_key(L);
      }
      for (const auto& inv : invariants) {
        std::string ck = inv + " " + key;
        {
          std::lock_guard<std::mutex> lk(cache_mu);
          auto it = cache.find(ck);
          if (it != cache.end()) {
            row.values[inv] = parse_fraction(it->second);
            continue;
          }
        }
        try {
          LaurentFraction v;
          if (inv == "V")
            v = jones(L);
          else if (inv == "P")
            v = homflypt(L);
          else if (inv == "Theta")
            v = Theta_partition(L);
          else if (inv == "theta")
            v = theta_partition(L);
          else {
            row.status = "unknown-invariant";
            break;
          }
          row.values[inv] = v;
          std::lock_guard<std::mutex> lk(cache_mu);
          cache[ck] = to_string(v);
        } catch (const TooManyCrossings&) {
          row.status = "size-cap";
          break;
        }
      }
      if (row.status == "ok" && entries[i].expected_jones) {
        LaurentFraction want = parse_fraction(*entries[i].expected_jones);
        if (!(jones(L) == want)) row.status = "jones-mismatch";
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < std::max(1, jobs); ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::ofstream out(output);
  if (!out) {
    std::fprintf(stderr, "cannot write %s\n", output.c_str());
    return kExitFail;
  }
  if (format == "csv") {
    out << "name,status";
    for (const auto& inv : invariants) out << "," << inv;
    out << "\n";
    for (size_t i = 0; i < entries.size(); ++i) {
      out << entries[i].name << "," << rows[i].status;
      for (const auto& inv : invariants) {
        auto it = rows[i].values.find(inv);
        out << ",\"" << (it == rows[i].values.end() ? "" : to_string(it->second))
            << "\"";
      }
      out << "\n";
    }
  } else {
    json arr = json::array();
    for (size_t i = 0; i < entries.size(); ++i) {
      json rec;
      rec["name"] = entries[i].name;
      rec["status"] = rows[i].status;
      for (const auto& inv : invariants) {
        auto it = rows[i].values.find(inv);
        if (it != rows[i].values.end())
          rec[inv] = value_json(entries[i].name, inv, "consistent", it->second);
      }
      arr.push_back(rec);
    }
    out << arr.dump(2) << "\n";
  }

  if (!cache_path.empty()) {
    std::ofstream cf(cache_path);
    for (const auto& [k, v] : cache) cf << k << "\t" << v << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact link invariants: V, P, theta(q,E), Theta(q,lambda,E)"};
  app.require_subcommand(1);

  InvariantArgs ia;
  auto* inv = app.add_subcommand("invariant", "compute one invariant of one link");
  inv->add_option("--pd", ia.pd, "PD file or literal PD text");
  inv->add_option("--braid", ia.braid, "braid word, e.g. \"s1 s1\"");
  inv->add_option("--invariant", ia.invariant)
      ->check(CLI::IsMember({"V", "P", "theta", "Theta"}));
  inv->add_option("--route", ia.route)
      ->check(CLI::IsMember({"partition", "skein", "trace"}));
  inv->add_option("--e-value", ia.e_value, "substitute E by this rational");
  inv->add_flag("--lambda-q4", ia.lambda_q4, "substitute s = q^2 (lambda = q^4)");
  inv->add_option("--split-normalization", ia.split_norm)
      ->check(CLI::IsMember({"consistent", "printed"}));
  inv->add_option("--cap", ia.cap, "crossing cap for skein descent");

  std::string suite;
  auto* rep = app.add_subcommand("reproduce", "re-run the published computations");
  rep->add_option("suite", suite)
      ->required()
      ->check(CLI::IsMember({"pairs", "thistlethwaite", "algebra", "all"}));

  std::string t_in, t_out, t_fmt = "csv", t_cache;
  std::vector<std::string> t_invs = {"V", "theta"};
  int t_jobs = 4;
  auto* tab = app.add_subcommand("table", "batch invariants over a link table");
  tab->add_option("--input", t_in)->required();
  tab->add_option("--output", t_out)->required();
  tab->add_option("--format", t_fmt)->check(CLI::IsMember({"json", "csv"}));
  tab->add_option("--invariants", t_invs)->delimiter(',');
  tab->add_option("--cache", t_cache, "canonical-key cache file");
  tab->add_option("--jobs", t_jobs);

  CLI11_PARSE(app, argc, argv);

  try {
    if (inv->parsed()) {
      if (ia.pd.empty() == ia.braid.empty()) {
        std::fprintf(stderr, "exactly one of --pd / --braid is required\n");
        return kExitParse;
      }
      return run_invariant(ia);
    }
    if (rep->parsed()) return run_reproduce(suite);
    return run_table(t_in, t_out, t_fmt, t_invs, t_cache, t_jobs);
  } catch (const MissingData& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kExitMissing;
  } catch (const TooManyCrossings& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kExitCap;
  } catch (const SizeCap& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kExitCap;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kExitParse;
  }
}
