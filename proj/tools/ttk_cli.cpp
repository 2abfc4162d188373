// ttk: command-line front end for the twisted torus knot library.
//
// Exit codes: 0 success, 1 domain or verification failure, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ttk/ttk.hpp"

namespace {

using namespace ttk;
using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Integer parse_integer(const std::string& text, const std::string& name) {
  Integer out;
  if (text.empty() || out.set_str(text, 10) != 0) throw UsageError(name + " expects an integer, got '" + text + "'");
  return out;
}

ordered_json poly_json(const LaurentPolynomial& p) { return p.to_json(); }

struct Globals {
  std::optional<std::size_t> budget;
  int strand_limit = kDefaultStrandLimit;

  // Flag first, then TTK_BUDGET, then the default.
  InvariantLimits limits() const {
    InvariantLimits out;
    out.strand_limit = strand_limit;
    if (budget) {
      out.crossing_budget = *budget;
    } else if (const char* env = std::getenv("TTK_BUDGET")) {
      try {
        std::size_t used = 0;
        const long v = std::stol(env, &used);
        if (used != std::string(env).size() || v < 1) throw std::invalid_argument(env);
        out.crossing_budget = static_cast<std::size_t>(v);
      } catch (const std::logic_error&) {
        throw UsageError(std::string("TTK_BUDGET must be a positive integer, got '") + env + "'");
      }
    }
    return out;
  }
};

// ---- horadam ----

struct HoradamArgs {
  std::string m, n, a = "1", b = "1";
  std::size_t k = 0;
  std::size_t kmax = 5;
};

void add_seed_options(CLI::App* cmd, HoradamArgs& args) {
  cmd->add_option("-m", args.m, "first seed H_0")->required();
  cmd->add_option("-n", args.n, "second seed H_1")->required();
}

void setup_horadam(CLI::App& app, HoradamArgs& args) {
  auto* h = app.add_subcommand("horadam", "Horadam sequences, slopes, Euclidean traces, maximal pairs");
  h->require_subcommand(1);

  auto* term = h->add_subcommand("term", "print H_k of the (m, n; a, b) sequence");
  add_seed_options(term, args);
  term->add_option("-k", args.k, "index")->required();
  term->add_option("-a", args.a, "coefficient of H_{k-2} (default 1)");
  term->add_option("-b", args.b, "coefficient of H_{k-1} (default 1)");
  term->callback([&] {
    HoradamSpec spec{parse_integer(args.m, "-m"), parse_integer(args.n, "-n"), parse_integer(args.a, "-a"),
                     parse_integer(args.b, "-b")};
    std::cout << horadam_term(spec, args.k).get_str() << "\n";
  });

  auto* slopes = h->add_subcommand("slopes", "print s_k and t_k for 1 <= k <= kmax");
  add_seed_options(slopes, args);
  slopes->add_option("--kmax", args.kmax, "largest index (default 5)");
  slopes->callback([&] {
    const auto spec = unit_horadam(parse_integer(args.m, "-m"), parse_integer(args.n, "-n"));
    for (std::size_t k = 1; k <= args.kmax; ++k)
      std::cout << "k=" << k << " s=" << slope_s(spec, k).get_str() << " t=" << slope_t(spec, k).get_str() << "\n";
  });

  auto* euclid = h->add_subcommand("euclid", "division chain of n by m, stopped at remainder 1");
  add_seed_options(euclid, args);
  euclid->callback([&] {
    const auto trace = euclid_trace(parse_integer(args.m, "-m"), parse_integer(args.n, "-n"));
    std::cout << "quotients:";
    for (const auto& q : trace.quotients) std::cout << " " << q.get_str();
    std::cout << "\nremainders:";
    for (const auto& r : trace.remainders) std::cout << " " << r.get_str();
    std::cout << "\n";
  });

  auto* maximal = h->add_subcommand("maximal", "is (m, n) a maximal pair");
  add_seed_options(maximal, args);
  maximal->callback([&] {
    const auto trace = euclid_trace(parse_integer(args.m, "-m"), parse_integer(args.n, "-n"));
    std::cout << (is_maximal_pair(trace) ? "true" : "false") << " (q0=" << trace.final_quotient().get_str() << ")\n";
  });

  auto* embed = h->add_subcommand("embed", "embed (m, n) as consecutive terms of a (+-1, a) sequence");
  add_seed_options(embed, args);
  embed->callback([&] {
    const auto e = embed_in_unit_sequence(parse_integer(args.m, "-m"), parse_integer(args.n, "-n"));
    if (!e) {
      std::cout << "none (not a maximal pair)\n";
      return;
    }
    std::cout << "sign=" << (e->sign > 0 ? "+1" : "-1") << " a=" << e->a.get_str() << " start=" << e->start_index << "\n";
  });
}

// ---- braid / invariant ----

struct KnotArgs {
  long p = 0, q = 0, r = 0, n = 1, m = 1;
  std::vector<long> torus;
  std::string word;
  bool jones = false;
  std::string method = "tl";
  std::string format = "text";
};

void add_knot_options(CLI::App* cmd, KnotArgs& args) {
  cmd->add_option("-p", args.p, "torus strands p");
  cmd->add_option("-q", args.q, "torus parameter q");
  cmd->add_option("-r", args.r, "number of twisted strands r");
  cmd->add_option("-n", args.n, "full twists n (default 1)");
  cmd->add_option("--cable", args.m, "cable parameter m (only 1 has a braid)");
}

TTKParams knot_params(const KnotArgs& a) {
  if (a.p == 0 || a.q == 0 || a.r == 0) throw UsageError("need -p, -q and -r");
  return {a.p, a.q, a.r, a.m, a.n};
}

void print_poly(const std::string& key, const LaurentPolynomial& p) { std::cout << key << ": " << p.to_string() << "\n"; }

void setup_braid(CLI::App& app, KnotArgs& args) {
  auto* b = app.add_subcommand("braid", "emit the braid word of K(p,q,r,n) or of a torus knot");
  add_knot_options(b, args);
  b->add_option("--torus", args.torus, "torus knot T(P, Q) instead")->expected(2);
  b->callback([&] {
    if (!args.torus.empty()) {
      std::cout << torus_braid(static_cast<int>(args.torus[0]), args.torus[1]).to_string() << "\n";
      return;
    }
    std::cout << build_braid(knot_params(args)).to_string() << "\n";
  });
}

void setup_invariant(CLI::App& app, KnotArgs& args, const Globals& globals) {
  auto* inv = app.add_subcommand("invariant", "Alexander polynomial, determinant and optionally Jones");
  add_knot_options(inv, args);
  inv->add_option("--torus", args.torus, "torus knot T(P, Q) from the closed forms")->expected(2);
  inv->add_option("--word", args.word, "braid word text 'B<n>: l1 l2 ...'");
  inv->add_flag("--jones", args.jones, "also compute the Jones polynomial");
  inv->add_option("--method", args.method, "Jones method: tl (default) or kauffman")
      ->check(CLI::IsMember({"tl", "kauffman"}));
  inv->add_option("--format", args.format, "text (default) or json")->check(CLI::IsMember({"text", "json"}));
  inv->callback([&] {
    const bool json = args.format == "json";
    if (!args.torus.empty()) {
      const long tp = args.torus[0], tq = args.torus[1];
      const auto alex = torus_alexander(tp, tq);
      const auto det = knot_determinant(alex);
      if (json) {
        ordered_json out;
        out["torus"] = {tp, tq};
        out["jones"] = args.jones ? poly_json(torus_jones(tp, tq)) : ordered_json(nullptr);
        out["alexander"] = poly_json(alex);
        out["determinant"] = det.get_str();
        std::cout << out.dump() << "\n";
      } else {
        if (args.jones) print_poly("jones", torus_jones(tp, tq));
        print_poly("alexander", alex);
        std::cout << "determinant: " << det.get_str() << "\n";
      }
      return;
    }
    const BraidWord w = args.word.empty() ? build_braid(knot_params(args)) : BraidWord::parse(args.word);
    const InvariantLimits limits = globals.limits();
    InvariantReport rep = invariant_report(w, false, JonesMethod::tl, limits);
    if (args.jones) {
      rep.jones = jones(w, args.method == "tl" ? JonesMethod::tl : JonesMethod::kauffman, limits);
      rep.jones_status = "computed";
    }
    if (json) {
      ordered_json out;
      out["braid"] = w.to_string();
      out["crossings"] = rep.crossings;
      out["strands"] = rep.strands;
      out["components"] = rep.components;
      out["jones"] = rep.jones ? poly_json(*rep.jones) : ordered_json(nullptr);
      out["alexander"] = rep.alexander ? poly_json(*rep.alexander) : ordered_json(nullptr);
      out["determinant"] = rep.determinant ? ordered_json(rep.determinant->get_str()) : ordered_json(nullptr);
      std::cout << out.dump() << "\n";
      return;
    }
    std::cout << "crossings: " << rep.crossings << "\nstrands: " << rep.strands << "\ncomponents: " << rep.components
              << "\n";
    if (rep.jones) print_poly("jones", *rep.jones);
    if (rep.alexander) {
      print_poly("alexander", *rep.alexander);
      std::cout << "determinant: " << rep.determinant->get_str() << "\n";
    } else {
      std::cout << "alexander: not a knot\n";
    }
  });
}

// ---- census ----

struct CensusArgs {
  long bound = 60;
  std::string format = "json";
  std::string out;
  bool summary_only = false;
};

int run_census(Classification kind, const CensusArgs& args) {
  const CensusReport report = census(kind, args.bound);
  std::ofstream file;
  if (!args.out.empty()) {
    file.open(args.out);
    if (!file) fail(ErrorKind::invalid_argument, "cannot open '" + args.out + "' for writing");
  }
  std::ostream& stream = args.out.empty() ? std::cout : file;
  if (!args.summary_only) {
    if (args.format == "csv") stream << kCensusCsvHeader << "\n";
    for (const auto& row : report.rows) stream << (args.format == "csv" ? to_csv(row) : to_json(row).dump()) << "\n";
  }
  if (file.is_open()) {
    file.close();
    if (!file) fail(ErrorKind::invalid_argument, "failed writing '" + args.out + "'");
  }

  // The summary goes to stderr when the rows occupy stdout.
  std::ostream& summary = (args.out.empty() && !args.summary_only) ? std::cerr : std::cout;
  if (kind == Classification::pp) {
    summary << "pp: " << report.missing.size() << " missing, " << report.extra.size() << " extra\n";
  } else {
    summary << "ps: " << report.missing.size() << " missing, " << report.extra.size() << " predicate-invalid ("
            << report.extra.size() - report.undocumented.size() << " documented, " << report.undocumented.size()
            << " undocumented)\n";
    for (const Triple& t : report.extra) {
      summary << "  flag " << t.to_string();
      for (const auto& row : report.rows)
        if (row.triple == t)
          for (const auto& m : row.ps_families) {
            summary << " family " << m.family_index;
            for (const auto& [k, v] : m.witness) summary << " " << k << "=" << v;
          }
      summary << "\n";
    }
  }
  return report.clean() ? 0 : 1;
}

void setup_census(CLI::App& app, CensusArgs& args, int& status) {
  auto* c = app.add_subcommand("census", "compare classification predicates with the family lists");
  c->require_subcommand(1);
  c->footer(std::string("CSV columns: ") + kCensusCsvHeader +
            ". Family lists are 'index:name=value;...' entries joined by '|'; flags are joined by '|'.");
  for (auto [name, kind] : {std::pair{"pp", Classification::pp}, std::pair{"ps", Classification::ps}}) {
    auto* sub = c->add_subcommand(name, std::string(name) == "pp" ? "primitive/primitive census"
                                                                  : "primitive/middle-Seifert census");
    sub->add_option("--bound", args.bound, "largest p (default 60)");
    sub->add_option("--format", args.format, "json (default, JSON lines) or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", args.out, "write rows to this file instead of stdout");
    sub->add_flag("--summary", args.summary_only, "print only the summary");
    sub->callback([&, kind = kind] { status = run_census(kind, args); });
  }
}

// ---- verify ----

struct VerifyArgs {
  long p = 0, q = 0;
  std::string m, n;
  std::size_t k = 0;
  std::size_t kmax = 2;
};

void setup_verify(CLI::App& app, VerifyArgs& args, const Globals& globals, int& status) {
  auto* v = app.add_subcommand("verify", "check isotopy and mirror claims by invariants");
  v->require_subcommand(1);

  for (const char* name : {"lemma7", "lemma8"}) {
    auto* sub = v->add_subcommand(name, std::string(name) == "lemma7" ? "K(p,q,p-q,+1) vs K(p,p-q,q,+1)"
                                                                      : "K(p,q,p+q,-1) vs mirror of K(p,p+q,q,+1)");
    sub->add_option("-p", args.p)->required();
    sub->add_option("-q", args.q)->required();
    sub->callback([&, name] {
      ClaimParams cp;
      cp.p = args.p;
      cp.q = args.q;
      const auto report = verify_claim(parse_claim(name), cp, globals.limits());
      std::cout << report.to_json().dump() << "\n";
      status = report.consistent() ? 0 : 1;
    });
  }

  auto seed_claim = [&](const char* name, const char* help, bool chain) {
    auto* sub = v->add_subcommand(name, help);
    sub->add_option("-m", args.m)->required();
    sub->add_option("-n", args.n)->required();
    if (chain)
      sub->add_option("--kmax", args.kmax, "index to reduce from (default 2)");
    else
      sub->add_option("-k", args.k, "index (default 0)");
    sub->callback([&, name, chain] {
      ClaimParams cp;
      cp.seed_m = parse_integer(args.m, "-m");
      cp.seed_n = parse_integer(args.n, "-n");
      cp.k = chain ? args.kmax : args.k;
      const auto report = verify_claim(parse_claim(name), cp, globals.limits());
      std::cout << report.to_json().dump() << "\n";
      status = report.consistent() ? 0 : 1;
    });
  };
  seed_claim("lemma9", "K(H_{k+3},H_{k+2},H_{k+1},-1) vs K(H_{k+1},H_k,H_{k+2},+1)", false);
  seed_claim("prop12-1", "K(H_{k+2},H_k,H_{k+1},-1) reduces to K(H_2,H_0,H_1,-1) up to mirror", true);

  auto* cor = v->add_subcommand("corollary", "K(H_{k+2},H_k,H_{k+1},-1) is torus iff (m,n) is a maximal pair");
  cor->add_option("-m", args.m)->required();
  cor->add_option("-n", args.n)->required();
  cor->add_option("--kmax", args.kmax, "largest k (default 2)");
  cor->callback([&] {
    const Integer m = parse_integer(args.m, "-m"), n = parse_integer(args.n, "-n");
    const auto report = torus_iff_maximal_check(m, n, args.kmax);
    ordered_json out;
    out["claim"] = "corollary";
    out["params"] = {{"m", to_long(m)}, {"n", to_long(n)}, {"kmax", args.kmax}};
    out["maximal"] = report.maximal;
    out["steps"] = ordered_json::array();
    for (const auto& s : report.steps) {
      ordered_json step{{"k", s.k}, {"knot", s.params.to_string()}, {"torus", s.match.matched}};
      if (s.match.matched) step["torus_type"] = {*s.match.torus_p, *s.match.torus_q};
      out["steps"].push_back(step);
    }
    out["verdict"] = report.ok() ? "consistent" : "inconsistent";
    std::cout << out.dump() << "\n";
    status = report.ok() ? 0 : 1;
  });

  auto* slopes = v->add_subcommand("slopes", "exact slope identities of the (m, n) sequence up to kmax");
  slopes->add_option("-m", args.m)->required();
  slopes->add_option("-n", args.n)->required();
  slopes->add_option("--kmax", args.kmax, "largest k (default 2)");
  slopes->callback([&] {
    const Integer m = parse_integer(args.m, "-m"), n = parse_integer(args.n, "-n");
    const auto report = check_slope_relations(unit_horadam(m, n), args.kmax);
    ordered_json out;
    out["claim"] = "slopes";
    out["params"] = {{"m", to_long(m)}, {"n", to_long(n)}, {"kmax", args.kmax}};
    out["checked"] = report.checked;
    if (report.violation) {
      const auto& v = *report.violation;
      out["violation"] = {{"part", v.part}, {"k", v.k}, {"lhs", v.lhs.get_str()}, {"rhs", v.rhs.get_str()}};
    }
    out["verdict"] = report.ok() ? "consistent" : "inconsistent";
    std::cout << out.dump() << "\n";
    status = report.ok() ? 0 : 1;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted torus knots: braids, invariants, Horadam sequences, classification censuses"};
  app.require_subcommand(1);
  Globals globals;
  app.add_option("--budget", globals.budget, "state-sum crossing budget (default 22, or TTK_BUDGET)")
      ->check(CLI::PositiveNumber);
  app.add_option("--strand-limit", globals.strand_limit, "Temperley-Lieb strand limit (default 14)")
      ->check(CLI::PositiveNumber);

  HoradamArgs horadam;
  KnotArgs braid;
  KnotArgs invariant;
  CensusArgs census_args;
  VerifyArgs verify;
  int status = 0;
  setup_horadam(app, horadam);
  setup_braid(app, braid);
  setup_invariant(app, invariant, globals);
  setup_census(app, census_args, status);
  setup_verify(app, verify, globals, status);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ttk::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return status;
}
