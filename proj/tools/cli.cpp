#include "cli.hpp"

#include "covalg/complex.hpp"
#include "covalg/errors.hpp"
#include "covalg/io.hpp"
#include "covalg/lattice.hpp"
#include "covalg/series.hpp"
#include "covalg/toric.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <limits>

namespace covalg::cli {

namespace {

using nlohmann::ordered_json;

struct Options {
  std::string path;
  bool json = false;
  bool text = false;
  unsigned threads = 0;
  int max_n = 16;
  int max_degree = 6;
  bool drop_isolated = false;
  std::string level = "fast";
  std::size_t max_lattice = 32;
  bool corrupt_basis = false;
};

ordered_json big(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
    return v.convert_to<long long>();
  }
  return v.str();
}

ordered_json big_list(const std::vector<BigInt>& values) {
  ordered_json out = ordered_json::array();
  for (const BigInt& v : values) out.push_back(big(v));
  return out;
}

std::string set_string(Subset s) {
  std::string out = "{";
  for (int i : mask_to_indices(s)) {
    if (out.size() > 1) out += ',';
    out += std::to_string(i);
  }
  return out + "}";
}

// Key/value pairs of a flat report as "key: value" lines.
void print_text(std::ostream& out, const ordered_json& report) {
  for (const auto& [key, value] : report.items()) {
    out << key << ": ";
    if (value.is_string()) {
      out << value.get<std::string>();
    } else if (value.is_array() && std::all_of(value.begin(), value.end(),
                                               [](const auto& v) { return v.is_primitive(); })) {
      bool first = true;
      for (const auto& v : value) {
        out << (first ? "" : " ") << (v.is_string() ? v.get<std::string>() : v.dump());
        first = false;
      }
    } else {
      out << value.dump();
    }
    out << '\n';
  }
}

BipartiteGraph load(const Options& opt, std::ostream& err) {
  BipartiteGraph g = read_graph_file(opt.path);
  if (opt.drop_isolated && g.has_isolated_vertex()) {
    BipartiteGraph trimmed = drop_isolated(g);
    err << "warning: dropped isolated vertices, n " << g.n() << " -> " << trimmed.n() << '\n';
    return trimmed;
  }
  return g;
}

SweepOptions sweep_options(const Options& opt) {
  SweepOptions s;
  s.threads = opt.threads;
  s.max_n = opt.max_n;
  return s;
}

ordered_json relabeling_json(const Standardization& st) {
  return {{"x", st.x_relabel}, {"y", st.y_relabel}, {"matching", st.matching}};
}

ordered_json lattice_summary(const CoverLattice& lattice) {
  HasseSummary hasse = hasse_summary(lattice);
  ordered_json out;
  out["size"] = lattice.size();
  out["rank"] = hasse.longest_maximal_chain;
  out["graded"] = hasse.shortest_maximal_chain == hasse.longest_maximal_chain;
  out["covering_pairs"] = hasse.covering_pairs;
  out["maximal_chains"] = big(hasse.maximal_chains);
  return out;
}

int cmd_check(const Options& opt, std::ostream& out, std::ostream& err) {
  BipartiteGraph g = load(opt, err);
  Standardization st = standardize(g);
  CoverLattice lattice = build_lattice(st.graph);
  std::optional<bool> brute;
  if (2 * g.n() <= 24) brute = is_unmixed_bruteforce(g);

  ordered_json r;
  r["n"] = g.n();
  r["input"] = ordered_json::parse(graph_to_json(g));
  r["standard_form"] = ordered_json::parse(graph_to_json(st.graph));
  r["relabeling"] = relabeling_json(st);
  r["bipartite"] = true;
  r["unmixed"] = true;
  r["unmixed_bruteforce"] = brute ? ordered_json(*brute) : ordered_json(nullptr);
  r["cohen_macaulay"] = rank(lattice) == g.n();
  r["complete_bipartite"] = lattice.size() == 2;
  r["lattice"] = lattice_summary(lattice);

  if (opt.json) {
    out << r.dump() << '\n';
  } else {
    print_text(out, r);
  }
  if (brute && !*brute) {
    err << "error: standardization succeeded but brute-force search finds the graph mixed\n";
    return kExitVerification;
  }
  return kExitOk;
}

struct SeriesData {
  BipartiteGraph graph;
  Standardization standardization;
  IntPolynomial h;
  RationalSeries series;
  BigInt multiplicity;
};

SeriesData compute_series(const BipartiteGraph& g, const Options& opt) {
  SeriesData d;
  d.standardization = standardize(g);
  d.graph = d.standardization.graph;
  SubsetSweep sweep = sweep_subsets(d.graph, sweep_options(opt));
  d.h = h_by_subset_sum(sweep);
  d.series = series_by_subset_sum(sweep);
  const int n = d.graph.n();
  if (!(d.series == RationalSeries(d.h, 2 * n + 1)) || d.series.denom_power() != 2 * n + 1) {
    throw InconsistencyError("series " + d.series.to_string() + " disagrees with h = " +
                             d.h.to_string());
  }
  BigInt by_cm = multiplicity_by_cm_sum(sweep);
  BigInt by_chains = multiplicity_by_chain_count(sweep);
  if (by_cm != d.h.evaluate_at_one() || by_cm != by_chains) {
    throw InconsistencyError("multiplicity routes disagree");
  }
  d.multiplicity = by_cm;
  return d;
}

int cmd_hilbert(const Options& opt, std::ostream& out, std::ostream& err) {
  BipartiteGraph g = load(opt, err);
  SeriesData d = compute_series(g, opt);
  const int n = d.graph.n();
  auto [lo, hi] = multiplicity_bounds(n);
  CoverLattice lattice = build_lattice(d.graph);

  std::vector<BigInt> h(n + 1, 0);
  for (int i = 0; i <= n; ++i) h[i] = d.h.coefficient(i);

  ordered_json r;
  r["n"] = n;
  r["h"] = big_list(h);
  r["denom_power"] = d.series.denom_power();
  r["multiplicity"] = big(d.multiplicity);
  r["bounds"] = {big(lo), big(hi)};
  r["gorenstein_symmetric"] = check_gorenstein_symmetry(d.h, n);
  r["a_invariant"] = a_invariant(d.series);
  r["series"] = d.series.to_string();
  r["relabeling"] = relabeling_json(d.standardization);
  r["lattice"] = lattice_summary(lattice);
  r["lattice_f_vector"] = big_list(order_complex(lattice).f);
  r["cohen_macaulay"] = rank(lattice) == n;
  r["complete_bipartite"] = lattice.size() == 2;
  r["lower_bound_attained"] = d.multiplicity == lo;
  r["upper_bound_attained"] = d.multiplicity == hi;

  if (opt.json) {
    out << r.dump() << '\n';
  } else {
    print_text(out, r);
  }
  return kExitOk;
}

int cmd_lattice(const Options& opt, std::ostream& out, std::ostream& err) {
  BipartiteGraph g = standard_form(load(opt, err));
  CoverLattice lattice = build_lattice(g);
  if (opt.json) {
    out << lattice_to_json(lattice) << '\n';
    return kExitOk;
  }
  out << "n: " << lattice.n() << '\n';
  for (Subset s : lattice.elements()) out << set_string(s) << '\n';
  return kExitOk;
}

int cmd_groebner(const Options& opt, std::ostream& out, std::ostream& err) {
  ToricRing ring(load(opt, err));
  std::vector<Binomial> basis = groebner_basis(ring);
  if (opt.json) {
    out << groebner_to_json(ring, basis) << '\n';
  } else {
    out << groebner_to_text(ring, basis);
  }
  return kExitOk;
}

struct Check {
  std::string name;
  std::string status;  // pass, fail, skipped
  std::string detail;
};

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  const bool full = opt.level == "full";
  BipartiteGraph g = load(opt, err);
  SeriesData d;
  std::vector<Check> checks;

  // Runs `body`, turning library exceptions into failed or skipped checks.
  auto run_check = [&](const std::string& name, const std::function<Check()>& body) {
    try {
      Check c = body();
      c.name = name;
      checks.push_back(std::move(c));
    } catch (const LimitExceeded& e) {
      checks.push_back({name, "skipped", e.what()});
    } catch (const StandardizationError&) {
      throw;
    } catch (const std::exception& e) {
      checks.push_back({name, "fail", e.what()});
    }
  };
  auto verdict = [](bool ok, std::string detail) {
    return Check{"", ok ? "pass" : "fail", std::move(detail)};
  };

  bool have_series = false;
  run_check("subset_sum_routes", [&] {
    d = compute_series(g, opt);
    have_series = true;
    return verdict(true, d.series.to_string());
  });
  if (!have_series) d.graph = standard_form(g);
  const int n = d.graph.n();

  ToricRing ring(d.graph);
  std::vector<Binomial> basis = groebner_basis(ring);
  if (opt.corrupt_basis && !basis.empty()) basis.pop_back();

  run_check("buchberger", [&] {
    BuchbergerReport rep = buchberger_verify(ring, basis, MonomialOrder(n), opt.max_lattice);
    std::string detail = std::to_string(basis.size()) + " binomials, " +
                         std::to_string(rep.pairs_checked) + " S-pairs";
    if (rep.first_failure) detail += "; " + *rep.first_failure;
    return verdict(rep.ok(), detail);
  });

  if (have_series) {
    run_check("initial_ideal_series", [&] {
      RationalSeries via = series_via_initial_ideal(ring, basis);
      return verdict(via == d.series, via.to_string());
    });
    run_check("multiplicity_bounds", [&] {
      auto [lo, hi] = multiplicity_bounds(n);
      return verdict(lo <= d.multiplicity && d.multiplicity <= hi,
                     lo.str() + " <= " + d.multiplicity.str() + " <= " + hi.str());
    });
    run_check("gorenstein_symmetry", [&] {
      bool ok = check_gorenstein_symmetry(d.h, n) && a_invariant(d.series) == -n - 1 &&
                d.h.coefficient(n + 1) == 0;
      return verdict(ok, "h = " + d.h.to_string() +
                             ", a = " + std::to_string(a_invariant(d.series)));
    });
    run_check("direct_count", [&] {
      DirectCountLimits limits;
      limits.max_degree = opt.max_degree;
      const int top = full ? opt.max_degree : std::min(opt.max_degree, 3);
      for (int deg = 0; deg <= top; ++deg) {
        BigInt direct = hilbert_function_direct(d.graph, deg, limits);
        BigInt coef = d.series.coefficient(deg);
        if (direct != coef) {
          return verdict(false, "degree " + std::to_string(deg) + ": counted " + direct.str() +
                                    ", series " + coef.str());
        }
      }
      return verdict(true, "degrees 0.." + std::to_string(top));
    });
  }

  if (full) {
    run_check("stanley_reisner", [&] {
      return verdict(stanley_reisner_check(ring.lattice()), "quadratic leads vs Δ(L)");
    });
    run_check("unmixed_bruteforce", [&] {
      return verdict(is_unmixed_bruteforce(g), "all minimal covers have size n");
    });
    run_check("cm_reduction", [&] {
      CmReduction red = cm_reduce(d.graph);
      LatticeMap nu = lattice_embedding(d.graph, red.subset);
      return verdict(is_cohen_macaulay(red.reduced) && nu.is_isomorphism,
                     "|F| = " + std::to_string(red.subset.size()));
    });
  }

  bool ok = std::none_of(checks.begin(), checks.end(),
                         [](const Check& c) { return c.status == "fail"; });
  if (opt.json) {
    ordered_json r;
    r["n"] = n;
    r["level"] = opt.level;
    r["checks"] = ordered_json::array();
    for (const Check& c : checks) {
      r["checks"].push_back({{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
    }
    r["ok"] = ok;
    out << r.dump() << '\n';
  } else {
    for (const Check& c : checks) out << c.status << ' ' << c.name << ": " << c.detail << '\n';
    out << (ok ? "verification passed" : "verification FAILED") << '\n';
  }
  return ok ? kExitOk : kExitVerification;
}

void add_common(CLI::App* sub, Options& opt) {
  sub->add_option("graph", opt.path, "graph JSON file")->required();
  auto* json = sub->add_flag("--json", opt.json, "JSON output");
  sub->add_flag("--text", opt.text, "plain text output (default)")->excludes(json);
  sub->add_option("--threads", opt.threads, "worker threads for the subset sweep (0: all cores)");
  sub->add_option("--max-n", opt.max_n, "largest n for the subset sweep")->capture_default_str();
  sub->add_option("--max-degree", opt.max_degree, "largest degree for direct counting")
      ->capture_default_str();
  sub->add_flag("--drop-isolated", opt.drop_isolated, "remove isolated vertices first");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hilbert series and Groebner bases of vertex cover algebras of unmixed bipartite graphs",
               "covalg"};
  app.require_subcommand(1);
  Options opt;

  std::vector<std::pair<CLI::App*, std::function<int()>>> commands;
  auto add = [&](const char* name, const char* help, auto fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub, opt);
    commands.emplace_back(sub, [&opt, &out, &err, fn] { return fn(opt, out, err); });
    return sub;
  };
  add("check", "standardize the graph and report unmixed/CM verdicts", cmd_check);
  add("hilbert", "Hilbert series, h-vector and multiplicity", cmd_hilbert);
  add("lattice", "dump the cover lattice", cmd_lattice);
  add("groebner", "print the Groebner basis of the toric ideal", cmd_groebner);
  CLI::App* verify = add("verify", "cross-check the pipeline against its oracles", cmd_verify);
  verify->add_option("--level", opt.level, "fast or full")
      ->check(CLI::IsMember({"fast", "full"}))
      ->capture_default_str();
  verify->add_option("--max-lattice", opt.max_lattice, "largest lattice for the S-pair check")
      ->capture_default_str();
  verify->add_flag("--corrupt-basis", opt.corrupt_basis)->group("");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInput;
  }

  try {
    for (auto& [sub, fn] : commands) {
      if (sub->parsed()) return fn();
    }
  } catch (const ParseError& e) {
    err << "error: ParseError: " << e.what() << '\n';
    return kExitInput;
  } catch (const NoPerfectMatching& e) {
    err << "error: NoPerfectMatching: " << e.what() << '\n';
    return kExitNotStandardizable;
  } catch (const NotStandardizable& e) {
    err << "error: NotStandardizable: " << e.what();
    if (e.bruteforce_unmixed()) {
      err << " (brute-force unmixed: " << (*e.bruteforce_unmixed() ? "true" : "false") << ")";
    }
    err << '\n';
    return kExitNotStandardizable;
  } catch (const LimitExceeded& e) {
    err << "error: LimitExceeded: " << e.what() << '\n';
    return kExitInput;
  } catch (const InconsistencyError& e) {
    err << "error: InconsistencyError: " << e.what() << '\n';
    return kExitVerification;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerification;
  }
  return kExitInput;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  return run(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace covalg::cli
