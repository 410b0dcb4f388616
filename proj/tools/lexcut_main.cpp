#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "lexcut/io.hpp"

namespace {

using namespace lexcut;

constexpr int kExitOptimal = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;

SolveOptions options_from_env(SolveOptions opts) {
  if (const char* cap = std::getenv("LEXCUT_ITER_LIMIT")) {
    long v = std::atol(cap);
    if (v > 0) {
      opts.iter_limit = v;
      opts.kelley_cap = v;
    }
  }
  return opts;
}

Rational rational_from_double(double v) {
  Rational q(v);
  q.canonicalize();
  return q;
}

int run_solve(const std::string& path, const std::string& algorithm, double eps, double snap,
              bool refresh, bool strengthen, const std::string& trace_path, bool no_trace) {
  Instance inst = load_instance(path);
  SolveOptions opts = options_from_env({});
  opts.eps = rational_from_double(eps);
  opts.delta_int = rational_from_double(snap);
  opts.refresh_bounds = refresh;
  opts.strengthen_alpha = strengthen;
  opts.record_trace = !no_trace;

  SolveOutcome out = algorithm == "enum"
                         ? algorithm2_solve(inst.set, inst.objective, inst.basis, opts)
                         : algorithm1_solve(inst.set, inst.objective, inst.basis, opts);

  std::string counts = out.algorithm == "cut"
                           ? "cuts: " + std::to_string(out.stats.cuts)
                           : "line-2 executions: " + std::to_string(out.stats.line2_execs);
  if (out.feasible) {
    std::cout << "OPTIMAL " << format_point(out.point) << " value " << to_string(out.value)
              << "; " << counts << "\n";
  } else {
    std::cout << "INFEASIBLE; " << counts << "\n";
  }
  if (!trace_path.empty() && !no_trace) {
    std::ofstream f(trace_path);
    if (!f) throw Error("cannot write trace file: " + trace_path);
    f << trace_to_json(out).dump(2) << "\n";
  }
  return out.feasible ? kExitOptimal : kExitInfeasible;
}

int run_cuts(const std::string& path, const std::string& xbar_arg, const std::string& basis_arg,
             long k, bool all, bool trim) {
  std::optional<LatticeBasis> basis;
  QVector xbar;
  size_t n = 0;
  if (!path.empty()) {
    Instance inst = load_instance(path);
    n = inst.n;
    basis = inst.basis ? inst.basis
                       : std::optional<LatticeBasis>(
                             complete_basis(gcd_normalize(inst.objective).first));
  }
  if (xbar_arg.empty()) throw SchemaError("--xbar is required");
  xbar = to_rational(parse_int_csv(xbar_arg));
  if (n == 0) n = xbar.size();
  if (xbar.size() != n) throw SchemaError("--xbar has the wrong dimension");
  if (!basis_arg.empty()) basis = parse_basis_arg(basis_arg, n);
  if (!basis) basis = LatticeBasis::identity(n);

  if (all) {
    for (const LinearInequality& h : q_description(*basis, xbar, trim))
      std::cout << format_inequality(h) << "\n";
  } else {
    if (k < 1) throw SchemaError("--k or --all is required");
    std::cout << format_inequality(lexcut(*basis, xbar, static_cast<size_t>(k)).ineq) << "\n";
  }
  return kExitOptimal;
}

int run_hull_check(const std::string& xbar_arg, const std::string& basis_arg, long box,
                   bool perturb_rhs) {
  if (xbar_arg.empty()) throw SchemaError("--xbar is required");
  QVector xbar = to_rational(parse_int_csv(xbar_arg));
  size_t n = xbar.size();
  LatticeBasis basis =
      basis_arg.empty() ? LatticeBasis::identity(n) : parse_basis_arg(basis_arg, n);
  if (box < 0) throw SchemaError("--box must be nonnegative");

  Int cells = 1;
  for (size_t i = 0; i < n; ++i) {
    cells *= box + 1;
    if (cells > 10000000) throw BoxTooLarge();
  }

  std::vector<LinearInequality> desc = q_description(basis, xbar);
  if (perturb_rhs && !desc.empty()) desc[0].rhs += 1;  // self-test hook

  ZVector zbar = to_integer(basis.products(xbar));
  bool pass = true;
  std::string detail;

  // Walk all integer points with products in [0, box]^n.
  ZVector z(n, Int(0));
  for (;;) {
    QVector x = to_rational(solve_unimodular(basis, z));
    bool in_desc = true;
    for (const LinearInequality& h : desc)
      if (!h.satisfied_by(x)) {
        in_desc = false;
        break;
      }
    bool lex_ge = !z_lex_less(z, zbar);
    if (in_desc != lex_ge) {
      pass = false;
      detail = "membership mismatch at products " + format_point(to_rational(z));
      break;
    }
    size_t j = n;
    while (j > 0 && z[j - 1] == box) z[--j] = 0;
    if (j == 0) break;
    z[j - 1] += 1;
  }

  // Vertex feasibility and tightness on the matching cut.
  if (pass && !is_zero(zbar)) {
    std::vector<QVector> verts = extreme_points(basis, xbar);
    for (size_t k = 1; k <= verts.size() && pass; ++k) {
      const QVector& v = verts[k - 1];
      for (const LinearInequality& h : desc)
        if (!h.satisfied_by(v)) {
          pass = false;
          detail = "vertex " + format_point(v) + " infeasible";
        }
      LexCut cut = lexcut(basis, xbar, k);
      if (perturb_rhs) cut.ineq.rhs += 1;
      if (pass && cut.ineq.evaluate(v) != cut.ineq.rhs) {
        pass = false;
        detail = "vertex " + format_point(v) + " not tight on its cut";
      }
    }
  }

  if (pass) {
    std::cout << "PASS\n";
    return kExitOptimal;
  }
  std::cout << "FAIL: " << detail << "\n";
  return kExitError;
}

int run_split_check(const std::string& path, const std::string& cut_arg, const std::string& pi_arg,
                    const std::string& pi0_arg, long enumerate) {
  Instance inst = load_instance(path);
  if (cut_arg.empty()) throw SchemaError("--cut is required");
  LinearInequality cut = parse_inequality(cut_arg, inst.n);

  if (enumerate > 0) {
    std::vector<SplitDisjunction> found = enumerate_splits(inst.set, cut, enumerate);
    if (found.empty()) {
      std::cout << "no validating split with |pi|_inf <= " << enumerate << "\n";
    } else {
      for (const SplitDisjunction& d : found)
        std::cout << "VALID pi=" << format_point(to_rational(d.pi)) << " pi0=" << d.pi0.get_str()
                  << "\n";
    }
    return kExitOptimal;
  }

  if (pi_arg.empty() || pi0_arg.empty())
    throw SchemaError("--pi and --pi0 (or --enumerate N) are required");
  SplitDisjunction d{parse_int_csv(pi_arg), Int(pi0_arg)};
  bool ok = is_valid_split_cut(inst.set, cut, d);
  std::cout << (ok ? "VALID" : "INVALID") << "\n";
  return kExitOptimal;
}

int run_compare(const std::string& path) {
  Instance inst = load_instance(path);
  SolveOptions opts = options_from_env({});

  SolveOutcome a1 = algorithm1_solve(inst.set, inst.objective, inst.basis, opts);
  SolveOutcome a2 = algorithm2_solve(inst.set, inst.objective, inst.basis, opts);

  auto describe = [](const SolveOutcome& o) {
    return o.feasible ? "OPTIMAL " + format_point(o.point) + " value " + to_string(o.value)
                      : std::string("INFEASIBLE");
  };
  std::cout << "algorithm 1 (cut):  " << describe(a1) << "; cuts: " << a1.stats.cuts
            << "; oracle calls: " << a1.stats.oracle_calls << "\n";
  std::cout << "algorithm 2 (enum): " << describe(a2)
            << "; line-2 executions: " << a2.stats.line2_execs
            << "; oracle calls: " << a2.stats.oracle_calls << "\n";

  if (std::holds_alternative<PointCloud>(inst.set)) {
    SolveOptions popts = opts;
    SolveStats pstats;
    Preprocessed pre = preprocess(inst.set, inst.objective, inst.basis, popts, &pstats);
    const auto& cloud = std::get<PointCloud>(pre.set);
    std::vector<QVector> sup = s_up_pointcloud(cloud, pre.basis);
    std::vector<ZVector> vs = v_set(pre.basis, sup);
    std::cout << "|S_up| = " << sup.size() << " (cut bound); |V(S)|+1 = " << vs.size() + 1
              << " (enum bound)\n";
  }
  return kExitOptimal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lex-cut solver: finite cutting planes and lex-enumeration over "
               "oracle-accessed compact sets"};
  app.require_subcommand(1);

  std::string path, algorithm = "cut", trace_path, xbar_arg, basis_arg, cut_arg, pi_arg, pi0_arg;
  double eps = 1e-9, snap = 1e-6;
  bool refresh = false, strengthen = false, no_trace = false, all = false, trim = false,
       perturb = false;
  long k = 0, box = 0, enumerate = 0;

  CLI::App* solve = app.add_subcommand("solve", "run an algorithm on an instance file");
  solve->add_option("path", path, "instance JSON")->required();
  solve->add_option("--algorithm", algorithm, "cut | enum")
      ->check(CLI::IsMember({"cut", "enum"}));
  solve->add_option("--eps", eps, "ball oracle tolerance");
  solve->add_option("--snap", snap, "integrality snapping tolerance");
  solve->add_flag("--refresh-bounds", refresh, "re-derive lower bounds every iteration");
  solve->add_flag("--strengthen-alpha", strengthen, "use alpha_n + 1 in the enumeration");
  solve->add_option("--trace", trace_path, "write the run trace to this file");
  solve->add_flag("--no-trace", no_trace, "do not retain a trace");

  CLI::App* cuts = app.add_subcommand("cuts", "print lex-cuts / the Q(xbar) description");
  cuts->add_option("path", path, "optional instance JSON supplying the basis");
  cuts->add_option("--xbar", xbar_arg, "integer point, comma-separated")->required();
  cuts->add_option("--basis", basis_arg, "identity or rows 'a,b;c,d'");
  cuts->add_option("--k", k, "cut index (1-based)");
  cuts->add_flag("--all", all, "print the full description");
  cuts->add_flag("--trim", trim, "drop the redundant inequalities");

  CLI::App* hull = app.add_subcommand("hull-check", "brute-force check of the hull description");
  hull->add_option("--xbar", xbar_arg)->required();
  hull->add_option("--basis", basis_arg);
  hull->add_option("--box", box, "enumerate products in [0, M]^n")->required();
  hull->add_flag("--perturb-rhs", perturb, "self-test hook: corrupt one rhs");

  CLI::App* split = app.add_subcommand("split-check", "split-cut validity checks");
  split->add_option("path", path)->required();
  split->add_option("--cut", cut_arg, "inequality, e.g. '2x1+x2>=2'")->required();
  split->add_option("--pi", pi_arg, "disjunction direction");
  split->add_option("--pi0", pi0_arg, "disjunction threshold");
  split->add_option("--enumerate", enumerate, "try all |pi|_inf <= N");

  CLI::App* compare = app.add_subcommand("compare", "run both algorithms side by side");
  compare->add_option("path", path)->required();

  try {
    app.parse(argc, argv);
    if (solve->parsed())
      return run_solve(path, algorithm, eps, snap, refresh, strengthen, trace_path, no_trace);
    if (cuts->parsed()) return run_cuts(path, xbar_arg, basis_arg, k, all, trim);
    if (hull->parsed()) return run_hull_check(xbar_arg, basis_arg, box, perturb);
    if (split->parsed()) return run_split_check(path, cut_arg, pi_arg, pi0_arg, enumerate);
    if (compare->parsed()) return run_compare(path);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const lexcut::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
