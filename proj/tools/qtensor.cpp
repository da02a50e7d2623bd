// Command-line front end: batch queries over quiver, module and partition
// JSON files. See README.md for the file formats and exit codes.

#include <CLI11.hpp>

#include <iostream>

#include "qtensor/io.hpp"
#include "qtensor/verify.hpp"

namespace {

using namespace qtensor;

struct Options {
  std::string quiver_path;
  std::vector<std::string> module_paths;
  std::string partition_path;
  int n = 1;
  int n_max = 0;
  std::string suite;
  int trials = 50;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string twin_branch = "lemma";
  std::string cache_dir;
  long long max_dim = 10000;
  std::size_t max_tuples = 1000000;
  int max_l = 8;
  std::vector<std::string> flips;
  bool coassociative_only = false;
  int digits = 30;
};

Quiver load_quiver(const Options& opt) {
  Quiver q = quiver_from_json(read_json_file(opt.quiver_path));
  for (const std::string& name : opt.flips) {
    const int idx = q.arrow_index(name);
    if (idx < 0) throw ParseError("--flip: no arrow named '" + name + "'");
    std::swap(q.arrows[idx].source, q.arrows[idx].target);
  }
  return q;
}

TwinBranch branch_of(const Options& opt) {
  if (opt.twin_branch == "lemma") return TwinBranch::LemmaPerIndex;
  if (opt.twin_branch == "prop") return TwinBranch::PropositionDisplay;
  throw InvalidArgumentError("--twin-branch must be 'lemma' or 'prop'");
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

/// Largest n is refused once sum_i (dim M_i)^n exceeds the dimension bound.
void check_dimension_bound(const RootSystem& rs, const Decomposition& a, int n,
                           const Integer& max_dim) {
  const BigVector dims = decomposition_dims(rs, a);
  Integer total(0);
  for (const Integer& d : dims) total += int_pow(d, static_cast<unsigned>(n));
  if (total > max_dim)
    throw BoundExceededError("M^(x)" + std::to_string(n) + " has total dimension " + total.str() +
                             " > bound " + max_dim.str() +
                             "; raise --max-dim or use the closed-form formulas");
}

int cmd_roots(const Options& opt) {
  const Quiver q = load_quiver(opt);
  const ShapeInfo shape = detect_shape(q);
  const std::vector<Root> roots = positive_roots(q, shape);
  if (opt.format == "csv") {
    std::cout << "id,kind,length\n";
    for (const Root& r : roots)
      std::cout << '"' << root_id(r.vec) << "\"," << (r.is_twin() ? "twin" : "thin") << ","
                << r.length << "\n";
    return 0;
  }
  Json rows = Json::array();
  for (const Root& r : roots) {
    Json row{{"id", root_id(r.vec)},
             {"kind", r.is_twin() ? "twin" : "thin"},
             {"length", r.length}};
    if (r.is_twin()) row["twin_indices"] = Json::array({r.twin_i, r.twin_j});
    rows.push_back(std::move(row));
  }
  emit(Json{{"quiver_hash", quiver_hash(q)}, {"shape", shape.family_name()}, {"roots", rows}});
  return 0;
}

void emit_decomposition(const Options& opt, const RootSystem& rs, const Decomposition& a) {
  if (opt.format == "csv") {
    std::cout << "root,multiplicity\n";
    for (int d = 0; d < rs.root_count(); ++d)
      if (a[d] != 0) std::cout << '"' << root_id(rs.roots[d].vec) << "\"," << a[d].str() << "\n";
    return;
  }
  emit(decomposition_to_json(rs, a));
}

int cmd_decompose(const Options& opt) {
  const Quiver q = load_quiver(opt);
  const RootSystem rs = root_system(q, opt.max_l);
  const Decomposition a = module_from_json(rs, read_json_file(opt.module_paths.at(0)));
  emit_decomposition(opt, rs, a);
  return 0;
}

int cmd_tensor(const Options& opt) {
  const Quiver q = load_quiver(opt);
  if (opt.module_paths.size() != 2)
    throw InvalidArgumentError("tensor needs exactly two --module files");
  const FusionTable t = cached_fusion_table(q, opt.cache_dir, opt.max_l);
  const Decomposition a = module_from_json(t.basis, read_json_file(opt.module_paths[0]));
  const Decomposition b = module_from_json(t.basis, read_json_file(opt.module_paths[1]));
  if (opt.partition_path.empty()) {
    emit_decomposition(opt, t.basis, fuse(t, a, b));
  } else {
    const auto p = partition_from_json(q, read_json_file(opt.partition_path));
    emit_decomposition(opt, t.basis, delta_tensor(t, a, b, p));
  }
  return 0;
}

int cmd_power(const Options& opt) {
  const Quiver q = load_quiver(opt);
  const FusionTable t = cached_fusion_table(q, opt.cache_dir, opt.max_l);
  const Decomposition a = module_from_json(t.basis, read_json_file(opt.module_paths.at(0)));
  check_dimension_bound(t.basis, a, opt.n, Integer(opt.max_dim));
  if (opt.partition_path.empty()) {
    emit_decomposition(opt, t.basis, tensor_power(t, a, opt.n));
  } else {
    const auto p = partition_from_json(q, read_json_file(opt.partition_path));
    emit_decomposition(opt, t.basis, delta_power(t, a, opt.n, p));
  }
  return 0;
}

int cmd_bn(const Options& opt) {
  const Quiver q = load_quiver(opt);
  const FusionTable t = cached_fusion_table(q, opt.cache_dir, opt.max_l);
  const Decomposition a = module_from_json(t.basis, read_json_file(opt.module_paths.at(0)));
  const int n_max = opt.n_max > 0 ? opt.n_max : opt.n;
  if (n_max < 1) throw InvalidArgumentError("--n-max must be >= 1");
  check_dimension_bound(t.basis, a, n_max, Integer(opt.max_dim));

  Json rows = Json::array();
  Decomposition acc = a;
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1) acc = fuse(t, acc, a);
    const Integer bn = total_multiplicity(acc);
    const Integer bnd = bn + delta_correction(t.basis, a, n);
    const DecimalRoot root = nth_root_decimal(bn, static_cast<unsigned>(n), opt.digits);
    rows.push_back(Json{{"n", n},
                        {"b_n", bn.str()},
                        {"b_n_delta", bnd.str()},
                        {"b_n_nth_root", root.text}});
  }
  if (opt.format == "csv") {
    std::cout << "n,b_n,b_n_delta,b_n_nth_root\n";
    for (const Json& row : rows)
      std::cout << row["n"] << "," << row["b_n"].get<std::string>() << ","
                << row["b_n_delta"].get<std::string>() << ","
                << row["b_n_nth_root"].get<std::string>() << "\n";
    return 0;
  }
  emit(Json{{"quiver_hash", quiver_hash(q)}, {"rows", rows}});
  return 0;
}

int cmd_beta(const Options& opt) {
  const Quiver q = load_quiver(opt);
  const FusionTable t = cached_fusion_table(q, opt.cache_dir, opt.max_l);
  const Decomposition a = module_from_json(t.basis, read_json_file(opt.module_paths.at(0)));
  const int n_max = opt.n_max > 0 ? opt.n_max : opt.n;
  if (n_max < 1) throw InvalidArgumentError("--n-max must be >= 1");
  check_dimension_bound(t.basis, a, n_max, Integer(opt.max_dim));
  const auto seq = beta_estimate(t, a, n_max, opt.digits);
  if (opt.format == "csv") {
    std::cout << "n,b_n_nth_root\n";
    for (int n = 1; n <= n_max; ++n) std::cout << n << "," << seq[n - 1].text << "\n";
    return 0;
  }
  Json rows = Json::array();
  for (int n = 1; n <= n_max; ++n) rows.push_back(Json{{"n", n}, {"value", seq[n - 1].text}});
  emit(Json{{"quiver_hash", quiver_hash(q)}, {"rows", rows}});
  return 0;
}

int cmd_delta_enum(const Options& opt) {
  const Quiver q = load_quiver(opt);
  const auto specs = enumerate_partitioning_morphisms(q.num_vertices(), opt.coassociative_only);
  if (opt.format == "csv") {
    std::cout << "index,coassociative\n";
    for (std::size_t i = 0; i < specs.size(); ++i)
      std::cout << i << "," << (is_coassociative(specs[i]) ? "true" : "false") << "\n";
    return 0;
  }
  Json rows = Json::array();
  for (const auto& spec : specs) {
    Json row = partition_to_json(q, spec);
    row["coassociative"] = is_coassociative(spec);
    rows.push_back(std::move(row));
  }
  emit(Json{{"quiver_hash", quiver_hash(q)}, {"count", specs.size()}, {"specs", rows}});
  return 0;
}

int cmd_verify(const Options& opt) {
  const Quiver q = load_quiver(opt);
  VerifyOptions vopt;
  vopt.trials = opt.trials;
  vopt.seed = opt.seed;
  vopt.n_min = 1;
  vopt.n_max = opt.n_max > 0 ? opt.n_max : 4;
  vopt.branch = branch_of(opt);
  vopt.max_tuples = opt.max_tuples;
  vopt.random_modules = std::min(opt.trials, 10);

  Json report;
  if (opt.suite == "formulaA") {
    if (detect_shape(q).family != DynkinFamily::A)
      throw UnsupportedShapeError("suite formulaA needs a type A quiver");
    report = run_formula_suite(q, vopt);
  } else if (opt.suite == "formulaD") {
    if (detect_shape(q).family != DynkinFamily::D)
      throw UnsupportedShapeError("suite formulaD needs a type D quiver");
    report = run_formula_suite(q, vopt);
  } else if (opt.suite == "delta") {
    report = run_delta_suite(q, vopt);
  } else if (opt.suite == "power-identity") {
    report = run_power_identity_suite(q, vopt);
  } else if (opt.suite == "chains") {
    report = run_chains_suite(q, vopt);
  } else if (opt.suite == "twin-branch") {
    report = run_twin_branch_suite(q, vopt);
  } else {
    throw InvalidArgumentError(
        "--suite must be one of formulaA, formulaD, delta, power-identity, chains, twin-branch");
  }
  emit(report);
  return report_ok(report) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tensor powers of quiver representations: decompositions, growth sequences, "
               "and closed-form verification"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd, bool needs_module) {
    cmd->add_option("-q,--quiver", opt.quiver_path, "quiver JSON file")->required();
    cmd->add_option("--flip", opt.flips, "reverse the named arrow (repeatable)");
    cmd->add_option("--format", opt.format, "json|csv")->default_val("json");
    cmd->add_option("--cache-dir", opt.cache_dir, "fusion-table cache directory");
    cmd->add_option("--max-l", opt.max_l, "vertex-count bound for fusion tables");
    if (needs_module)
      cmd->add_option("-m,--module", opt.module_paths,
                      "module JSON (by roots, or explicit matrices)");
  };

  auto* roots = app.add_subcommand("roots", "list the positive roots");
  add_common(roots, false);

  auto* dec = app.add_subcommand("decompose", "Krull-Schmidt decomposition of a module");
  add_common(dec, true);

  auto* tensor = app.add_subcommand("tensor", "decompose a (Delta-)tensor product");
  add_common(tensor, true);
  tensor->add_option("-p,--partition", opt.partition_path, "partitioning morphism JSON");

  auto* power = app.add_subcommand("power", "decompose a (Delta-)tensor power");
  add_common(power, true);
  power->add_option("-n,--n", opt.n, "tensor power")->required();
  power->add_option("-p,--partition", opt.partition_path, "partitioning morphism JSON");
  power->add_option("--max-dim", opt.max_dim, "total-dimension bound for brute force");

  auto* bn = app.add_subcommand("bn", "growth table (n, b_n, b_n^Delta, b_n^(1/n))");
  add_common(bn, true);
  bn->add_option("--n-max", opt.n_max, "largest n")->required();
  bn->add_option("--max-dim", opt.max_dim, "total-dimension bound for brute force");
  bn->add_option("--digits", opt.digits, "significant digits for roots");

  auto* beta = app.add_subcommand("beta", "the sequence b_n^(1/n)");
  add_common(beta, true);
  beta->add_option("--n-max", opt.n_max, "largest n")->required();
  beta->add_option("--max-dim", opt.max_dim, "total-dimension bound for brute force");
  beta->add_option("--digits", opt.digits, "significant digits for roots");

  auto* denum = app.add_subcommand("delta-enum", "enumerate partitioning morphisms");
  add_common(denum, false);
  denum->add_flag("--coassociative-only", opt.coassociative_only, "filter by coassociativity");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify, false);
  verify->add_option("--suite", opt.suite,
                     "formulaA|formulaD|delta|power-identity|chains|twin-branch")
      ->required();
  verify->add_option("--trials", opt.trials, "random modules per suite");
  verify->add_option("--seed", opt.seed, "random seed");
  verify->add_option("--n-max", opt.n_max, "largest tensor power");
  verify->add_option("--twin-branch", opt.twin_branch, "lemma|prop");
  verify->add_option("--max-tuples", opt.max_tuples, "chain-set materialization bound");

  CLI11_PARSE(app, argc, argv);

  try {
    if (roots->parsed()) return cmd_roots(opt);
    if (dec->parsed()) return cmd_decompose(opt);
    if (tensor->parsed()) return cmd_tensor(opt);
    if (power->parsed()) return cmd_power(opt);
    if (bn->parsed()) return cmd_bn(opt);
    if (beta->parsed()) return cmd_beta(opt);
    if (denum->parsed()) return cmd_delta_enum(opt);
    if (verify->parsed()) return cmd_verify(opt);
  } catch (const qtensor::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range&) {
    std::cerr << "parse error: missing --module file\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
