// kmetric: command-line front end for the k-metric library.
//
// Every subcommand prints a run report (JSON) to stdout. Objects produced by a command are
// written to the -o path when given, otherwise embedded in the report under "output".

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kmetric/apex.hpp"
#include "kmetric/coboundary.hpp"
#include "kmetric/corpus.hpp"
#include "kmetric/errors.hpp"
#include "kmetric/hypertree.hpp"
#include "kmetric/io.hpp"
#include "kmetric/kmetric.hpp"
#include "kmetric/parallel.hpp"
#include "kmetric/volume.hpp"

namespace {

using kmetric::io::Json;

enum Exit { kOk = 0, kNegative = 1, kInputError = 2, kSolverError = 3 };

struct Run {
  Json report = Json::object();
  Json inputs = Json::object();
  Json results = Json::object();
  int exit_code = kOk;
};

kmetric::io::Document load(Run& run, const std::string& path) {
  const std::string text = kmetric::io::read_file(path);
  run.inputs[path] = kmetric::io::digest(text);
  return kmetric::io::parse_document(text, path);
}

void emit(Run& run, const std::string& out_path, const Json& object) {
  if (out_path.empty()) {
    run.results["output"] = object;
  } else {
    kmetric::io::write_file(out_path, object);
    run.results["output_file"] = out_path;
  }
}

std::vector<int> parse_vertex_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw kmetric::ArgumentError("--target: '" + item + "' is not a vertex index");
    }
  }
  return out;
}

Json error_object(const std::string& kind, const std::string& message) {
  Json e;
  e["error"] = kind;
  e["message"] = message;
  return e;
}

// Options shared across subcommands.
struct Options {
  std::string input;
  std::string output;
  int jobs = kmetric::default_jobs();

  bool strong = false;
  bool exhaustive = false;
  double tol = kmetric::kMetricTol;

  std::string target;
  double eps = 0.25;
  std::uint64_t seed = 1;
  double cprime = kmetric::kDefaultJLConstant;
  std::string p = "2";
  int k = 3;
  bool to_coboundary = false;
  bool to_l1 = false;

  std::string name;
  kmetric::corpus::GenParams gen;
  std::string points;
};

void cmd_verify(Run& run, const Options& o) {
  const auto doc = load(run, o.input);
  const auto d = kmetric::io::kmetric_from_json(doc);
  kmetric::VerificationReport rep;
  if (o.strong) {
    kmetric::VerifyOptions vo;
    vo.tol = o.tol;
    vo.exhaustive = o.exhaustive;
    vo.jobs = o.jobs;
    rep = kmetric::check_strong(d, vo);
  } else {
    rep = kmetric::check_weak(d, o.tol);
  }
  run.results = kmetric::io::to_json(rep);
  if (!rep.is_weak || (rep.is_strong && !*rep.is_strong)) run.exit_code = kNegative;
}

void cmd_min_chain(Run& run, const Options& o) {
  const auto doc = load(run, o.input);
  const auto K = kmetric::io::complex_from_json(doc);
  const auto target = parse_vertex_list(o.target);
  if (static_cast<int>(target.size()) != K.k)
    throw kmetric::ArgumentError("--target needs " + std::to_string(K.k) + " vertices");
  for (int v : target)
    if (v < 0 || v >= K.n) throw kmetric::ArgumentError("--target vertex " + std::to_string(v) + " out of range");
  if (kmetric::has_repeats(target)) throw kmetric::ArgumentError("--target has repeated vertices");
  const auto t = kmetric::Chain::indicator(K.n, target);
  const auto boundary = kmetric::apply(kmetric::boundary_operator(K.n, K.k - 1), t);
  const auto mask = K.mask();
  const auto best = kmetric::min_bounding_chain(K.weight_vector(), boundary, &mask);
  run.results["target"] = target;
  run.results["cost"] = best.cost;
  run.results["chain"] = kmetric::io::chain_entries(best.chain, 1e-12);
  emit(run, o.output, kmetric::io::to_json(best.chain));
}

void cmd_frechet(Run& run, const Options& o) {
  const auto doc = load(run, o.input);
  const auto d = kmetric::io::kmetric_from_json(doc);
  const auto F = kmetric::frechet_embed(d, o.jobs, o.tol);
  const auto back = kmetric::eval_coboundary_metric(F, kmetric::NormSpec::infinity());
  run.results["columns"] = F.m();
  run.results["distortion"] = kmetric::io::number(kmetric::max_distortion(d, back));
  emit(run, o.output, kmetric::io::to_json(F));
}

void cmd_jl(Run& run, const Options& o) {
  const auto doc = load(run, o.input);
  const auto F = kmetric::io::chain_matrix_from_json(doc);
  const auto res = kmetric::jl_embed(F, o.eps, o.seed, o.cprime);
  run.results["eps"] = o.eps;
  run.results["seed"] = o.seed;
  run.results["columns"] = res.embedded.m();
  run.results["distortion"] = kmetric::io::number(res.distortion);
  run.results["within_eps"] = res.distortion <= o.eps;
  emit(run, o.output, kmetric::io::to_json(res.embedded));
}

void cmd_l2lp(Run& run, const Options& o) {
  const auto doc = load(run, o.input);
  const auto F = kmetric::io::chain_matrix_from_json(doc);
  const auto norm = kmetric::NormSpec::parse(o.p);
  if (norm.is_infinite()) throw kmetric::ArgumentError("--p must be finite for l2lp");
  const auto res = kmetric::embed_l2_to_lp(F, norm.p, o.eps, o.seed);
  run.results["p"] = norm.p;
  run.results["eps"] = o.eps;
  run.results["seed"] = o.seed;
  run.results["columns"] = res.embedded.m();
  run.results["distortion"] = kmetric::io::number(res.distortion);
  run.results["within_eps"] = res.distortion <= o.eps;
  emit(run, o.output, kmetric::io::to_json(res.embedded));
}

void cmd_eval(Run& run, const Options& o) {
  const auto doc = load(run, o.input);
  const auto F = kmetric::io::chain_matrix_from_json(doc);
  const auto norm = kmetric::NormSpec::parse(o.p);
  const auto d = kmetric::eval_coboundary_metric(F, norm);
  run.results["p"] = norm.to_string();
  emit(run, o.output, kmetric::io::to_json(d));
}

void cmd_volume(Run& run, const Options& o) {
  const auto doc = load(run, o.input);
  const auto cloud = kmetric::io::point_cloud_from_json(doc);
  run.results["k"] = o.k;
  if (o.to_coboundary) {
    const auto F = kmetric::volume_to_coboundary(cloud, o.k);
    run.results["columns"] = F.m();
    emit(run, o.output, kmetric::io::to_json(F));
  } else {
    emit(run, o.output, kmetric::io::to_json(kmetric::volume_metric(cloud, o.k)));
  }
}

void cmd_apex(Run& run, const Options& o) {
  const auto doc = load(run, o.input);
  switch (kmetric::io::detect_kind(doc)) {
    case kmetric::io::ObjectKind::kmetric: {
      const auto ext = kmetric::apex_extend(kmetric::io::kmetric_from_json(doc));
      run.results["kind"] = "kmetric";
      run.results["apex_index"] = ext.apex_index;
      emit(run, o.output, kmetric::io::to_json(ext.extended));
      break;
    }
    case kmetric::io::ObjectKind::chain_matrix: {
      const auto F = kmetric::io::chain_matrix_from_json(doc);
      run.results["kind"] = "chain_matrix";
      run.results["apex_index"] = F.n;
      emit(run, o.output, kmetric::io::to_json(kmetric::apex_extend_chain_matrix(F)));
      break;
    }
    default:
      doc.fail("", "expected a k-metric or chain-matrix file");
  }
}

void cmd_hypertree(Run& run, const Options& o) {
  const auto doc = load(run, o.input);
  const auto K = kmetric::io::complex_from_json(doc);
  const auto rep = kmetric::is_hypertree(K);
  run.results = kmetric::io::to_json(rep);
  if (!rep.is_hypertree()) {
    run.exit_code = kNegative;
    return;
  }
  if (o.to_l1) {
    const auto F = kmetric::hypertree_to_l1(K);
    run.results["columns"] = F.m();
    emit(run, o.output, kmetric::io::to_json(F));
  }
}

void cmd_gen(Run& run, const Options& o) {
  auto params = o.gen;
  if (!o.points.empty()) params.cloud = kmetric::io::point_cloud_from_json(load(run, o.points));
  const auto inst = kmetric::corpus::make_instance(o.name, params);
  run.results["name"] = inst.name;
  emit(run, o.output, kmetric::io::to_json(inst));
  if (inst.generator && !o.output.empty()) {
    const std::string gen_path = o.output + ".generator.json";
    kmetric::io::write_file(gen_path, kmetric::io::to_json(*inst.generator));
    run.results["generator_file"] = gen_path;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-metric verification, embedding and generation"};
  app.require_subcommand(1);
  Options o;

  auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", o.jobs, "Parallel LP workers (default: logical cores)")->check(CLI::PositiveNumber);
  };
  auto add_output = [&](CLI::App* sub, bool required = false) {
    auto* opt = sub->add_option("-o,--output", o.output, "Write the produced object here");
    if (required) opt->required();
  };

  auto* verify = app.add_subcommand("verify", "Check the weak (and optionally strong) simplex inequality");
  verify->add_option("metric", o.input, "k-metric file")->required();
  verify->add_flag("--strong", o.strong, "Also solve the bounding-chain LPs");
  verify->add_flag("--exhaustive", o.exhaustive, "Do not stop at the first strong violation");
  verify->add_option("--tol", o.tol, "Relative tolerance")->check(CLI::NonNegativeNumber);
  add_jobs(verify);

  auto* min_chain = app.add_subcommand("min-chain", "Minimum-weight chain bounding the boundary of a simplex");
  min_chain->add_option("complex", o.input, "Weighted complex file")->required();
  min_chain->add_option("--target", o.target, "Comma-separated vertices v1,...,vk")->required();
  add_output(min_chain);

  auto* embed = app.add_subcommand("embed", "Embeddings");
  embed->require_subcommand(1);
  auto* frechet = embed->add_subcommand("frechet", "Isometric l-infinity coboundary form of a strong k-metric");
  frechet->add_option("metric", o.input, "k-metric file")->required();
  frechet->add_option("--tol", o.tol, "Relative tolerance")->check(CLI::NonNegativeNumber);
  add_output(frechet, true);
  add_jobs(frechet);
  auto* jl = embed->add_subcommand("jl", "Gaussian dimension reduction of an l2 chain matrix");
  jl->add_option("chain", o.input, "Chain-matrix file")->required();
  jl->add_option("--eps", o.eps, "Target distortion")->required()->check(CLI::Range(1e-6, 1.0));
  jl->add_option("--seed", o.seed, "RNG seed")->required();
  jl->add_option("--cprime", o.cprime, "Dimension constant")->check(CLI::PositiveNumber);
  add_output(jl);
  auto* l2lp = embed->add_subcommand("l2lp", "Map an l2 chain matrix into l_p");
  l2lp->add_option("chain", o.input, "Chain-matrix file")->required();
  l2lp->add_option("--p", o.p, "Target norm exponent")->required();
  l2lp->add_option("--eps", o.eps, "Target distortion")->required()->check(CLI::Range(1e-6, 1.0));
  l2lp->add_option("--seed", o.seed, "RNG seed")->required();
  add_output(l2lp);

  auto* eval = app.add_subcommand("eval", "Evaluate the coboundary metric of a chain matrix");
  eval->add_option("chain", o.input, "Chain-matrix file")->required();
  eval->add_option("--p", o.p, "Norm exponent (number or inf)")->required();
  add_output(eval);

  auto* volume = app.add_subcommand("volume", "Volume k-metric of a point cloud");
  volume->add_option("points", o.input, "Point-cloud file")->required();
  volume->add_option("--k", o.k, "Arity")->required()->check(CLI::Range(2, 64));
  volume->add_flag("--to-coboundary", o.to_coboundary, "Emit the l2 chain matrix instead");
  add_output(volume);

  auto* apex = app.add_subcommand("apex", "Apex extension of a k-metric or chain matrix");
  apex->add_option("input", o.input, "k-metric or chain-matrix file")->required();
  add_output(apex);

  auto* hyper = app.add_subcommand("hypertree", "Hypertree test, optionally with its l1 chain matrix");
  hyper->add_option("complex", o.input, "Weighted complex file")->required();
  hyper->add_flag("--to-l1", o.to_l1, "Emit the l1 chain matrix");
  add_output(hyper);

  auto* gen = app.add_subcommand("gen", "Generate a corpus instance");
  gen->add_option("name", o.name, "Instance name")->required()->check(CLI::IsMember(kmetric::corpus::instance_names()));
  gen->add_option("--n", o.gen.n, "Number of points")->check(CLI::PositiveNumber);
  gen->add_option("--k", o.gen.k, "Arity")->check(CLI::PositiveNumber);
  gen->add_option("--m", o.gen.m, "Columns or ambient dimension")->check(CLI::PositiveNumber);
  gen->add_option("--seed", o.gen.seed, "RNG seed");
  gen->add_option("--points", o.points, "Point-cloud file for perimeter / maxside");
  add_output(gen);

  Run run;
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << kmetric::io::dump(error_object("usage", e.what()));
    return kInputError;
  }

  std::vector<std::string> command(argv, argv + argc);
  command[0] = "kmetric";
  run.report["command"] = command;

  const auto start = std::chrono::steady_clock::now();
  try {
    if (verify->parsed()) cmd_verify(run, o);
    else if (min_chain->parsed()) cmd_min_chain(run, o);
    else if (frechet->parsed()) cmd_frechet(run, o);
    else if (jl->parsed()) cmd_jl(run, o);
    else if (l2lp->parsed()) cmd_l2lp(run, o);
    else if (eval->parsed()) cmd_eval(run, o);
    else if (volume->parsed()) cmd_volume(run, o);
    else if (apex->parsed()) cmd_apex(run, o);
    else if (hyper->parsed()) cmd_hypertree(run, o);
    else if (gen->parsed()) cmd_gen(run, o);
  } catch (const kmetric::ParseError& e) {
    Json err = error_object("parse", e.what());
    err["file"] = e.file();
    err["line"] = e.line();
    err["field"] = e.field();
    std::cout << kmetric::io::dump(err);
    return kInputError;
  } catch (const kmetric::ArgumentError& e) {
    std::cout << kmetric::io::dump(error_object("argument", e.what()));
    return kInputError;
  } catch (const kmetric::SizeError& e) {
    std::cout << kmetric::io::dump(error_object("size", e.what()));
    return kInputError;
  } catch (const kmetric::NotStrongError& e) {
    std::cout << kmetric::io::dump(error_object("not_strong", e.what()));
    return kNegative;
  } catch (const kmetric::BoundaryNotFillable& e) {
    std::cout << kmetric::io::dump(error_object("boundary_not_fillable", e.what()));
    return kNegative;
  } catch (const kmetric::SolverError& e) {
    std::cout << kmetric::io::dump(error_object("solver", e.what()));
    return kSolverError;
  } catch (const std::exception& e) {
    std::cout << kmetric::io::dump(error_object("internal", e.what()));
    return kSolverError;
  }
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);

  run.report["inputs"] = run.inputs;
  run.report["results"] = run.results;
  run.report["timing_ms"] = elapsed.count();
  std::cout << kmetric::io::dump(run.report);
  return run.exit_code;
}
