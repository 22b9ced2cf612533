// mprec_cli.cpp - command-line driver for the plan-recognition library

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mprec/bayes.hpp"
#include "mprec/kb.hpp"
#include "mprec/marker.hpp"
#include "mprec/numfmt.hpp"
#include "mprec/path.hpp"
#include "mprec/pipeline.hpp"
#include "mprec/scoring.hpp"
#include "mprec/semantics.hpp"
#include "mprec/sexpr.hpp"

namespace {

using namespace mprec;

struct Options {
  std::string kb_path;
  std::string input_path;
  std::string output_path;
  std::string path_text;
  std::string beliefs;
  std::string start;
  std::string end;
  double threshold = 30.0;
  double full_threshold = -1.0;  // defaults to threshold^2
  int max_depth = 10;
  double approval_ratio = 1000.0;
  double gamma1 = 1.0;
  double gamma0 = 1e-9;
  std::uint64_t seed = 1;
  double density = 1.0;
  int stories = 10;
};

class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const Options& o, const std::string& text) {
  if (o.output_path.empty() || o.output_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output_path, std::ios::binary);
  if (!out) throw DomainError("cannot write '" + o.output_path + "'");
  out << text;
}

KnowledgeBase need_kb(const Options& o) {
  if (o.kb_path.empty()) throw DomainError("--kb is required");
  return load_kb(slurp(o.kb_path));
}

RunConfig run_config(const Options& o) {
  RunConfig c;
  c.engine.half_threshold = o.threshold;
  c.engine.full_threshold = o.full_threshold < 0 ? o.threshold * o.threshold : o.full_threshold;
  c.engine.max_depth = o.max_depth;
  c.engine.approval_ratio = o.approval_ratio;
  c.gamma1 = o.gamma1;
  c.gamma0 = o.gamma0;
  return c;
}

Path need_path(const KnowledgeBase& kb, const Options& o) {
  std::string text = o.path_text.empty() ? slurp(o.input_path) : o.path_text;
  Path p = parse_path(kb, text);
  if (!o.beliefs.empty()) {
    auto comma = o.beliefs.find(',');
    if (comma == std::string::npos) throw DomainError("--beliefs takes two comma-separated values");
    SExpr a{true, o.beliefs.substr(0, comma), {}, {}};
    SExpr b{true, o.beliefs.substr(comma + 1), {}, {}};
    p.start.belief = parse_probability(a);
    p.end.belief = parse_probability(b);
  }
  if (!validate(p)) throw DomainError("path violates the path grammar");
  return p;
}

Observation need_observation(const KnowledgeBase& kb, const std::string& text, double belief) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw DomainError("expected ID:SCHEMA, got '" + text + "'");
  return Observation{text.substr(0, colon), kb.id(text.substr(colon + 1)), belief};
}

int cmd_check(const Options& o) {
  KnowledgeBase kb = need_kb(o);
  std::size_t roles = 0;
  for (SchemaId s : kb.all()) roles += kb.schema(s).slots.size();
  emit(o, "ok schemas=" + std::to_string(kb.size()) + " roles=" + std::to_string(roles) +
              " eq-prior=" + format_number(kb.eq_prior()) + "\n");
  return 0;
}

int cmd_run(const Options& o) {
  KnowledgeBase kb = need_kb(o);
  RunReport report = run(kb, run_config(o), slurp(o.input_path));
  emit(o, render_report(report));
  return 0;
}

int cmd_score(const Options& o) {
  KnowledgeBase kb = need_kb(o);
  Path p = need_path(kb, o);
  emit(o, format_number(score_path(kb, p).value) + "\n");
  return 0;
}

int cmd_translate(const Options& o) {
  KnowledgeBase kb = need_kb(o);
  Path p = need_path(kb, o);
  StatementSet s = statements_of(p);
  StatementSet rs = relevant_statements(s, kb);
  emit(o, "; statements\n" + render_statements(kb, s) + "\n; relevant statements\n" + render_statements(kb, rs) + "\n");
  return 0;
}

int cmd_network(const Options& o) {
  KnowledgeBase kb = need_kb(o);
  Path p = need_path(kb, o);
  VertebrateNetwork net = build_network(kb, p, relevant_statements(p, kb));
  emit(o, render_network(kb, net, default_cpts(kb, net, o.gamma1, o.gamma0)));
  return 0;
}

int cmd_eval(const Options& o) {
  KnowledgeBase kb = need_kb(o);
  Path p = need_path(kb, o);
  VertebrateNetwork net = build_network(kb, p, relevant_statements(p, kb));
  Posterior post = exact_posterior(kb, net, default_cpts(kb, net, o.gamma1, o.gamma0));
  std::ostringstream out;
  out << "sc " << format_number(score_path(kb, p).value) << '\n'
      << "joint " << format_number(post.joint) << '\n'
      << "residual " << format_number(post.residual) << '\n'
      << "plan-prior " << format_number(plan_prior(net)) << '\n'
      << "approved " << (approve(net, post.joint, o.approval_ratio) ? "yes" : "no") << '\n';
  emit(o, out.str());
  return 0;
}

int cmd_paths(const Options& o) {
  KnowledgeBase kb = need_kb(o);
  double b1 = 1.0, b2 = 1.0;
  if (!o.beliefs.empty()) {
    auto comma = o.beliefs.find(',');
    if (comma == std::string::npos) throw DomainError("--beliefs takes two comma-separated values");
    b1 = parse_probability(SExpr{true, o.beliefs.substr(0, comma), {}, {}});
    b2 = parse_probability(SExpr{true, o.beliefs.substr(comma + 1), {}, {}});
  }
  Observation a = need_observation(kb, o.start, b1);
  Observation b = need_observation(kb, o.end, b2);
  std::ostringstream out;
  for (const Path& p : enumerate_paths_oracle(kb, a, b, o.max_depth)) {
    out << format_number(score_path(kb, p).value) << ' ' << render_path(kb, p) << '\n';
  }
  emit(o, out.str());
  return 0;
}

int cmd_synth(const Options& o) {
  SynthParams params;
  params.corroboration_density = o.density;
  params.stories = o.stories;
  Corpus c = synth_corpus(o.seed, params);
  if (o.output_path.empty() || o.output_path == "-") {
    std::ostringstream out;
    out << c.kb_text;
    for (std::size_t k = 0; k < c.stories.size(); ++k) out << "; story " << k + 1 << " planted " << c.planted[k] << '\n' << c.stories[k];
    std::cout << out.str();
    return 0;
  }
  namespace fs = std::filesystem;
  fs::create_directories(o.output_path);
  auto write = [](const fs::path& p, const std::string& text) {
    std::ofstream f(p, std::ios::binary);
    if (!f) throw DomainError("cannot write '" + p.string() + "'");
    f << text;
  };
  write(fs::path(o.output_path) / "corpus.kb", c.kb_text);
  for (std::size_t k = 0; k < c.stories.size(); ++k) {
    write(fs::path(o.output_path) / ("story-" + std::to_string(k + 1) + ".obs"), c.stories[k]);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Marker-passing plan recognition with spinal-contribution pruning"};
  app.require_subcommand(1, 1);
  Options o;

  auto common = [&o](CLI::App* sub) {
    sub->add_option("--kb", o.kb_path, "Knowledge base file");
    sub->add_option("--input", o.input_path, "Input file (default stdin)");
    sub->add_option("--output", o.output_path, "Output file (default stdout)");
    sub->add_option("--threshold", o.threshold, "Half-path threshold T")->check(CLI::NonNegativeNumber);
    sub->add_option("--full-threshold", o.full_threshold, "Full-path threshold (default T^2)")->check(CLI::NonNegativeNumber);
    sub->add_option("--max-depth", o.max_depth, "Maximum links per path")->check(CLI::PositiveNumber);
    sub->add_option("--approval-ratio", o.approval_ratio, "Posterior / plan prior needed for approval")->check(CLI::NonNegativeNumber);
    sub->add_option("--gamma1", o.gamma1, "P(E^I | all equalities hold)");
    sub->add_option("--gamma0", o.gamma0, "P(E^I | some equality fails)");
    sub->add_option("--seed", o.seed, "Random seed");
  };
  auto with_path = [&o](CLI::App* sub) {
    sub->add_option("--path", o.path_text, "Path in canonical syntax (default: read from --input)");
    sub->add_option("--beliefs", o.beliefs, "Endpoint beliefs as B1,B2");
  };

  auto* check = app.add_subcommand("check", "Load a KB and report its invariants");
  auto* runc = app.add_subcommand("run", "Full recognition pass over an observation stream");
  auto* score = app.add_subcommand("score", "Spinal contribution of a path");
  auto* translate = app.add_subcommand("translate", "Statements and relevant statements of a path");
  auto* network = app.add_subcommand("network", "Dump the Bayesian network of a path");
  auto* eval = app.add_subcommand("eval", "Exact posterior of a path's network");
  auto* paths = app.add_subcommand("paths", "Enumerate all valid paths between two observations");
  auto* synth = app.add_subcommand("synth", "Write a synthetic corpus (--output names a directory)");
  for (auto* sub : {check, runc, score, translate, network, eval, paths, synth}) common(sub);
  for (auto* sub : {score, translate, network, eval}) with_path(sub);
  paths->add_option("--start", o.start, "First observation as ID:SCHEMA")->required();
  paths->add_option("--end", o.end, "Second observation as ID:SCHEMA")->required();
  paths->add_option("--beliefs", o.beliefs, "Endpoint beliefs as B1,B2");
  synth->add_option("--density", o.density, "Corroboration density")->check(CLI::Range(0.0, 1.0));
  synth->add_option("--stories", o.stories, "Number of stories")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) return cmd_check(o);
    if (*runc) return cmd_run(o);
    if (*score) return cmd_score(o);
    if (*translate) return cmd_translate(o);
    if (*network) return cmd_network(o);
    if (*eval) return cmd_eval(o);
    if (*paths) return cmd_paths(o);
    if (*synth) return cmd_synth(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
