// pipeline.cpp - marker passing, evidence filter, network evaluation and approval

#include "mprec/pipeline.hpp"

#include <exception>
#include <sstream>

#include "mprec/numfmt.hpp"
#include "mprec/sexpr.hpp"

namespace mprec {

InputStream parse_input(const KnowledgeBase& kb, std::string_view text) {
  InputStream in;
  for (const SExpr& form : read_forms(text)) {
    auto name_at = [&form](std::size_t k) -> const std::string& {
      const SExpr& e = form.items[k];
      if (!e.is_atom || !is_name(e.atom)) throw ParseError(e.pos, "expected a name");
      return e.atom;
    };
    auto schema_at = [&](std::size_t k) {
      auto s = kb.find(name_at(k));
      if (!s) throw ParseError(form.items[k].pos, "unknown schema '" + form.items[k].atom + "'");
      return *s;
    };
    std::string_view head = form.head();
    if (head == "inst") {
      if (form.items.size() != 3 && form.items.size() != 5) throw ParseError(form.pos, "inst takes ID SCHEMA [:belief FLOAT]");
      Observation o{name_at(1), schema_at(2), 1.0};
      if (form.items.size() == 5) {
        if (!form.items[3].is_atom || form.items[3].atom != ":belief") throw ParseError(form.items[3].pos, "expected :belief");
        o.belief = parse_probability(form.items[4]);
      }
      in.registry.observed.insert(o.instance);
      in.observations.push_back(std::move(o));
    } else if (head == "corroborate") {
      if (form.items.size() != 3) throw ParseError(form.pos, "corroborate takes SCHEMA SLOT");
      in.registry.corroborate(schema_at(1), name_at(2));
    } else {
      throw ParseError(form.pos, "expected an inst or corroborate form");
    }
  }
  return in;
}

RunReport run(const KnowledgeBase& kb, const RunConfig& config, const InputStream& input) {
  MarkerEngine engine(kb, config.engine);
  std::vector<EmittedPath> emitted;
  for (const Observation& o : input.observations) {
    engine.seed(o);
    for (EmittedPath& e : engine.spread()) emitted.push_back(std::move(e));
  }

  RunReport report;
  report.records.resize(emitted.size());
  std::vector<std::exception_ptr> errors(emitted.size());
  const auto n = static_cast<std::int64_t>(emitted.size());

  // Records are independent; each slot is written by exactly one iteration.
  #pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      const EmittedPath& e = emitted[i];
      PathRecord& r = report.records[i];
      FreshNames names{"p" + std::to_string(i + 1) + "-"};
      StatementSet rs = relevant_statements(e.path, kb, names);
      r.path = render_path(kb, e.path);
      r.sc = e.score.value;
      r.rs = render_statements(kb, rs, " ");
      r.filtered = !evidence_filter(kb, rs, input.registry);
      if (r.filtered) continue;
      VertebrateNetwork net = build_network(kb, e.path, rs);
      Cpts cpts = default_cpts(kb, net, config.gamma1, config.gamma0);
      try {
        Posterior post = exact_posterior(kb, net, cpts, Exec::Serial);
        r.evaluation = Evaluation::Evaluated;
        r.posterior = post.joint;
        r.residual = post.residual;
        r.approved = approve(net, post.joint, config.engine.approval_ratio);
      } catch (const EvaluationTooLarge&) {
        r.evaluation = Evaluation::TooLarge;
      }
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }

  for (const PathRecord& r : report.records) {
    ++report.counters.reported;
    if (r.sc < config.engine.full_threshold) continue;
    ++report.counters.asserted;
    if (r.evaluation != Evaluation::Evaluated) continue;
    ++report.counters.evaluated;
    if (r.approved) ++report.counters.approved;
  }
  return report;
}

RunReport run(const KnowledgeBase& kb, const RunConfig& config, std::string_view text) {
  return run(kb, config, parse_input(kb, text));
}

std::string render_report(const RunReport& report) {
  std::ostringstream out;
  out << "; reported: paths emitted by the marker passer\n"
         "; asserted: reported paths with sc >= full-threshold (no secondary filters are applied)\n"
         "; evaluated: asserted paths that passed the evidence filter and fit the enumeration guard\n"
         "; approved: evaluated paths whose posterior is at least approval-ratio times the plan prior\n";
  for (const PathRecord& r : report.records) {
    out << "path " << r.path << '\n';
    out << "sc " << format_number(r.sc) << '\n';
    out << "rs " << r.rs << '\n';
    out << "filtered " << (r.filtered ? "yes" : "no") << '\n';
    switch (r.evaluation) {
      case Evaluation::Evaluated:
        out << "posterior " << format_number(r.posterior) << '\n';
        out << "residual " << format_number(r.residual) << '\n';
        break;
      case Evaluation::TooLarge:
        out << "posterior skipped: too large\nresidual -\n";
        break;
      case Evaluation::NotEvaluated:
        out << "posterior -\nresidual -\n";
        break;
    }
    out << "approved " << (r.approved ? "yes" : "no") << "\n\n";
  }
  const RunCounters& c = report.counters;
  out << "counters reported=" << c.reported << " asserted=" << c.asserted << " evaluated=" << c.evaluated
      << " approved=" << c.approved << '\n';
  return out.str();
}

}  // namespace mprec
