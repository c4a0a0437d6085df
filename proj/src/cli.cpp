#include "labres/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "labres/bench.hpp"
#include "labres/clausify.hpp"
#include "labres/oracle.hpp"
#include "labres/parser.hpp"
#include "labres/printer.hpp"

namespace labres {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json subst_json(const Substitution& s) {
  nlohmann::json j;
  j["proper"] = nlohmann::json::object();
  for (const auto& [name, img] : s.proper) j["proper"][name] = print_arg(img);
  j["pron"] = nlohmann::json::object();
  for (const auto& [id, pb] : s.pron) {
    nlohmann::json e;
    e["label"] = pb.label;
    e["image"] = print_arg(pb.image);
    j["pron"][id] = e;
  }
  return j;
}

void print_trace(std::ostream& out, const ProofResult& r, TraceFormat fmt) {
  if (fmt == TraceFormat::None) return;
  if (fmt == TraceFormat::Text) {
    out << "trace:\n";
    for (const auto& s : r.trace) {
      out << "  [" << s.resolvent_id << "] resolve #" << s.neg_parent << " (neg";
      for (int k : s.neg_lits) out << " " << k;
      out << ") with #" << s.pos_parent << " (pos";
      for (int k : s.pos_lits) out << " " << k;
      out << ") mgu " << print_substitution(s.mgu) << " -> " << print_clause(s.resolvent)
          << "\n";
    }
    return;
  }
  for (const auto& s : r.trace) {
    nlohmann::json j;
    j["resolvent_id"] = s.resolvent_id;
    j["neg_parent"] = s.neg_parent;
    j["neg_literals"] = s.neg_lits;
    j["pos_parent"] = s.pos_parent;
    j["pos_literals"] = s.pos_lits;
    j["renaming"] = subst_json(s.renaming);
    j["mgu"] = subst_json(s.mgu);
    j["resolvent"] = print_clause(s.resolvent);
    out << j.dump() << "\n";
  }
}

const char* status_name(ProofStatus st) {
  switch (st) {
    case ProofStatus::Refuted: return "refuted";
    case ProofStatus::Saturated: return "saturated";
    case ProofStatus::DepthExhausted: return "depth-exhausted";
  }
  return "?";
}

std::string binding_map_str(const std::map<std::string, std::string>& m) {
  std::string out = "{";
  bool first = true;
  for (const auto& [id, name] : m) {
    if (!first) out += ", ";
    out += id + " -> " + name;
    first = false;
  }
  return out + "}";
}

int cmd_annotate(const Sequent& s, std::ostream& out) {
  AnnotateResult ann = annotate_sequent(s);
  for (size_t i = 0; i < ann.formulas.size(); ++i) {
    bool is_conclusion = i + 1 == ann.formulas.size();
    out << (is_conclusion ? "negated conclusion: " : "premise: ")
        << pretty_print(ann.formulas[i]) << "\n";
  }
  for (const auto& d : ann.diagnostics) out << "warning: " << d << "\n";
  return 0;
}

int cmd_clausify(const Sequent& s, const ClausifyOptions& opts, std::ostream& out) {
  ClausifyResult cr = clausify_sequent(s, opts);
  for (const auto& c : cr.clauses) out << print_clause(c) << "\n";
  for (const auto& d : cr.annotation.diagnostics) out << "warning: " << d << "\n";
  return 0;
}

int cmd_prove(const Sequent& s, const RunConfig& cfg, std::ostream& out) {
  ClausifyResult cr = clausify_sequent(s, {cfg.nonempty_domain});
  for (const auto& d : cr.annotation.diagnostics) out << "warning: " << d << "\n";
  SearchLimits limits{cfg.max_depth, cfg.max_steps};
  ProofResult r = prf_search(cr.clauses, limits);
  out << "result: " << status_name(r.status) << "\n";
  if (r.status == ProofStatus::Refuted) {
    out << "bindings: " << print_report(r.report) << "\n";
    print_trace(out, r, cfg.trace);
  }
  if (cfg.all_bindings) {
    auto reports = enumerate_bindings(cr.clauses, limits);
    out << "all bindings (" << reports.size() << "):\n";
    for (const auto& rep : reports) out << "  " << print_report(rep) << "\n";
  }
  return r.status == ProofStatus::Refuted ? 0 : 1;
}

int cmd_bindings(const Sequent& s, const RunConfig& cfg, std::ostream& out) {
  ClausifyResult cr = clausify_sequent(s, {cfg.nonempty_domain});
  for (const auto& d : cr.annotation.diagnostics) out << "warning: " << d << "\n";
  auto reports = enumerate_bindings(cr.clauses, SearchLimits{cfg.max_depth, cfg.max_steps});
  if (reports.empty()) {
    out << "no bindings\n";
    return 1;
  }
  for (const auto& rep : reports) out << print_report(rep) << "\n";
  return 0;
}

int cmd_oracle(const Sequent& s, const RunConfig& cfg, std::ostream& out) {
  CompareResult r = compare_with_labeled(s, SearchLimits{cfg.max_depth, cfg.max_steps},
                                         {cfg.nonempty_domain});
  for (const auto& d : r.diagnostics) out << "warning: " << d << "\n";
  out << "oracle bindings (" << r.oracle_bindings.size() << "):\n";
  for (const auto& b : r.oracle_bindings) out << "  " << binding_map_str(b) << "\n";
  out << "labeled bindings (" << r.labeled_bindings.size() << "):\n";
  for (const auto& b : r.labeled_bindings) out << "  " << binding_map_str(b) << "\n";
  out << (r.agree ? "agree" : "disagree") << "\n";
  return r.agree ? 0 : 1;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out) {
  out << bench_header() << "\n";
  BenchRow row = run_bench(cfg.bench_k, SearchLimits{cfg.max_depth, cfg.max_steps});
  out << format_row(row) << "\n";
  return 0;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == "bench") return cmd_bench(config, out);

    Sequent s = parse_sequent(read_file(config.input_path));
    if (config.command == "annotate") return cmd_annotate(s, out);
    if (config.command == "clausify") return cmd_clausify(s, {config.nonempty_domain}, out);
    if (config.command == "prove") return cmd_prove(s, config, out);
    if (config.command == "bindings") return cmd_bindings(s, config, out);
    if (config.command == "oracle") return cmd_oracle(s, config, out);
    err << "unknown command: " << config.command << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "parse error at " << e.span.begin << "-" << e.span.end << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace labres
