#pragma once

#include <iosfwd>
#include <string>

#include "labres/resolve.hpp"

namespace labres {

enum class TraceFormat { None, Text, Records };

struct RunConfig {
  std::string command;  // annotate | clausify | prove | bindings | oracle | bench
  std::string input_path;
  int max_depth = 12;
  long max_steps = 200000;
  bool all_bindings = false;
  bool nonempty_domain = false;
  TraceFormat trace = TraceFormat::None;
  int bench_k = 20;
};

// Exit status: 0 refuted/agree, 1 not refuted/disagree, 2 usage or parse error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace labres
