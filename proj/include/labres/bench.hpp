#pragma once

#include <string>
#include <vector>

#include "labres/formula.hpp"
#include "labres/resolve.hpp"

namespace labres {

struct BenchRow {
  int k = 0;
  long eager_instances = 0;    // disambiguations attempted by the oracle path
  long labeled_instances = 0;  // distinct global pronoun contexts entered
  double eager_ms = 0.0;
  double labeled_ms = 0.0;
  bool both_refute = false;
};

// Synthetic discourse with k indefinites and two pronouns whose conclusion
// is provable under exactly one binding pair. The eager path disambiguates
// up front (k*k instances); the labeled path interleaves binding with
// deduction.
Sequent bench_sequent(int k);

BenchRow run_bench(int k, const SearchLimits& limits);

std::string bench_header();
std::string format_row(const BenchRow& row);

}  // namespace labres
