#pragma once

#include <string>
#include <vector>

#include "parfpt/engine.hpp"

namespace parfpt {

// The six bench strategies, in their canonical order:
//   bussbrute                  buss kernel, then exact brute force on the kernel
//   b1-edge                    standard edge branching
//   bstar-matching             shallow matching-based branching
//   b1-degree                  degree->=3 branching with direct degree-2 solving
//   bstar-matching-interleave  init cascade (buss,lp), shallow matching
//                              branching, buss kernel at every node
//   cascade-b1-degree          init cascade (buss,lp), then degree branching
std::vector<std::string> bench_strategy_names();

// Engine configuration for an engine-backed strategy; throws for bussbrute,
// which does not run the engine.
RunConfig strategy_config(const std::string& name, ExecMode exec, int workers,
                          Accounting accounting);

// Runs any strategy, including bussbrute (kernel + exhaustive search over
// the kernel output, which must stay within the oracle's n <= 24 guard).
std::pair<Verdict, RunMetrics> run_strategy(const std::string& name, const Instance& inst,
                                            ExecMode exec, int workers, Accounting accounting);

// Fingerprint of the logical strategy run, stable across exec modes.
std::string strategy_fingerprint(const std::string& name, ExecMode exec, int workers,
                                 Accounting accounting);

}  // namespace parfpt
