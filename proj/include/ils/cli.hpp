#pragma once
// Command-line front end. Exit codes: 0 success (including query verdicts),
// 1 verification failure or internal error, 2 construct infeasible/unresolved
// and check violation, 64 malformed input (diagnostic names the offending
// flag or field on stderr).

namespace ils {

int run_cli(int argc, char** argv);

}  // namespace ils
