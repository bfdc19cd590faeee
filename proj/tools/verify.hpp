#pragma once

#include <ostream>

namespace ghostlab::cli {

/// Runs the worked-example corpus; prints one line per check and returns
/// the number of mismatches.
int run_worked_examples(std::ostream& out);

}  // namespace ghostlab::cli
