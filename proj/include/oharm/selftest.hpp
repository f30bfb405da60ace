#pragma once

#include <ostream>

namespace oharm {

/* Runs the full acceptance suite, printing one CHECK line per criterion
 * (plus detail lines). Returns true iff every criterion passed. Bounds are
 * fixed; long-range explorations beyond them are reachable through the CLI
 * verbs with explicit flags. */
bool run_acceptance(std::ostream& out);

}  // namespace oharm
