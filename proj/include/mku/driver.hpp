#ifndef MKU_DRIVER_HPP_
#define MKU_DRIVER_HPP_

#include <string>
#include <vector>

#include "mku/fixture.hpp"

namespace mku {

/* One command invocation, already parsed. An empty unit subset means the
 * first N-1 fixture units, where N is the number of archimedean places.
 * `precision` starts the escalation ladder, `max_precision` caps it. */
struct RunOptions {
    std::string field_path;
    int place = 0;
    std::vector<int> unit_subset;
    std::string subfield;
    long precision = 128;
    long max_precision = 8192;
    bool text = false;
};

/* Exit contract: 0 certified, 2 undecided at the precision ceiling,
 * 3 invalid fixture, 4 excluded case, 1 anything else. Output is the
 * full certificate (JSON by default) or an error report in the same
 * format; identical invocations produce identical bytes. */
struct RunResult {
    int exit_code = 0;
    std::string output;
};

RunResult run_info(RunOptions const & opt);
RunResult run_special(RunOptions const & opt);
RunResult run_relative(RunOptions const & opt);

/* Re-derives every claim of a previously emitted certificate from scratch
 * (same command, fixture, and options) and compares the result. */
RunResult run_verify(std::string const & certificate_path, bool text);

/* Built-in corpus: each entry is a fixture plus the commands exercised on
 * it by the selftest, with the verdict each one must produce. */
struct SelftestCheck {
    std::string fixture_label;
    std::string command; /* "special" or "relative" */
    int place = 0;
    std::string subfield;
    int expected_exit = 0;
};

std::vector<Fixture> bundled_corpus();
std::vector<SelftestCheck> selftest_plan();

RunResult run_selftest(long precision, long max_precision, bool text);

} // namespace mku

#endif
