#ifndef MKU_ERRORS_HPP_
#define MKU_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace mku {

/* Error taxonomy. Exit-code mapping for the CLI lives in tools/minkunit.cpp:
 * certified = 0, undecided/precision = 2, invalid fixture = 3, excluded
 * case = 4. Everything else is an internal error (1). */

struct error : std::runtime_error {
    explicit error(std::string const & m) : std::runtime_error(m) {}
};

/* Numeric verdict could not be reached at the current working precision.
 * Drivers catch this and retry at doubled precision. */
struct undecided : error {
    explicit undecided(std::string const & m) : error(m) {}
};

/* Escalation reached the precision ceiling without a verdict. */
struct precision_exhausted : error {
    explicit precision_exhausted(std::string const & m) : error(m) {}
};

struct division_by_zero : error {
    explicit division_by_zero(std::string const & m) : error(m) {}
};

struct not_invertible : error {
    explicit not_invertible(std::string const & m) : error(m) {}
};

struct not_a_unit : error {
    explicit not_a_unit(std::string const & m) : error(m) {}
};

struct invalid_fixture : error {
    explicit invalid_fixture(std::string const & m) : error(m) {}
};

/* A claim that theory guarantees failed numerically or exactly: indicates
 * either a broken fixture or a bug, never a tolerance issue. */
struct verification_failed : error {
    explicit verification_failed(std::string const & m) : error(m) {}
};

struct structure_violation : error {
    explicit structure_violation(std::string const & m) : error(m) {}
};

/* An enclosure overlapped more than one certified candidate. Finer
 * enclosures resolve this, so it escalates like undecided. */
struct ambiguous_match : undecided {
    explicit ambiguous_match(std::string const & m) : undecided(m) {}
};

struct not_normal : error {
    explicit not_normal(std::string const & m) : error(m) {}
};

struct hypothesis_violated : error {
    explicit hypothesis_violated(std::string const & m) : error(m) {}
};

struct rank_deficient : error {
    explicit rank_deficient(std::string const & m) : error(m) {}
};

/* A determinant enclosure contains zero where theory promises otherwise;
 * escalates like undecided because a tighter enclosure may exclude it. */
struct singular_within_tolerance : undecided {
    explicit singular_within_tolerance(std::string const & m) : undecided(m) {}
};

struct consistency_failure : error {
    explicit consistency_failure(std::string const & m) : error(m) {}
};

struct case_violation : error {
    explicit case_violation(std::string const & m) : error(m) {}
};

/* Input is structurally outside the supported setting (e.g. relative rank
 * zero, or equal relative ranks), as opposed to malformed. */
struct excluded_case : error {
    explicit excluded_case(std::string const & m) : error(m) {}
};

struct iteration_cap_exceeded : error {
    explicit iteration_cap_exceeded(std::string const & m) : error(m) {}
};

} // namespace mku

#endif
