#ifndef EVSCHED_ERRORS_HPP
#define EVSCHED_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace evsched {

// Violated precondition or invariant of a documented contract.
struct contract_error : std::logic_error {
    explicit contract_error(const std::string& msg) : std::logic_error(msg) {}
};

// Unreadable/unwritable file.
struct io_error : std::runtime_error {
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input text present but not parseable as the expected format.
struct format_error : std::runtime_error {
    explicit format_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Optimizer failed to converge within its iteration cap. Distinct from an
// infeasible problem, which is a regular (reportable) outcome.
struct solver_error : std::runtime_error {
    explicit solver_error(const std::string& msg) : std::runtime_error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw contract_error(msg);
}

}  // namespace evsched

#endif
