#pragma once

#include <stdexcept>
#include <string>

namespace qsig {

// Malformed data reaching the library boundary: unreadable matrix text, a
// "hermitian" matrix that is not conjugate-symmetric, a zero denominator.
// The CLI reports these on stderr and exits with status 2.
class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Well-formed data that violates a mathematical precondition of the requested
// operation (singular surgery matrix where invertibility is required, the zero
// polynomial handed to the root isolator, ...).  CLI exit status 3.
class precondition_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The adaptive working precision reached its ceiling before a numerical sign
// could be certified.  The ceiling (bits) can be raised via the environment
// variable QSIG_PREC_CEILING; the default is generous, so seeing this usually
// means the input is vastly larger than anything this library targets.
class precision_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace qsig
