#ifndef MODFORMS_ERRORS_HPP
#define MODFORMS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace modforms {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two q-expansions carry weight tags that disagree.
struct WeightMismatch : Error {
    using Error::Error;
};

// An operation required a weight tag that is absent.
struct MissingWeight : Error {
    using Error::Error;
};

// Weight outside the operation's domain (odd, negative, or k = 2 for E_k).
struct BadWeight : Error {
    using Error::Error;
};

// f flagged cuspidal at a weight with dim S = 0.
struct BadCuspidality : Error {
    using Error::Error;
};

struct InsufficientPrecision : Error {
    using Error::Error;
};

// Cusp space is zero-dimensional where a nontrivial one was required.
struct EmptySpace : Error {
    using Error::Error;
};

// A quantity that must be an integer (Hecke matrix entry, charpoly
// coefficient) came out fractional; signals an upstream bug.
struct NonIntegral : Error {
    using Error::Error;
};

// A q-expansion failed membership certification in a space.
struct NotMember : Error {
    using Error::Error;
};

struct ZeroForm : Error {
    using Error::Error;
};

// bernoulli() called with an odd index > 1.
struct OddIndex : Error {
    using Error::Error;
};

// certify() with a cuspidal f whose cusp space has dimension > 1:
// no canonical rational eigenform exists there.
struct UnsupportedCuspidalF : Error {
    using Error::Error;
};

struct CacheError : Error {
    using Error::Error;
};

} // namespace modforms

#endif
