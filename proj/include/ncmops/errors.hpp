#pragma once

#include <stdexcept>
#include <string>

namespace ncmops {

// Base class for all library errors the CLI maps onto exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input: bad JSON shape, bad word or rational literals, tables or
// operator data violating their invariants.
struct ParseError : Error {
    using Error::Error;
};

// A query needs moments (or tensor levels) beyond what the input provides.
struct BoundError : Error {
    using Error::Error;
};

// A Hankel construction met a vanishing basis determinant: the state is not
// faithful at the reported degree, so the determinantal family is undefined.
struct NotFaithfulError : Error {
    NotFaithfulError(int degree_, const std::string& what) : Error(what), degree(degree_) {}
    int degree;  // smallest degree whose Gram matrix is singular
};

}  // namespace ncmops
