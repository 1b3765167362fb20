#pragma once

#include <stdexcept>
#include <string>

namespace fockcb {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// exact_div found no Laurent quotient.
class DivisionNotExact : public Error {
public:
    using Error::Error;
};

class RankMismatch : public Error {
public:
    using Error::Error;
};

/// count_N called with mu != lambda + {gamma}.
class InvalidPair : public Error {
public:
    using Error::Error;
};

class NotInCrystal : public Error {
public:
    using Error::Error;
};

class PeelingUnitriangularityViolated : public Error {
public:
    using Error::Error;
};

class MissingPredecessor : public Error {
public:
    using Error::Error;
};

class OrderViolation : public Error {
public:
    using Error::Error;
};

class NotInBInfinity : public Error {
public:
    using Error::Error;
};

class NonTermination : public Error {
public:
    using Error::Error;
};

class InconsistentSystem : public Error {
public:
    using Error::Error;
};

/// The abacus window of r beads cuts off nonzero parts.
class RTooSmall : public Error {
public:
    RTooSmall(const std::string& what, int suggested)
        : Error(what), suggested_r(suggested) {}
    int suggested_r;
};

} // namespace fockcb
