#pragma once

#include <stdexcept>
#include <string>

namespace cubictsp {

// Base class of every exception thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed graph or pole data: endpoint out of range, loop, parallel edge,
// missing edge, or an operation whose result would not be a simple graph.
class StructuralError : public Error {
public:
    using Error::Error;
};

// Pole operation applied to a pole of the wrong arity.
class ArityError : public Error {
public:
    using Error::Error;
};

// An edge/stub subset that is not an even factor of its host.
class FactorError : public Error {
public:
    using Error::Error;
};

// A computation exceeded its configured enumeration or search budget.
class ResourceBoundError : public Error {
public:
    using Error::Error;
};

// A lemma was invoked on a pole that does not satisfy its premise.
class PremiseError : public Error {
public:
    using Error::Error;
};

// Disconnected graphs have no closed spanning walk.
class NoTourError : public Error {
public:
    using Error::Error;
};

// Parameter outside the defined domain (family index, budget, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// File format violation; messages carry "source:line" context.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace cubictsp
