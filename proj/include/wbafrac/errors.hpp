#pragma once

#include <stdexcept>
#include <string>

namespace wbafrac {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class FieldMismatch : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// A product or coproduct would leave the materialized range of a graded object.
class DegreeOverflow : public Error {
public:
    using Error::Error;
};

/// A precondition on algebraic structure failed (not group-like, not central, ...).
class StructureError : public Error {
public:
    using Error::Error;
};

}  // namespace wbafrac
