#pragma once

#include <stdexcept>
#include <string>

namespace spanmu {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parameter or input violates an operation's precondition.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// The graph is not connected where connectivity is required.
class DisconnectedGraph : public Error {
public:
    DisconnectedGraph() : Error("graph is disconnected") {}
    using Error::Error;
};

/// A tree is not a member of T_{a,b} for the requested base.
class MembershipError : public Error {
public:
    using Error::Error;
};

/// An enumeration produced more objects than the caller allowed.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// Malformed text input (graph files, family specs, certificate documents).
class ParseError : public Error {
public:
    using Error::Error;
};

/// A structural guarantee of the construction failed; always a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace spanmu
