#pragma once

#include <stdexcept>
#include <string>

namespace shimura {

// Base of every library-specific failure. Verification failures are never
// thrown; they are recorded in reports.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class PoleError : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

class VariableMismatch : public Error {
public:
    using Error::Error;
};

class DegenerateParameter : public Error {
public:
    using Error::Error;
};

class ZeroTheta : public Error {
public:
    using Error::Error;
};

class NotAHook : public Error {
public:
    using Error::Error;
};

class DegenerateNormalization : public Error {
public:
    using Error::Error;
};

class InconsistentSystem : public Error {
public:
    using Error::Error;
};

class UnderdeterminedSystem : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace shimura
