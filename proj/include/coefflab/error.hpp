#pragma once

#include <stdexcept>
#include <string>

namespace coefflab {

// Base for every error the library raises on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ZeroConstantTerm : public Error {
public:
    using Error::Error;
};

class WindowTooShort : public Error {
public:
    using Error::Error;
};

class InvalidWindow : public Error {
public:
    using Error::Error;
};

class UnsupportedId : public Error {
public:
    using Error::Error;
};

class UnknownName : public Error {
public:
    using Error::Error;
};

class EvaluationFailure : public Error {
public:
    using Error::Error;
};

class CoefficientMapMismatch : public Error {
public:
    using Error::Error;
};

class UnknownConstant : public Error {
public:
    using Error::Error;
};

class UnknownTheorem : public Error {
public:
    using Error::Error;
};

class InfeasibleStart : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

} // namespace coefflab
