#pragma once

#include <stdexcept>
#include <string>

namespace syllo {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The boundary terms of two chains differ, or one of them is a bullet.
class JunctionMismatch : public Error {
public:
    using Error::Error;
};

class NoSuchOccurrence : public Error {
public:
    using Error::Error;
};

class NotReducible : public Error {
public:
    using Error::Error;
};

class UnknownTerm : public Error {
public:
    using Error::Error;
};

class TooManyTerms : public Error {
public:
    using Error::Error;
};

class TermNotInChain : public Error {
public:
    using Error::Error;
};

class UnsupportedN : public Error {
public:
    using Error::Error;
};

} // namespace syllo
