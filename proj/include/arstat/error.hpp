#pragma once

#include <stdexcept>
#include <string>

namespace arstat {

// Base for every error raised by the library. The CLI maps all of these
// (except CheckFailure) to exit status 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

// The requested truncation cannot meet the tail tolerance.
class TruncationError : public Error {
public:
    TruncationError(const std::string& what, int suggested_cap)
        : Error(what), suggested_cap_(suggested_cap) {}
    int suggested_cap() const noexcept { return suggested_cap_; }

private:
    int suggested_cap_;
};

// The radial cutoff leaves an integration tail above tolerance.
class QuadratureDomainError : public Error {
public:
    QuadratureDomainError(const std::string& what, double suggested_r_cut)
        : Error(what), suggested_r_cut_(suggested_r_cut) {}
    double suggested_r_cut() const noexcept { return suggested_r_cut_; }

private:
    double suggested_r_cut_;
};

}  // namespace arstat
