#pragma once

#include <stdexcept>
#include <string>

namespace truthdisc {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DuplicateClaimError : Error {
    explicit DuplicateClaimError(const std::string& claim_id)
        : Error("duplicate claim id: " + claim_id), claim_id(claim_id) {}
    std::string claim_id;
};

struct EmptyDatasetError : Error {
    EmptyDatasetError() : Error("dataset contains no claims") {}
};

struct EmptyGoldStandardError : Error {
    EmptyGoldStandardError() : Error("ground truth is empty") {}
};

// Zero-norm trust vector in the convergence test. Callers treat this as
// "not converged" and keep iterating.
struct ZeroNormError : Error {
    ZeroNormError() : Error("zero-norm vector in convergence test") {}
};

struct NumericFailureError : Error {
    explicit NumericFailureError(const std::string& what)
        : Error("numeric failure: " + what) {}
};

struct RequiresReformatError : Error {
    explicit RequiresReformatError(const std::string& what)
        : Error("input requires reformatting: " + what) {}
};

struct SourceCountExceededError : Error {
    SourceCountExceededError(std::size_t count, std::size_t limit)
        : Error("source count " + std::to_string(count) + " exceeds limit " +
                std::to_string(limit)),
          count(count), limit(limit) {}
    std::size_t count;
    std::size_t limit;
};

struct ParseError : Error {
    ParseError(std::size_t line, const std::string& what)
        : Error("parse error at line " + std::to_string(line) + ": " + what),
          line(line) {}
    std::size_t line;
};

struct SpecError : Error {
    explicit SpecError(const std::string& what) : Error("invalid spec: " + what) {}
};

struct IoError : Error {
    explicit IoError(const std::string& what) : Error("io error: " + what) {}
};

}  // namespace truthdisc
