#pragma once

#include <stdexcept>
#include <string>

namespace diracbrush {

// Bad input values: det != 1, gcd != 1, Im tau <= 0, b = 0 where b is a divisor.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

class DeterminantError : public DomainError {
public:
    explicit DeterminantError(const std::string& what) : DomainError(what) {}
};

// (q,p) not congruent to (ab,cd) mod 2.
class ParityError : public DomainError {
public:
    explicit ParityError(const std::string& what) : DomainError(what) {}
};

// Malformed text input (rationals, matrices, complex numbers).
class ParseError : public std::invalid_argument {
public:
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

// A floating-point result failed a sanity bound, e.g. a Gauss sum that is
// not near any eighth root of unity.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace diracbrush
