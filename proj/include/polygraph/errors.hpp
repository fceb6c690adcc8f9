#ifndef POLYGRAPH_ERRORS_HPP
#define POLYGRAPH_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace polygraph {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Composite modulus passed to Field. Carries a hint when the input is a
// proper prime power, since F_{p^n} support is a frequent misunderstanding.
struct NotPrimeError : Error {
    std::uint64_t value;
    bool is_prime_power;

    NotPrimeError(std::uint64_t v, bool prime_power)
        : Error(prime_power
                    ? std::to_string(v) +
                          " is not prime (it is a proper prime power; extension fields are not supported)"
                    : std::to_string(v) + " is not prime"),
          value(v),
          is_prime_power(prime_power) {}
};

struct DivisionByZeroError : Error {
    DivisionByZeroError() : Error("division by zero") {}
};

// Bad argument or unsupported parameter combination.
struct PreconditionError : Error {
    using Error::Error;
};

// Work-size guard tripped (polynomial degree, census family size, graph size).
struct BudgetError : Error {
    using Error::Error;
};

// Input tree violates the vertex shape required by quadratic labelling.
struct ShapeError : Error {
    using Error::Error;
};

}  // namespace polygraph

#endif
