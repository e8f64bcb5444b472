#ifndef BRANGES_ERRORS_HPP
#define BRANGES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace branges {

struct NonUnitConstantTerm : std::domain_error {
    NonUnitConstantTerm() : std::domain_error("constant term is not a unit") {}
};

struct OrderTooLow : std::out_of_range {
    explicit OrderTooLow(long needed)
        : std::out_of_range("series truncation excludes z^" + std::to_string(needed))
    {
    }
};

struct ZeroPolynomial : std::invalid_argument {
    ZeroPolynomial() : std::invalid_argument("zero polynomial") {}
};

struct TableMismatch : std::runtime_error {
    TableMismatch(int k_, int n_)
        : std::runtime_error("tables differ at (k,n) = (" + std::to_string(k_) + ","
                             + std::to_string(n_) + ")"),
          k(k_), n(n_)
    {
    }
    int k;
    int n;
};

struct NotASquareTimesKernel : std::runtime_error {
    NotASquareTimesKernel(int k_, int n_, const std::string& kernel)
        : std::runtime_error("B(" + std::to_string(k_) + "," + std::to_string(n_)
                             + "): square-free kernel " + kernel
                             + " is not one of 1, c, 1-c, c(1-c)"),
          k(k_), n(n_)
    {
    }
    int k;
    int n;
};

struct NegativeSigma : std::runtime_error {
    NegativeSigma(int k_, int n_)
        : std::runtime_error("B(" + std::to_string(k_) + "," + std::to_string(n_)
                             + "): negative constant factor"),
          k(k_), n(n_)
    {
    }
    int k;
    int n;
};

struct DegenerateLeadingCoefficient : std::domain_error {
    DegenerateLeadingCoefficient()
        : std::domain_error("recurrence has identically zero leading coefficient")
    {
    }
};

struct OrderMismatch : std::invalid_argument {
    explicit OrderMismatch(int order)
        : std::invalid_argument("expected an order-3 operator, got order "
                                + std::to_string(order))
    {
    }
};

} // namespace branges

#endif
