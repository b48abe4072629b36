#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "bhzeta/numeric.hpp"

namespace bhzeta {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A Saito dual was requested at a degree some support period does not divide.
struct NonDivisorPeriod : Error {
    Int period, degree;
    NonDivisorPeriod(Int m, Int d)
        : Error("period " + m.str() + " does not divide degree " + d.str()),
          period(std::move(m)),
          degree(std::move(d)) {}
};

struct SyntaxError : Error {
    std::size_t position;  // byte offset into the input text
    SyntaxError(const std::string& what, std::size_t pos)
        : Error(what + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

struct NotSquare : Error {
    NotSquare(std::size_t monomials, std::size_t variables)
        : Error("polynomial has " + std::to_string(monomials) + " monomials but " +
                std::to_string(variables) + " variables") {}
};

struct SingularMatrix : Error {
    SingularMatrix() : Error("exponent matrix is singular") {}
};

struct NonUnitCoefficient : Error {
    explicit NonUnitCoefficient(const std::string& c)
        : Error("monomial coefficient " + c + " is not 1 (pass allow_coefficients to discard)") {}
};

struct NonPositiveWeight : Error {
    Int weight;
    std::size_t index;
    NonPositiveWeight(Int w, std::size_t i)
        : Error("weight w" + std::to_string(i + 1) + " = " + w.str() + " is not positive"),
          weight(std::move(w)),
          index(i) {}
};

struct NotKreuzerSkarke : Error {
    std::size_t row;
    explicit NotKreuzerSkarke(std::size_t r, const std::string& why)
        : Error("monomial " + std::to_string(r + 1) + " breaks the chain/loop shape: " + why),
          row(r) {}
};

struct NonIntegralMilnor : Error {
    explicit NonIntegralMilnor(const Rat& value)
        : Error("weight product " + value.str() + " is not an integer (non-isolated singularity)") {}
};

struct NonIntegralDivisor : Error {
    explicit NonIntegralDivisor(const std::string& what)
        : Error("divisor has non-integral multiplicity: " + what) {}
};

struct InvalidSolution : Error {
    explicit InvalidSolution(const std::string& what) : Error(what) {}
};

struct NoGeometricRoot : Error {
    Int degree;
    explicit NoGeometricRoot(Int k)
        : Error("the exponent congruence has no solution mod " + k.str()), degree(std::move(k)) {}
};

struct UnsupportedShape : Error {
    explicit UnsupportedShape(const std::string& what) : Error(what) {}
};

struct NonReducedWeights : Error {
    Int c;
    explicit NonReducedWeights(Int c_)
        : Error("weight system is not reduced (gcd = " + c_.str() + ")"), c(std::move(c_)) {}
};

struct PreconditionFailed : Error {
    explicit PreconditionFailed(const std::string& what) : Error(what) {}
};

}  // namespace bhzeta
