#pragma once

#include <stdexcept>
#include <string>

namespace ddbar {

/*
 * Error taxonomy. Every error carries a stable machine-readable code that the
 * CLI prints as `error[CODE]: message`. ParseError and its subclasses map to
 * exit status 2, everything else derived from EngineError maps to exit
 * status 1.
 */

class EngineError : public std::runtime_error {
public:
    EngineError(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

class OrderMismatch : public EngineError {
public:
    explicit OrderMismatch(const std::string& msg)
        : EngineError("E_ORDER_MISMATCH", msg) {}
};

class DivisionByZero : public EngineError {
public:
    explicit DivisionByZero(const std::string& msg)
        : EngineError("E_DIVISION_BY_ZERO", msg) {}
};

class GeneratorCountMismatch : public EngineError {
public:
    explicit GeneratorCountMismatch(const std::string& msg)
        : EngineError("E_GENERATOR_COUNT_MISMATCH", msg) {}
};

class NonHomogeneousInput : public EngineError {
public:
    explicit NonHomogeneousInput(const std::string& msg)
        : EngineError("E_NON_HOMOGENEOUS", msg) {}
};

class BadBidegree : public EngineError {
public:
    explicit BadBidegree(const std::string& msg)
        : EngineError("E_BAD_BIDEGREE", msg) {}
};

/// Structure equations violate d^2 = 0; carries the offending generator
/// (1-based) and the printed nonzero residual.
class IntegrabilityFailure : public EngineError {
public:
    IntegrabilityFailure(unsigned generator, const std::string& identity,
                         const std::string& residual)
        : EngineError("E_INTEGRABILITY",
                      identity + " fails on phi" + std::to_string(generator) +
                          ", residual = " + residual),
          generator_(generator), residual_(residual) {}
    unsigned generator() const { return generator_; }
    const std::string& residual() const { return residual_; }

private:
    unsigned generator_;
    std::string residual_;
};

class NotInvertible : public EngineError {
public:
    explicit NotInvertible(const std::string& msg)
        : EngineError("E_NOT_INVERTIBLE", msg) {}
};

class NotChainMap : public EngineError {
public:
    NotChainMap(unsigned generator, const std::string& residual)
        : EngineError("E_NOT_CHAIN_MAP",
                      "action does not commute with the differentials on phi" +
                          std::to_string(generator) + ", residual = " + residual),
          generator_(generator), residual_(residual) {}
    unsigned generator() const { return generator_; }
    const std::string& residual() const { return residual_; }

private:
    unsigned generator_;
    std::string residual_;
};

class GroupClosureOverflow : public EngineError {
public:
    explicit GroupClosureOverflow(const std::string& msg)
        : EngineError("E_GROUP_CLOSURE", msg) {}
};

class DimensionMismatch : public EngineError {
public:
    explicit DimensionMismatch(const std::string& msg)
        : EngineError("E_DIMENSION_MISMATCH", msg) {}
};

class IoError : public EngineError {
public:
    explicit IoError(const std::string& msg) : EngineError("E_IO", msg) {}
};

class UnknownName : public EngineError {
public:
    explicit UnknownName(const std::string& msg)
        : EngineError("E_UNKNOWN_NAME", msg) {}
};

/// Manifest / diamond-file parse failure with source position (1-based).
class ParseError : public EngineError {
public:
    ParseError(std::string code, int line, int col, const std::string& msg)
        : EngineError(std::move(code),
                      "line " + std::to_string(line) + ", col " +
                          std::to_string(col) + ": " + msg),
          line_(line), col_(col) {}
    ParseError(int line, int col, const std::string& msg)
        : ParseError("E_PARSE", line, col, msg) {}
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

class UndeclaredGenerator : public ParseError {
public:
    UndeclaredGenerator(int line, int col, const std::string& msg)
        : ParseError("E_UNDECLARED_GENERATOR", line, col, msg) {}
};

class BadCoefficient : public ParseError {
public:
    BadCoefficient(int line, int col, const std::string& msg)
        : ParseError("E_BAD_COEFFICIENT", line, col, msg) {}
};

}  // namespace ddbar
