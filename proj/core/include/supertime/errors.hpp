#pragma once

#include <stdexcept>
#include <string>

namespace supertime {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct PoleAtSubstitution : Error {
    explicit PoleAtSubstitution(const std::string& what) : Error("pole at substitution: " + what) {}
};

struct ZeroBody : Error {
    ZeroBody() : Error("Grassmann number with zero body has no inverse") {}
};

struct GradingMismatch : Error {
    explicit GradingMismatch(const std::string& what) : Error("grading mismatch: " + what) {}
};

struct ParityMismatch : Error {
    explicit ParityMismatch(const std::string& what) : Error("parity mismatch: " + what) {}
};

struct SingularOddBlock : Error {
    SingularOddBlock() : Error("odd-odd block determinant has zero body") {}
};

struct SingularBlock : Error {
    explicit SingularBlock(const std::string& what) : Error("singular block: " + what) {}
};

struct SingularMetric : Error {
    explicit SingularMetric(const std::string& what) : Error("singular metric: " + what) {}
};

struct NotFirstOrder : Error {
    NotFirstOrder() : Error("graded bracket does not reduce to a first-order operator") {}
};

struct RankDeficient : Error {
    explicit RankDeficient(const std::string& what) : Error("constraint equations are dependent: " + what) {}
};

struct UnknownSymbol : Error {
    explicit UnknownSymbol(const std::string& name) : Error("unknown symbol: " + name) {}
};

struct SyntaxError : Error {
    int line;
    int column;
    SyntaxError(int line_, int column_, const std::string& what)
        : Error("syntax error at " + std::to_string(line_) + ":" + std::to_string(column_) + ": " + what),
          line(line_),
          column(column_) {}
};

}  // namespace supertime
