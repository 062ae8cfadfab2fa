#ifndef ORESOLVE_ERRORS_HPP
#define ORESOLVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace oresolve {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ShapeError : Error {
    explicit ShapeError(const std::string& what) : Error(what) {}
};

struct ZeroInputError : Error {
    explicit ZeroInputError(const std::string& what) : Error(what) {}
};

struct SingularMatrixError : Error {
    explicit SingularMatrixError(const std::string& what) : Error(what) {}
};

struct VariableError : Error {
    explicit VariableError(const std::string& what) : Error(what) {}
};

struct ConstructionError : Error {
    explicit ConstructionError(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    int line;
    int column;
    ParseError(int line_, int column_, const std::string& what)
        : Error("parse error at " + std::to_string(line_) + ":" + std::to_string(column_) + ": " + what),
          line(line_), column(column_) {}
};

}  // namespace oresolve

#endif
