#ifndef ORESOLVE_IO_HPP
#define ORESOLVE_IO_HPP

#include <map>
#include <string>

#include "oresolve/field.hpp"
#include "oresolve/ore.hpp"

namespace oresolve {

/// Canonical text form: terms in descending monomial order, explicit `^`
/// powers and `*` products, e.g. "2*t^2 - t + 1".  parse(print(p)) == p.
std::string to_string(const MultiPoly& p);
std::string to_string(const RatFunc& r);
std::string to_string(const OreMatrix& op);
std::string to_string(const LinearSystem& sys);

/// Parse a polynomial/rational-function expression over the given variables.
/// Grammar: + - * / ^ ( ), integer literals, declared variable names.
MultiPoly parse_poly(const VarSetPtr& vars, const std::string& text);
RatFunc parse_ratfunc(const VarSetPtr& vars, const std::string& text);

/// Parse a field header such as "rational(t)", "qrational(q; t)",
/// "multibasic(q1,q2; t1,t2)" or "mixed(q1; t1, t)".
FieldSpecPtr parse_field(const std::string& text);

struct SystemFile {
    FieldSpecPtr field;
    LinearSystem system;
    std::map<std::string, std::string> options;
};

/// Parse a complete system file: a `field` header, matrix blocks
/// `A[k] = [[...],[...]]` for contiguous k = 0..l, an optional rhs block
/// `b = [...]` (defaults to zero) and optional `option name = value` lines.
SystemFile parse_system(const std::string& text);

}  // namespace oresolve

#endif
