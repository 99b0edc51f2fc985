#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "hochbv/dga.hpp"

namespace hochbv {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

/* Text format, one statement per line ('#' starts a comment):
 *   algebra <name>
 *   generator <name> degree <int>
 *   d <name> = <sum>
 *   mul <name> <name> = <sum>
 *   unit = <sum>
 * where <sum> is "0" or generator names joined by "+".  Omitted d/mul
 * lines default to zero; "unit" is required.  Unknown names are errors. */
DgAlgebra parse_algebra(std::istream& in);
DgAlgebra parse_algebra_string(const std::string& text);
DgAlgebra load_algebra_file(const std::string& path);

std::string serialize_algebra(const DgAlgebra& A);

}  // namespace hochbv
