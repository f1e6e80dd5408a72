#ifndef CASTKIT_PARSER_HPP
#define CASTKIT_PARSER_HPP

#include <stdexcept>
#include <string>

#include "castkit/gtlc.hpp"

namespace castkit {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// S-expression surface syntax; names resolve to de Bruijn indices here.
GTerm parse_program(const std::string& source);

Type parse_type(const std::string& source);

// Prints in the surface syntax with generated binder names; parsing the
// output yields the same term.
std::string print_program(const GTerm& m);
std::string print_type(const Type& t);

}  // namespace castkit

#endif  // CASTKIT_PARSER_HPP
