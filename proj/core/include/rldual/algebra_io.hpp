#ifndef RLDUAL_ALGEBRA_IO_HPP
#define RLDUAL_ALGEBRA_IO_HPP

#include <iosfwd>
#include <string>

#include "rldual/algebra.hpp"

namespace rldual {

/// Canonical text form of an algebra record:
///
///   algebra <name>
///   mode bounded|gmtl
///   size <n>
///   leq
///   <n rows of n contiguous 0/1 digits>
///   mul
///   <n rows of n space-separated indices>
///   one <i>
///   zero <i>          (bounded mode only)
///   end
///
/// print_algebra(parse_algebra(s)) == s for canonical input.
std::string print_algebra(const Algebra& a);

Algebra parse_algebra(const std::string& text);
Algebra parse_algebra(std::istream& in);

/// Reads an algebra from a file path.
Algebra load_algebra(const std::string& path);

}  // namespace rldual

#endif
