#pragma once

#include <iosfwd>
#include <string>

#include "reskp/model.hpp"

namespace reskp {

// Instance files hold one size per line, written "p/q" or as a decimal
// literal. Blank lines and lines starting with '#' are skipped.
// Throws ParseError (with the line number, or for an unreadable file) or
// SizeOutOfRange.
Instance read_instance(std::istream& in, std::string id = {});
Instance load_instance(const std::string& path);

// Writes sizes as "p/q", one per line, after an optional comment line.
void write_instance(std::ostream& out, const Instance& instance, const std::string& comment = {});
void save_instance(const std::string& path, const Instance& instance,
                   const std::string& comment = {});

}  // namespace reskp
