#include "reskp/instance_io.hpp"

#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>

#include "reskp/errors.hpp"

namespace reskp {

Instance read_instance(std::istream& in, std::string id) {
  std::vector<Rational> sizes;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      sizes.push_back(parse_rational(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return validate_instance(std::move(sizes), std::move(id));
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file " + path);
  return read_instance(in, std::filesystem::path(path).stem().string());
}

void write_instance(std::ostream& out, const Instance& instance, const std::string& comment) {
  if (!comment.empty()) out << "# " << comment << '\n';
  for (const auto& x : instance.items) out << to_fraction_string(x) << '\n';
}

void save_instance(const std::string& path, const Instance& instance, const std::string& comment) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  write_instance(out, instance, comment);
  if (!out) throw Error("write failed: " + path);
}

}  // namespace reskp
