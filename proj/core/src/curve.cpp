#include <fstream>
#include <map>
#include <ostream>
#include <utility>

#include "reskp/errors.hpp"
#include "reskp/harness.hpp"

namespace reskp {
namespace {

// Policy and adversary names never contain commas or quotes, but instance
// ids come from file names.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

void write_curve(std::ostream& out, const std::vector<RatioRecord>& records) {
  out << "alpha,policy,opponent,gain,opt,ratio,alpha_decimal,gain_decimal,opt_decimal,"
         "ratio_decimal\n";
  for (const auto& r : records) {
    out << to_fraction_string(r.alpha) << ',' << csv_field(r.policy) << ','
        << csv_field(r.opponent) << ',' << to_fraction_string(r.gain) << ','
        << to_fraction_string(r.opt) << ',' << r.ratio.to_fraction_string() << ','
        << to_decimal_string(r.alpha) << ',' << to_decimal_string(r.gain) << ','
        << to_decimal_string(r.opt) << ',' << r.ratio.to_decimal_string() << '\n';
  }
}

void emit_curve(const std::vector<RatioRecord>& records, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  write_curve(out, records);
  out.flush();
  if (!out) throw Error("write failed: " + path);
}

void write_gnuplot_script(std::ostream& out, const std::string& csv_path,
                          const std::vector<RatioRecord>& records) {
  std::map<std::pair<std::string, std::string>, bool> series;
  for (const auto& r : records) {
    if (r.opponent.rfind("random-", 0) == 0) continue;
    series[{r.policy, r.opponent}] = true;
  }
  out << "set datafile separator ','\n"
         "set xlabel 'reservation factor alpha'\n"
         "set ylabel 'competitive ratio'\n"
         "set xrange [0:1]\n"
         "set yrange [1:6]\n"
         "set key top left\n";
  if (series.empty()) {
    out << "plot '" << csv_path << "' using 7:10 skip 1 with points title 'ratio'\n";
    return;
  }
  out << "plot ";
  bool first = true;
  for (const auto& [key, unused] : series) {
    if (!first) out << ", \\\n     ";
    first = false;
    out << "'" << csv_path << "' using 7:((strcol(2) eq '" << key.first << "' && strcol(3) eq '"
        << key.second << "') ? $10 : 1/0) skip 1 with linespoints title '" << key.first
        << " vs " << key.second << "'";
  }
  out << '\n';
}

}  // namespace reskp
