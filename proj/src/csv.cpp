#include "csmanet/csv.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "csmanet/kv.hpp"

namespace csmanet {

namespace {

std::ofstream open_out(const std::string& path, const std::string& comment) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  if (!comment.empty()) out << "# " << comment << "\n";
  return out;
}

}  // namespace

void write_samples_csv(const std::string& path, const EmpiricalSample& sample,
                       const std::string& header_comment) {
  auto out = open_out(path, header_comment);
  out << "value_watts,weight\n";
  for (const auto& o : sample.obs) {
    out << format_double(o.value_w) << ',' << format_double(o.weight) << "\n";
  }
}

EmpiricalSample read_samples_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  EmpiricalSample sample;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line.rfind("value_watts", 0) != 0)
        throw std::runtime_error(path + ": expected `value_watts,weight` header");
      header_seen = true;
      continue;
    }
    std::size_t comma = line.find(',');
    if (comma == std::string::npos) throw std::runtime_error(path + ": malformed row: " + line);
    sample.obs.push_back({std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1))});
  }
  sample.validate();
  return sample;
}

void write_cdf_csv(const std::string& path, const EmpiricalCdf& cdf,
                   const std::string& header_comment) {
  auto out = open_out(path, header_comment);
  out << "value_watts,cum_prob\n";
  for (std::size_t i = 0; i < cdf.value.size(); ++i) {
    out << format_double(cdf.value[i]) << ',' << format_double(cdf.cum[i]) << "\n";
  }
}

void write_pdf_csv(const std::string& path, const LogHistogram& hist,
                   const std::string& header_comment) {
  auto out = open_out(path, header_comment + " zero_atom_mass=" + format_double(hist.zero_atom_mass));
  out << "bin_left,bin_right,density\n";
  for (const auto& b : hist.bins) {
    out << format_double(b.left) << ',' << format_double(b.right) << ','
        << format_double(b.density) << "\n";
  }
}

void write_table_csv(const std::string& path, const std::vector<std::string>& columns,
                     const std::vector<std::vector<std::string>>& rows,
                     const std::string& header_comment) {
  auto out = open_out(path, header_comment);
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out << ',';
    out << columns[i];
  }
  out << "\n";
  for (const auto& row : rows) {
    if (row.size() != columns.size()) throw std::logic_error("write_table_csv: ragged row");
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << row[i];
    }
    out << "\n";
  }
}

}  // namespace csmanet
