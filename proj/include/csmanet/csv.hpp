#pragma once

#include <string>
#include <vector>

#include "csmanet/empirical.hpp"

namespace csmanet {

// CSV writers used by the experiment commands.  Every file starts with a
// `# key=value ...` comment recording the config hash and seed, followed by
// a header row.

void write_samples_csv(const std::string& path, const EmpiricalSample& sample,
                       const std::string& header_comment);
EmpiricalSample read_samples_csv(const std::string& path);

void write_cdf_csv(const std::string& path, const EmpiricalCdf& cdf,
                   const std::string& header_comment);

void write_pdf_csv(const std::string& path, const LogHistogram& hist,
                   const std::string& header_comment);

// Generic table: caller supplies column names and preformatted rows.
void write_table_csv(const std::string& path, const std::vector<std::string>& columns,
                     const std::vector<std::vector<std::string>>& rows,
                     const std::string& header_comment);

}  // namespace csmanet
