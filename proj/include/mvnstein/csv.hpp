#pragma once

#include "mvnstein/common.hpp"

#include <iosfwd>
#include <string>

namespace mvnstein {

// Comma-separated numeric matrix. A single non-numeric first row is treated
// as a header and skipped; ragged rows and non-numeric cells raise ParseError
// with the 1-based row/column location. Parsing is locale independent.
Matrix read_csv(std::istream& in);
Matrix read_csv_file(const std::string& path);

void write_csv_file(const std::string& path, const std::vector<std::string>& header,
                    const std::vector<std::vector<double>>& rows);

}  // namespace mvnstein
