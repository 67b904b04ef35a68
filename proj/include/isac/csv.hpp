// SPDX-License-Identifier: Apache-2.0
//
// isac-perf  Performance analysis toolkit for secure MIMO ISAC downlinks
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <string>
#include <vector>

namespace isac {

/// Numeric table with byte-deterministic serialization: header row, comma
/// delimiter, '.' decimal separator, 17-significant-digit floats, LF line
/// endings. Identical inputs give identical bytes, so tables diff cleanly
/// across runs.
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> columns);

    void add_row(const std::vector<double>& row);  // size must match columns

    std::string to_string() const;
    void write(const std::string& path) const;  // throws std::runtime_error

    const std::vector<std::string>& columns() const { return columns_; }
    const std::vector<std::vector<double>>& rows() const { return rows_; }

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<double>> rows_;
};

/// One double as the CSV float format ("%.17g").
std::string format_csv_value(double v);

}  // namespace isac
