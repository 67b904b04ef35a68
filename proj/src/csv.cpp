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

#include "isac/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace isac {

CsvTable::CsvTable(std::vector<std::string> columns)
    : columns_(std::move(columns)) {
    if (columns_.empty())
        throw std::invalid_argument("CsvTable: needs at least one column");
}

void CsvTable::add_row(const std::vector<double>& row) {
    if (row.size() != columns_.size())
        throw std::invalid_argument("CsvTable: row width mismatch");
    rows_.push_back(row);
}

std::string format_csv_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string CsvTable::to_string() const {
    std::string out;
    for (std::size_t c = 0; c < columns_.size(); ++c) {
        if (c) out += ',';
        out += columns_[c];
    }
    out += '\n';
    for (const auto& row : rows_) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            out += format_csv_value(row[c]);
        }
        out += '\n';
    }
    return out;
}

void CsvTable::write(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("CsvTable: cannot open '" + path + "'");
    out << to_string();
    if (!out) throw std::runtime_error("CsvTable: write failed for '" + path + "'");
}

}  // namespace isac
