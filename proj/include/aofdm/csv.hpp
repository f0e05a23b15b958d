// aofdm: analog and digital OFDM baseband simulation library
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

namespace aofdm::io {

/// Shortest round-trip decimal rendering of a double ('.' decimal point,
/// locale independent).  Identical input bits give identical text, which is
/// what makes re-runs byte-comparable.
std::string format_double(double v);

/// A plain numeric table with one header line.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    void add_row(std::initializer_list<double> values) { rows.emplace_back(values); }
};

std::string render_csv(const Table& table);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace aofdm::io
