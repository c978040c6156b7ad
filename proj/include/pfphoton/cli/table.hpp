// Copyright 2026 The pfphoton Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace pfphoton::cli {

/// Column-named numeric table, emitted as CSV or JSON.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

/// 17 significant digits, '.' decimal separator, LF line endings.
inline std::string format_csv_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v + 0.0);
    return buf;
}

inline void write_csv(const Table& t, std::ostream& os) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        os << (i ? "," : "") << t.columns[i];
    }
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << (i ? "," : "") << format_csv_number(row[i]);
        }
        os << '\n';
    }
}

inline nlohmann::ordered_json to_json(const Table& t) {
    nlohmann::ordered_json j;
    j["columns"] = t.columns;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        j["rows"].push_back(row);
    }
    return j;
}

inline void write_json(const Table& t, std::ostream& os) { os << to_json(t).dump(2) << '\n'; }

} // namespace pfphoton::cli
