// Copyright 2026 The chshb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "chshb/table.h"

#include <charconv>
#include <cmath>
#include <ostream>
#include <system_error>

#include "chshb/error.h"
#include "json.hpp"

namespace chshb {

namespace {

std::string csv_escape(const std::string &s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) {
        return s;
    }
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') {
            quoted += '"';
        }
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string render_csv(const Cell &cell) {
    if (const auto *d = std::get_if<double>(&cell)) {
        return format_double(*d);
    }
    if (const auto *i = std::get_if<int64_t>(&cell)) {
        return std::to_string(*i);
    }
    return csv_escape(std::get<std::string>(cell));
}

nlohmann::json render_json(const Cell &cell) {
    if (const auto *d = std::get_if<double>(&cell)) {
        if (!std::isfinite(*d)) {
            return nullptr;
        }
        // Round-trip through the 12-digit text so both formats carry the same value.
        std::string text = format_double(*d);
        double rounded = 0;
        std::from_chars(text.data(), text.data() + text.size(), rounded);
        return rounded;
    }
    if (const auto *i = std::get_if<int64_t>(&cell)) {
        return *i;
    }
    return std::get<std::string>(cell);
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
    if (res.ec != std::errc()) {
        throw ChshError(ErrorCode::InvalidArgument, "cannot format value");
    }
    return std::string(buf, res.ptr);
}

void Table::write_csv(std::ostream &out) const {
    for (size_t c = 0; c < columns.size(); c++) {
        out << (c ? "," : "") << csv_escape(columns[c]);
    }
    out << "\n";
    for (const auto &row : rows) {
        for (size_t c = 0; c < row.size(); c++) {
            out << (c ? "," : "") << render_csv(row[c]);
        }
        out << "\n";
    }
}

void Table::write_json(std::ostream &out) const {
    nlohmann::ordered_json array = nlohmann::ordered_json::array();
    for (const auto &row : rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (size_t c = 0; c < row.size() && c < columns.size(); c++) {
            obj[columns[c]] = render_json(row[c]);
        }
        array.push_back(std::move(obj));
    }
    out << array.dump(2) << "\n";
}

void write_table(const Table &table, OutputFormat format, std::ostream &out) {
    if (format == OutputFormat::Csv) {
        table.write_csv(out);
    } else {
        table.write_json(out);
    }
}

}  // namespace chshb
