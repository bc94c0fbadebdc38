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

#ifndef CHSHB_TABLE_H
#define CHSHB_TABLE_H

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace chshb {

using Cell = std::variant<double, int64_t, std::string>;

/// Rows of named columns, serialized as CSV (header row, comma separated) or
/// as a JSON array of flat objects with the same field names. Doubles are
/// written with 12 significant digits independent of the locale.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void write_csv(std::ostream &out) const;
    void write_json(std::ostream &out) const;
};

enum class OutputFormat { Csv, Json };

void write_table(const Table &table, OutputFormat format, std::ostream &out);

/// "%.12g" rendering used by both formats.
std::string format_double(double v);

}  // namespace chshb

#endif
