// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "wigner/field.hpp"

namespace wigner::app {

// Writes the field as "q,p,W" rows (header included), q-major, 17 significant
// digits, '\n' line endings.  The format round-trips doubles bit-exactly.
void write_field_csv(const std::string& path, const WignerField& field);

struct CsvRow {
  double q;
  double p;
  double w;
};

std::vector<CsvRow> read_field_csv(const std::string& path);

}  // namespace wigner::app
