// SPDX-License-Identifier: Apache-2.0
#include "wigner/app/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "wigner/errors.hpp"

namespace wigner::app {

void write_field_csv(const std::string& path, const WignerField& field) {
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) throw Error("write_field_csv: cannot open '" + path + "'");
  std::fputs("q,p,W\n", f);
  char buf[96];
  for (Index i = 0; i < field.grid.n_q; ++i) {
    const double q = field.grid.q_node(i);
    for (Index j = 0; j < field.grid.n_p; ++j) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", q, field.grid.p_node(j),
                    field.values(i, j));
      std::fputs(buf, f);
    }
  }
  std::fclose(f);
}

std::vector<CsvRow> read_field_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("read_field_csv: cannot open '" + path + "'");
  std::string line;
  if (!std::getline(in, line) || line != "q,p,W")
    throw Error("read_field_csv: missing 'q,p,W' header in '" + path + "'");
  std::vector<CsvRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    CsvRow r{};
    std::istringstream ss(line);
    char c1 = 0, c2 = 0;
    if (!(ss >> r.q >> c1 >> r.p >> c2 >> r.w) || c1 != ',' || c2 != ',')
      throw Error("read_field_csv: malformed row '" + line + "'");
    rows.push_back(r);
  }
  return rows;
}

}  // namespace wigner::app
