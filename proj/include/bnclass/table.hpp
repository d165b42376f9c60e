#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bnclass/serialize.hpp"

namespace bnclass {

inline constexpr int kTableSchema = 1;

struct TableGrid {
  int g_min = 3;
  int g_max = 3;
  int k_min = 1;
  int k_max = 1;
  int d_max = 1;
  int r_max = 0;
};

/// Builds the cache document {"schema", "digest", "cells"}. Cells are ordered
/// by (g, k, enumeration order) and the output is identical for every job count.
Json generate_table(const TableGrid& grid, unsigned jobs = 1);

/// Throws Error(SchemaMismatch) when the document is not a
/// schema-1 table or its digest does not match its cells.
void check_table(const Json& doc);

/// Looks up one cell; nullopt when absent.
std::optional<Json> query_table(const Json& doc, int g, int k, int d, const std::vector<int>& a);

/// Hex SHA-256 of the compact dump of `cells`.
std::string cells_digest(const Json& cells);

}  // namespace bnclass
