#include "bnclass/table.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <thread>

#include <openssl/evp.h>

#include "bnclass/divisor_classes.hpp"
#include "bnclass/error.hpp"

namespace bnclass {

namespace {

struct CellInput {
  int k;
  BNData data;
};

Json make_cell(const CellInput& in) {
  const BNData& data = in.data;
  const MuNu mn = resolve_mu_nu(data);
  Json cell;
  cell["g"] = data.g;
  cell["k"] = in.k;
  cell["r"] = data.r();
  cell["d"] = data.d;
  cell["a"] = data.a.entries();
  cell["n"] = to_string(count_special(data));
  cell["mu"] = to_string(mn.mu);
  cell["nu"] = to_string(mn.nu);
  cell["class"] = to_json(bn_k_class_direct(data, in.k));
  return cell;
}

}  // namespace

std::string cells_digest(const Json& cells) {
  const std::string text = cells.dump();
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::InvariantViolation, "SHA-256 digest failed");
  }
  std::string hex;
  hex.reserve(2 * len);
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

Json generate_table(const TableGrid& grid, unsigned jobs) {
  if (grid.g_min < 2 || grid.g_max < grid.g_min || grid.k_min < 1 || grid.k_max < grid.k_min ||
      grid.d_max < 1 || grid.r_max < 0) {
    throw Error(ErrorCode::InvalidInput, "invalid table grid");
  }
  std::vector<CellInput> inputs;
  for (int g = grid.g_min; g <= grid.g_max; ++g) {
    const std::vector<BNData> data = enumerate_divisorial(g, grid.r_max, grid.d_max);
    for (int k = grid.k_min; k <= grid.k_max; ++k) {
      for (const auto& datum : data) {
        // Genus 2 has classes only for the Weierstrass datum.
        if (g == 2 && !is_weierstrass_data(datum)) continue;
        inputs.push_back({k, datum});
      }
    }
  }

  std::vector<Json> cells(inputs.size());
  std::vector<std::exception_ptr> errors(inputs.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < inputs.size(); i = next++) {
      try {
        cells[i] = make_cell(inputs[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  jobs = std::max(1u, jobs);
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  Json cell_array = Json::array();
  for (auto& c : cells) cell_array.push_back(std::move(c));
  Json doc;
  doc["schema"] = kTableSchema;
  doc["digest"] = cells_digest(cell_array);
  doc["cells"] = std::move(cell_array);
  return doc;
}

void check_table(const Json& doc) {
  if (!doc.is_object() || !doc.contains("schema") || doc.at("schema") != kTableSchema) {
    throw Error(ErrorCode::SchemaMismatch, "table cache schema mismatch (expected schema 1)");
  }
  if (!doc.contains("cells") || !doc.at("cells").is_array()) {
    throw Error(ErrorCode::SchemaMismatch, "table cache has no cells array");
  }
  if (doc.contains("digest") && doc.at("digest") != cells_digest(doc.at("cells"))) {
    throw Error(ErrorCode::SchemaMismatch, "table cache digest does not match its cells");
  }
}

std::optional<Json> query_table(const Json& doc, int g, int k, int d, const std::vector<int>& a) {
  check_table(doc);
  for (const auto& cell : doc.at("cells")) {
    if (cell.value("g", -1) == g && cell.value("k", -1) == k && cell.value("d", -1) == d &&
        cell.contains("a") && cell.at("a") == Json(a)) {
      return std::optional<Json>(std::in_place, cell);
    }
  }
  return std::nullopt;
}

}  // namespace bnclass
