#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "skewberger/registry/spec.hpp"

namespace skb::registry {

/// Integer dimensions, flags, or a form kind name.
using ExpectedValue = std::variant<std::int64_t, bool, std::string>;

/// One expected value. field is a report field name (dimRbar, dimH22, ...);
/// source is "stated: ..." for tabulated values or "derived: <formula>".
struct Expectation {
  std::string field;
  ExpectedValue value;
  std::string source;
};

struct Instance {
  std::string spec;  // canonical
  Index dimV = 0;
  int table = 0;
  int row = 0;
  std::vector<Expectation> expected;
};

struct RegistryEntry {
  int table = 0;
  int row = 0;
  std::string algebra;
  std::string module;
  std::string constraints;
  std::string note;  // annotations: skipped rows, isomorphism collapses
  std::function<std::vector<Instance>(Index max_dimV)> instances;
};

/// Table 1 (skew-Berger list) or 3 (nonzero first prolongation).
/// Throws std::invalid_argument for any other table number.
const std::vector<RegistryEntry>& table_entries(int table);

/// Every instantiation with dimV <= max_dimV, sorted by spec string.
std::vector<Instance> instantiate(int table, Index max_dimV);

/// Expectations attached to a canonical spec by any row of either table.
std::vector<Expectation> expectations_for(const std::string& canonical_spec);

std::string to_string(const ExpectedValue& v);

}  // namespace skb::registry
