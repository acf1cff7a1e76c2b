#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hopf {

// Raised when a construction refuses to proceed because its input fails an
// axiom battery (the data is well-formed but mathematically invalid).
// Distinct from input_error so the CLI can map it to exit code 1.
struct axiom_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Outcome of one verified identity, with a counterexample when it fails.
struct CheckItem {
  std::string name;
  bool ok = false;
  std::string witness;  // empty when ok
};

struct CheckReport {
  std::vector<CheckItem> items;

  bool ok() const {
    for (const auto& it : items)
      if (!it.ok) return false;
    return true;
  }

  void add(std::string name, bool ok, std::string witness = "") {
    items.push_back({std::move(name), ok, std::move(witness)});
  }

  void merge(const CheckReport& other, const std::string& prefix = "") {
    for (const auto& it : other.items)
      items.push_back({prefix + it.name, it.ok, it.witness});
  }

  const CheckItem* find(const std::string& name) const {
    for (const auto& it : items)
      if (it.name == name) return &it;
    return nullptr;
  }

  std::string summary() const {
    std::string out;
    for (const auto& it : items) {
      out += it.ok ? "ok   " : "FAIL ";
      out += it.name;
      if (!it.ok && !it.witness.empty()) out += ": " + it.witness;
      out += "\n";
    }
    return out;
  }

  std::string first_failure() const {
    for (const auto& it : items)
      if (!it.ok) return it.name + (it.witness.empty() ? "" : ": " + it.witness);
    return "";
  }
};

}  // namespace hopf
