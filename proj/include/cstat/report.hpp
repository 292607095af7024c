#pragma once

#include <string>
#include <vector>

namespace cstat {

/// One verified instance. `detail` names the instance and, on failure, what differed.
struct CheckItem {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct Report {
  std::string title;
  std::vector<CheckItem> items;
  std::vector<std::string> notes;

  bool passed() const {
    for (const auto& i : items)
      if (!i.passed) return false;
    return true;
  }
  std::size_t failures() const {
    std::size_t f = 0;
    for (const auto& i : items) f += !i.passed;
    return f;
  }
  void add(std::string name, bool ok, std::string detail = {}) {
    items.push_back({std::move(name), ok, std::move(detail)});
  }
  void append(const Report& other) {
    items.insert(items.end(), other.items.begin(), other.items.end());
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  }
};

}  // namespace cstat
