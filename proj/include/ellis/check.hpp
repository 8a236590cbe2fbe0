#pragma once

#include <string>
#include <vector>

namespace ellis {

/// One verified assertion inside an operation report.
struct CheckItem {
  std::string name;
  bool ok = true;
  std::string note;  // witness on failure, occasionally an informational remark
};

struct ItemList {
  std::vector<CheckItem> items;

  void add(std::string name, bool ok, std::string note = "") {
    items.push_back({std::move(name), ok, std::move(note)});
  }

  void merge(const ItemList& o) {
    items.insert(items.end(), o.items.begin(), o.items.end());
  }

  bool all_ok() const {
    for (const auto& it : items)
      if (!it.ok) return false;
    return true;
  }

  const CheckItem* find(const std::string& name) const {
    for (const auto& it : items)
      if (it.name == name) return &it;
    return nullptr;
  }

  std::string first_failure() const {
    for (const auto& it : items)
      if (!it.ok) return it.name + (it.note.empty() ? "" : " [" + it.note + "]");
    return "";
  }
};

}  // namespace ellis
