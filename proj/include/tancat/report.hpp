#pragma once

#include <string>
#include <vector>

namespace tancat {

// One named check with an optional failure witness. Reports aggregate in
// deterministic order so output is golden-file stable.
struct CheckItem {
    std::string name;
    bool passed = false;
    std::string witness;
};

struct Report {
    std::vector<CheckItem> items;

    void add(const std::string& name, bool passed, const std::string& witness = "") {
        items.push_back({name, passed, passed ? "" : witness});
    }
    void merge(const Report& other) {
        items.insert(items.end(), other.items.begin(), other.items.end());
    }
    bool all_passed() const {
        for (const auto& it : items)
            if (!it.passed) return false;
        return true;
    }
};

}  // namespace tancat
