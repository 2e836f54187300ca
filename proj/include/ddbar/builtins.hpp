#pragma once

#include <string>
#include <vector>

namespace ddbar {

/// A catalog entry: manifest text plus, for quotient entries, the action to
/// divide by. The text is parsed through the ordinary manifest parser at
/// run time; nothing bypasses it.
struct BuiltinEntry {
    std::string name;
    std::string manifest_text;
    std::string action;  // empty = plain cohomology
    std::string summary;
};

const std::vector<BuiltinEntry>& builtin_catalog();

/// nullptr when no entry has that name.
const BuiltinEntry* find_builtin(const std::string& name);

}  // namespace ddbar
