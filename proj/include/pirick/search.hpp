#pragma once

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pirick/properties.hpp"

namespace pirick {

// Boolean query over property names:
//   expr   := term ('|' term)*
//   term   := factor ('&' factor)*
//   factor := '!' factor | '(' expr ')' | name
// Parse failures throw Error(ParseError) whose position is the 1-based column
// of the offending token (the last column when the input ends early) and
// whose witness lists the expected tokens.
class PropertyExpr {
public:
    static PropertyExpr parse(std::string_view text);

    // Throws when a referenced property is missing from the report.
    bool evaluate(const PropertyReport& r) const;
    // Property names referenced by the expression.
    const std::set<std::string>& names() const noexcept { return names_; }
    std::string to_string() const;

    struct Node;

private:
    std::shared_ptr<const Node> root_;
    std::set<std::string> names_;
};

struct SearchResult {
    std::vector<std::string> matches;  // report order
    // One line per instance left out because a referenced property was skipped.
    std::vector<std::string> notes;
};

SearchResult search(const PropertyExpr& expr, const std::vector<PropertyReport>& reports);
SearchResult search(std::string_view expr, const std::vector<PropertyReport>& reports);

}  // namespace pirick
