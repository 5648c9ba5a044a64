#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fointerp {

struct RelationSymbol {
    std::string name;
    int arity = 0;

    friend bool operator==(const RelationSymbol&, const RelationSymbol&) = default;
};

/// A purely relational signature. Relations are kept ordered by (arity, name);
/// that order fixes slot numbering for enumeration and dense storage.
class Signature {
public:
    Signature() = default;
    Signature(std::initializer_list<std::pair<std::string, int>> relations);

    /// Throws Structural on duplicate names or arity < 1.
    void add(const std::string& name, int arity);

    std::optional<int> arity(const std::string& name) const;
    /// Position of the symbol in relations(), or -1.
    int index_of(const std::string& name) const;
    bool contains(const std::string& name) const { return index_of(name) >= 0; }

    const std::vector<RelationSymbol>& relations() const { return relations_; }
    std::size_t size() const { return relations_.size(); }
    bool empty() const { return relations_.empty(); }

    /// Union of two signatures; throws Structural if a shared name has different arities.
    Signature merged(const Signature& other) const;

    std::string to_string() const;

    friend bool operator==(const Signature& a, const Signature& b) { return a.relations_ == b.relations_; }

private:
    std::vector<RelationSymbol> relations_;
};

} // namespace fointerp
