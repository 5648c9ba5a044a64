#include "fointerp/signature.hpp"

#include <algorithm>
#include <sstream>

#include "fointerp/error.hpp"

namespace fointerp {

Signature::Signature(std::initializer_list<std::pair<std::string, int>> relations) {
    for (const auto& [name, arity] : relations)
        add(name, arity);
}

void Signature::add(const std::string& name, int arity) {
    if (name.empty())
        fail(ErrorKind::Structural, "empty relation symbol name");
    if (arity < 1)
        fail(ErrorKind::Structural, "relation symbol '" + name + "' has arity " + std::to_string(arity) +
                                        "; arities must be at least 1");
    if (contains(name))
        fail(ErrorKind::Structural, "duplicate relation symbol '" + name + "'");
    RelationSymbol symbol{name, arity};
    auto pos = std::lower_bound(relations_.begin(), relations_.end(), symbol, [](const auto& a, const auto& b) {
        return a.arity != b.arity ? a.arity < b.arity : a.name < b.name;
    });
    relations_.insert(pos, std::move(symbol));
}

std::optional<int> Signature::arity(const std::string& name) const {
    int i = index_of(name);
    if (i < 0)
        return std::nullopt;
    return relations_[i].arity;
}

int Signature::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < relations_.size(); ++i)
        if (relations_[i].name == name)
            return static_cast<int>(i);
    return -1;
}

Signature Signature::merged(const Signature& other) const {
    Signature out = *this;
    for (const auto& r : other.relations_) {
        auto a = out.arity(r.name);
        if (!a)
            out.add(r.name, r.arity);
        else if (*a != r.arity)
            fail(ErrorKind::Structural, "relation symbol '" + r.name + "' used with arities " + std::to_string(*a) +
                                            " and " + std::to_string(r.arity));
    }
    return out;
}

std::string Signature::to_string() const {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < relations_.size(); ++i)
        out << (i ? ", " : "") << relations_[i].name << '/' << relations_[i].arity;
    out << '}';
    return out.str();
}

} // namespace fointerp
