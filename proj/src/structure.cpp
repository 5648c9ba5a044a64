#include "fointerp/structure.hpp"

#include <algorithm>
#include <limits>

#include "fointerp/error.hpp"

namespace fointerp {

namespace {

constexpr std::size_t kMaxDenseSlots = std::size_t{1} << 28;

std::size_t power(std::size_t base, int exp) {
    std::size_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > std::numeric_limits<std::size_t>::max() / base)
            return std::numeric_limits<std::size_t>::max();
        r *= base;
    }
    return r;
}

} // namespace

std::size_t slot_count(const Signature& signature, int size) {
    std::size_t total = 0;
    for (const auto& r : signature.relations()) {
        std::size_t p = power(static_cast<std::size_t>(size), r.arity);
        if (p == std::numeric_limits<std::size_t>::max() || total > std::numeric_limits<std::size_t>::max() - p)
            return std::numeric_limits<std::size_t>::max();
        total += p;
    }
    return total;
}

FiniteStructure::FiniteStructure(Signature signature, int size) : signature_(std::move(signature)), size_(size) {
    if (size_ < 1)
        fail(ErrorKind::Structural, "structures must have at least one element (got size " + std::to_string(size) + ")");
    std::size_t total = 0;
    for (const auto& r : signature_.relations()) {
        offsets_.push_back(total);
        std::size_t p = power(static_cast<std::size_t>(size_), r.arity);
        if (p > kMaxDenseSlots || total + p > kMaxDenseSlots)
            fail(ErrorKind::CapExceeded, "relation '" + r.name + "' is too large to store densely at size " +
                                             std::to_string(size_));
        total += p;
    }
    slots_.assign(total, 0);
}

void FiniteStructure::check_tuple(int relation, std::span<const Element> tuple) const {
    if (relation < 0 || relation >= static_cast<int>(signature_.size()))
        fail(ErrorKind::Structural, "relation index " + std::to_string(relation) + " out of range");
    const auto& symbol = signature_.relations()[relation];
    if (static_cast<int>(tuple.size()) != symbol.arity)
        fail(ErrorKind::Structural, "arity mismatch for '" + symbol.name + "': expected " +
                                        std::to_string(symbol.arity) + ", got " + std::to_string(tuple.size()));
    for (Element e : tuple)
        if (e < 0 || e >= size_)
            fail(ErrorKind::Structural, "element " + std::to_string(e) + " of a '" + symbol.name +
                                            "' tuple is outside the universe of size " + std::to_string(size_));
}

std::size_t FiniteStructure::slot_of(int relation, std::span<const Element> tuple) const {
    check_tuple(relation, tuple);
    std::size_t index = 0;
    for (Element e : tuple)
        index = index * static_cast<std::size_t>(size_) + static_cast<std::size_t>(e);
    return offsets_[relation] + index;
}

bool FiniteStructure::holds(int relation, std::span<const Element> tuple) const {
    return slots_[slot_of(relation, tuple)] != 0;
}

bool FiniteStructure::holds(const std::string& relation, std::initializer_list<Element> tuple) const {
    int r = signature_.index_of(relation);
    if (r < 0)
        fail(ErrorKind::Structural, "unknown relation symbol '" + relation + "'");
    return holds(r, std::span<const Element>(tuple.begin(), tuple.size()));
}

void FiniteStructure::set(int relation, std::span<const Element> tuple, bool value) {
    slots_[slot_of(relation, tuple)] = value ? 1 : 0;
}

void FiniteStructure::set(const std::string& relation, std::initializer_list<Element> tuple, bool value) {
    int r = signature_.index_of(relation);
    if (r < 0)
        fail(ErrorKind::Structural, "unknown relation symbol '" + relation + "'");
    set(r, std::span<const Element>(tuple.begin(), tuple.size()), value);
}

std::vector<Tuple> FiniteStructure::tuples(int relation) const {
    const int arity = signature_.relations().at(relation).arity;
    const std::size_t begin = offsets_[relation];
    const std::size_t count = power(static_cast<std::size_t>(size_), arity);
    std::vector<Tuple> out;
    for (std::size_t i = 0; i < count; ++i) {
        if (!slots_[begin + i])
            continue;
        Tuple t(arity);
        std::size_t rest = i;
        for (int k = arity - 1; k >= 0; --k) {
            t[k] = static_cast<Element>(rest % static_cast<std::size_t>(size_));
            rest /= static_cast<std::size_t>(size_);
        }
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<Tuple> FiniteStructure::tuples(const std::string& relation) const {
    int r = signature_.index_of(relation);
    if (r < 0)
        fail(ErrorKind::Structural, "unknown relation symbol '" + relation + "'");
    return tuples(r);
}

std::size_t FiniteStructure::tuple_count(int relation) const {
    const std::size_t begin = offsets_[relation];
    const std::size_t count = power(static_cast<std::size_t>(size_), signature_.relations().at(relation).arity);
    return static_cast<std::size_t>(std::count(slots_.begin() + begin, slots_.begin() + begin + count, 1));
}

void FiniteStructure::set_name(const std::string& name, Element e) {
    if (e < 0 || e >= size_)
        fail(ErrorKind::Structural, "name '" + name + "' refers to element " + std::to_string(e) +
                                        " outside the universe of size " + std::to_string(size_));
    names_[name] = e;
}

std::optional<Element> FiniteStructure::element(const std::string& name) const {
    auto it = names_.find(name);
    if (it == names_.end())
        return std::nullopt;
    return it->second;
}

Element FiniteStructure::at(const std::string& name) const {
    auto e = element(name);
    if (!e)
        fail(ErrorKind::Precondition, "no element named '" + name + "'");
    return *e;
}

std::string FiniteStructure::name_of(Element e) const {
    for (const auto& [name, index] : names_)
        if (index == e)
            return name;
    return "#" + std::to_string(e);
}

void set_equivalence(FiniteStructure& s, const std::string& relation, std::span<const int> class_of) {
    int r = s.signature().index_of(relation);
    if (r < 0 || s.signature().relations()[r].arity != 2)
        fail(ErrorKind::Structural, "'" + relation + "' is not a binary relation of the structure");
    if (static_cast<int>(class_of.size()) != s.size())
        fail(ErrorKind::Precondition, "class labels must cover the whole universe");
    for (Element a = 0; a < s.size(); ++a)
        for (Element b = 0; b < s.size(); ++b) {
            const Element t[2] = {a, b};
            s.set(r, t, class_of[a] == class_of[b]);
        }
}

std::vector<std::vector<Element>> equivalence_classes(const FiniteStructure& s, const std::string& relation) {
    int r = s.signature().index_of(relation);
    if (r < 0 || s.signature().relations()[r].arity != 2)
        fail(ErrorKind::Structural, "'" + relation + "' is not a binary relation of the structure");
    std::vector<std::vector<Element>> classes;
    std::vector<bool> seen(s.size(), false);
    for (Element a = 0; a < s.size(); ++a) {
        if (seen[a])
            continue;
        std::vector<Element> cls;
        for (Element b = a; b < s.size(); ++b) {
            const Element t[2] = {a, b};
            if (!seen[b] && (a == b || s.holds(r, t))) {
                seen[b] = true;
                cls.push_back(b);
            }
        }
        classes.push_back(std::move(cls));
    }
    return classes;
}

} // namespace fointerp
