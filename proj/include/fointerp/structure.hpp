#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fointerp/signature.hpp"

namespace fointerp {

using Element = int;
using Tuple = std::vector<Element>;

/// Finite structure over a relational signature with universe {0, ..., n-1}.
///
/// Every relation is stored densely: one byte per possible tuple, all relations
/// concatenated in signature order. A "slot" is one such tuple position, so the
/// slot index space is exactly the space enumerated by enumerate_structures().
///
/// Named elements (l1, cP, a*, ...) live in a side table that does not take
/// part in equality.
class FiniteStructure {
public:
    FiniteStructure(Signature signature, int size);

    const Signature& signature() const { return signature_; }
    int size() const { return size_; }

    bool holds(int relation, std::span<const Element> tuple) const;
    bool holds(const std::string& relation, std::initializer_list<Element> tuple) const;
    void set(int relation, std::span<const Element> tuple, bool value = true);
    void set(const std::string& relation, std::initializer_list<Element> tuple, bool value = true);

    /// Tuples of a relation in lexicographic order.
    std::vector<Tuple> tuples(int relation) const;
    std::vector<Tuple> tuples(const std::string& relation) const;
    std::size_t tuple_count(int relation) const;

    std::size_t slot_count() const { return slots_.size(); }
    bool slot(std::size_t index) const { return slots_[index] != 0; }
    void set_slot(std::size_t index, bool value) { slots_[index] = value ? 1 : 0; }
    /// First slot of a relation; the slot of tuple t is offset + sum t[i] * n^(k-1-i).
    std::size_t slot_offset(int relation) const { return offsets_[relation]; }
    std::size_t slot_of(int relation, std::span<const Element> tuple) const;
    const std::uint8_t* raw(int relation) const { return slots_.data() + offsets_[relation]; }

    const std::map<std::string, Element>& names() const { return names_; }
    void set_name(const std::string& name, Element e);
    void clear_names() { names_.clear(); }
    std::optional<Element> element(const std::string& name) const;
    /// Element by name; throws Precondition when absent.
    Element at(const std::string& name) const;
    /// A name for display: the first table entry mapping to e, or "#e".
    std::string name_of(Element e) const;

    friend bool operator==(const FiniteStructure& a, const FiniteStructure& b) {
        return a.size_ == b.size_ && a.signature_ == b.signature_ && a.slots_ == b.slots_;
    }

private:
    void check_tuple(int relation, std::span<const Element> tuple) const;

    Signature signature_;
    int size_;
    std::vector<std::size_t> offsets_;
    std::vector<std::uint8_t> slots_;
    std::map<std::string, Element> names_;
};

/// Number of slots of a size-n structure over the signature: sum over R of n^arity(R).
std::size_t slot_count(const Signature& signature, int size);

/// Builds an equivalence relation from a class label per element.
void set_equivalence(FiniteStructure& s, const std::string& relation, std::span<const int> class_of);

/// Partition of the universe into classes of an equivalence relation; classes are
/// ordered by their smallest member, members ascending.
std::vector<std::vector<Element>> equivalence_classes(const FiniteStructure& s, const std::string& relation);

} // namespace fointerp
