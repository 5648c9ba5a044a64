#pragma once

#include <cstdint>
#include <optional>

#include "fointerp/formula.hpp"
#include "fointerp/structure.hpp"

namespace fointerp {

constexpr std::size_t kDefaultEnumerationCap = 24;

/// Slot cap for exhaustive enumeration: the value set by set_enumeration_cap,
/// else the FOINTERP_CAP environment variable, else kDefaultEnumerationCap.
std::size_t enumeration_cap();
/// 0 restores the environment/default value.
void set_enumeration_cap(std::size_t cap);

/// Every labeled structure of one size, in lexicographic order of the slot
/// bit-vector (slot 0 most significant), starting from the empty structure.
///
///   StructureEnumerator e(sig, 2);
///   while (e.next()) use(e.current());
class StructureEnumerator {
public:
    /// Throws CapExceeded when the slot count is above enumeration_cap().
    StructureEnumerator(const Signature& signature, int size);

    bool next();
    const FiniteStructure& current() const { return current_; }
    /// Number of structures the enumerator yields (2^slots).
    std::uint64_t total() const { return std::uint64_t{1} << current_.slot_count(); }

private:
    FiniteStructure current_;
    bool started_ = false;
};

/// First structure of the given size, in enumeration order, satisfying the
/// sentence. Backtracks over slots with three-valued evaluation of the partial
/// structure, so it has no slot cap; its answer equals the first hit of
/// StructureEnumerator.
std::optional<FiniteStructure> find_model(const Signature& signature, int size, const Formula& sentence);

} // namespace fointerp
