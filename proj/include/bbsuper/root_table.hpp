#pragma once

#include <map>

#include "bbsuper/datum.hpp"

namespace bbsuper {

enum class RootClass { Real, Imaginary };

struct RootEntry {
  BigInt multiplicity;
  Parity parity = Parity::Even;
  RootClass root_class = RootClass::Imaginary;

  friend bool operator==(const RootEntry&, const RootEntry&) = default;
};

/// Positive roots of height <= H with their multiplicities. Only roots with
/// nonzero multiplicity are stored.
struct RootTable {
  std::size_t rank = 0;
  int H = 0;
  std::map<RootVector, RootEntry> entries;

  BigInt multiplicity(const RootVector& beta) const {
    auto it = entries.find(beta);
    return it == entries.end() ? BigInt(0) : it->second.multiplicity;
  }

  friend bool operator==(const RootTable&, const RootTable&) = default;
};

}  // namespace bbsuper
