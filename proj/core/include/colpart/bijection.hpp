#pragma once

#include "colpart/partition.hpp"

namespace colpart {

struct PartitionPair {
    ColouredPartition mu;  // pattern-avoiding partition, no a0b0
    ColouredPartition nu;  // all parts coloured a0b0

    bool operator==(const PartitionPair&) const = default;
};

/// Splits a difference-condition partition into a pattern-avoiding partition
/// and an a0b0-coloured one: a0b0 parts move out, repeated free colours
/// collapse, and excluded-pattern centres are recoloured a0b0 and moved out
/// until none remains. Weight, part count, part sizes, and every bound-colour
/// multiplicity are preserved. Throws (with the witness) if the input fails
/// the difference conditions.
PartitionPair phi(const ColouredPartition& lambda, const DeltaGammaTable& table);

/// Inverse map: re-inserts each a0b0 part at the unique admissible spot,
/// recolouring it with the free colour the table designates. Throws (with
/// witness) if mu or nu fails its membership check.
ColouredPartition phi_inverse(const PartitionPair& pair, const DeltaGammaTable& table);

namespace detail {
/// One inverse-map insertion: places a part of the given size into mu,
/// choosing colour and position from mu's current neighbours. Exposed so
/// tests can drive the insertions in arbitrary order.
void insert_zero_part(ColouredPartition& mu, int size, const DeltaGammaTable& table);
}  // namespace detail

}  // namespace colpart
