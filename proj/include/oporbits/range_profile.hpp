#pragma once

#include <cstdint>
#include <vector>

#include "oporbits/cardinal.hpp"

namespace oporbits {

/// Finite model of an operator-range decomposition into mutually orthogonal
/// closed summands: a finite list of (dimension, repetition) blocks followed
/// by a tail describing the infinite remainder of the sequence.
///
/// Tail alphabet:
///   Zero     - all remaining summands are zero (finitely many blocks),
///   Repeat   - the value repeats omega times,
///   Cofinal  - a strictly increasing sequence of alephs with supremum
///              `tail_value`, each term strictly below it; the supremum must
///              be a limit aleph of countable cofinality.
struct RangeProfile {
    enum class Tail { Zero, Repeat, Cofinal };

    struct Block {
        Cardinal value;        // summand dimension, >= 1 once canonical
        std::uint64_t count;   // finite repetition, >= 1 once canonical

        friend bool operator==(const Block&, const Block&) = default;
    };

    std::vector<Block> blocks;
    Tail tail = Tail::Zero;
    Cardinal tail_value = Cardinal::finite(0);  // Repeat value or Cofinal supremum

    friend bool operator==(const RangeProfile&, const RangeProfile&) = default;
};

/// (iota_r, IC, b) of the range described by a profile.
struct ProfileIndices {
    Cardinal total;  // dimension of the closure
    Cardinal ic;     // index of incompleteness: 0 or >= aleph_0
    int b;           // binary index, 0 or 1
};

/// Drops zero blocks, merges adjacent equal-value blocks, validates the tail.
/// Idempotent; preserves (total, ic, b).
/// Throws InputError naming the offending field for malformed tails.
RangeProfile profile_canonicalize(const RangeProfile& p);

/// Dimension of the closure: sum of all summand dimensions; a Cofinal tail
/// contributes its supremum.
Cardinal profile_total(const RangeProfile& p);

/// Index of incompleteness: the minimum over all suffix positions of the
/// remaining summand dimensions. Zero exactly for a Zero tail.
Cardinal profile_ic(const RangeProfile& p);

/// Binary index: 1 iff the range contains a complete subspace of the full
/// dimension of its closure. Finite totals are complete, hence 1; otherwise
/// 1 iff a block value or the Repeat value attains the total (Cofinal terms
/// never do, being strictly below the supremum).
int profile_b(const RangeProfile& p);

ProfileIndices profile_indices(const RangeProfile& p);

/// True iff the range contains a complete subspace of dimension beta:
/// every beta < total qualifies, beta = total qualifies iff b = 1.
bool contains_complete_subspace_of_dim(const RangeProfile& p, const Cardinal& beta);

}  // namespace oporbits
