#pragma once

// Point counts of diagonal conics, the trace equations for neighbours of h,
// and the closed-form density predictions.

#include "idens/atlas.hpp"
#include "idens/gfq.hpp"
#include "idens/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace idens::conics {

using gfq::Code;

/// Affine solutions (X, Y) of X^2 + a Y^2 + b = 0. Throws InvalidArgument
/// when a = 0.
std::uint64_t count_conic(const gfq::Field& field, Code a, Code b);

/// 1 - 3^{-2}.
Code gamma_constant(const gfq::Field& field);

/// Pairs (a, b), b != 0, with b^2 - ab + a^2 + a + 1 = sign * b, sorted.
/// Every pair is pushed through the completing-the-square substitution and
/// checked against its conic; the minus branch must be exactly {(-1, -1)} and
/// the plus branch must have q + 1 pairs (InvariantViolation otherwise).
/// Throws WrongCharacteristic for p = 3 and WrongCongruence unless q = 2 mod 3.
std::vector<std::pair<Code, Code>> trace_equation_solutions(const gfq::Field& field, int sign);

/// [[a, -b^{-1}(a^2+a+1)], [b, -1-a]], the conjugate of h for the pair (a, b).
pgl2::ProjectiveElement conjugate_of_h(const pgl2::Pgl2& group, Code a, Code b);

struct DensityPrediction {
    std::uint32_t q = 0;
    atlas::Which group = atlas::Which::PSL;
    Rational rho;
    std::string source;
    /// Increasing, deduplicated.
    std::vector<Rational> weak_array;
};

/// Throws UnsupportedCase for even q and for q = 3^k with k even, and
/// InvalidArgument when q is not a prime power.
DensityPrediction predicted_density(std::uint32_t q, atlas::Which group);

/// The predicted weak array, reported with the PSL value as rho.
DensityPrediction weak_density_array(std::uint32_t q);

}  // namespace idens::conics
