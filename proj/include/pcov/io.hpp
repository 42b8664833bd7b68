#pragma once

#include "pcov/hardness.hpp"
#include "pcov/pec.hpp"
#include "pcov/pvc.hpp"

#include <cstdint>
#include <string>
#include <variant>

namespace pcov::io {

/// Instance file format v1: one self-describing JSON document with an
/// explicit "kind" and all rationals as strings. See README for the
/// normative examples.
using AnyInstance = std::variant<PvcInstance, PecInstance, WppecInstance, KnapsackInstance>;

/// Parses and validates. Throws SyntaxError (with 1-based line/column) on
/// malformed JSON or wrong field shapes, ValidationError on a well-formed
/// file that violates an instance invariant.
AnyInstance parse_instance(const std::string& text);

std::string serialize_instance(const PvcInstance& x);
std::string serialize_instance(const PecInstance& x);
std::string serialize_instance(const WppecInstance& x);
std::string serialize_instance(const KnapsackInstance& x);
std::string serialize_instance(const AnyInstance& x);

/// splitmix64; the fixed generator behind all instance sampling, so
/// fixtures regenerate identically anywhere.
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next();
    /// Uniform in [0, bound); bound >= 1.
    uint64_t below(uint64_t bound);
    /// True with probability num/den (exact, single draw).
    bool chance(const Rational& p);
};

/// Erdos-Renyi edge sampling at the given density, integer weights/profits
/// uniform in [1, max], edges assigned uniformly to groups,
/// rho_g = ceil(threshold_fraction * total profit of group g).
/// Deterministic in the seed. Draw order: vertex weights, then per vertex
/// pair (ascending u, then v) one inclusion draw followed, when included,
/// by profit and group draws.
PvcInstance generate_random_pvc(int n, const Rational& density, int omega,
                                long long weight_max, long long profit_max,
                                const Rational& threshold_fraction, uint64_t seed);

/// Analogous; vertex group draws first, then edge sampling with a cost
/// draw per included pair; r_g = floor(requirement_fraction * count of
/// non-isolated vertices in group g).
PecInstance generate_random_pec(int n, const Rational& density, int omega, long long cost_max,
                                const Rational& requirement_fraction, uint64_t seed);

} // namespace pcov::io
