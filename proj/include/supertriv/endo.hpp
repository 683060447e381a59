#pragma once

#include "supertriv/structure.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace supertriv {

// Element (n, t) of Z x Z2 naming the stable class Omega^n(k) twisted by t
// parity shifts.
struct TClass {
    long shift = 0;
    int parity = 0;

    bool operator==(const TClass& o) const {
        return shift == o.shift && parity == o.parity;
    }
    bool operator!=(const TClass& o) const { return !(*this == o); }
};

inline TClass tclass_add(const TClass& x, const TClass& y) {
    return TClass{x.shift + y.shift, (x.parity + y.parity) % 2};
}
inline TClass tclass_neg(const TClass& x) { return TClass{-x.shift, x.parity}; }

std::string tclass_str(const TClass& t); // "(n, ev)" / "(n, od)"

struct NotEndotrivial : std::runtime_error {
    explicit NotEndotrivial(const std::string& what) : std::runtime_error(what) {}
};
// Dimension descent broke in both syzygy directions: this would falsify the
// classification theorem the descent relies on, so it is a loud failure.
struct NonMonotone : std::runtime_error {
    explicit NonMonotone(const std::string& what) : std::runtime_error(what) {}
};

struct EndoResult {
    bool endotrivial = false;
    // Strip decomposition of m (x) m^*, when the decision went through the
    // full strip; absent for decisions by counting or by rank certificate.
    std::optional<StripResult> witness;
    std::string method;
};

// Is m (x) m^* isomorphic to k_ev plus a projective? E/F-family inputs are
// projected to their principal block first.
EndoResult is_endotrivial(const Supermodule& m);

// The class of an endotrivial module, by projective stripping and monotone
// dimension descent along the syzygy direction that shrinks the core.
TClass classify(const Supermodule& m);

// ---- Verification reports ----

struct Check {
    std::string description;
    std::string expected;
    std::string observed;
    bool pass = false;
};

struct VerificationReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<Check> checks;
    double wall_seconds = 0;

    bool all_pass() const;
    std::string table() const;
    std::string json() const;
};

// Over Exterior(1): Omega^n(k_ev) is literally k_ev (n even) or k_od (n odd).
VerificationReport verify_rank1(int n_range);

// Over Exterior(r), r >= 2: endotriviality of Omega^n(k_s), the group law on
// tensor products, the rank-2 dimension formula, and dim^2 = 1 mod 2^r.
VerificationReport verify_rank_r(int r, int n_range);

// Restriction of an endotrivial m over Exterior(r), r >= 3, to <v, a_r> for
// random v: the resulting rank-2 class is independent of v.
VerificationReport restriction_constancy(const Supermodule& m, int samples,
                                         std::uint64_t seed);

// Rank-variety sampling: the action of a random odd vector has rank dim/2 on
// projectives; non-projectives are expected to be detected at some sample.
VerificationReport rank_variety_sample(const Supermodule& m, int trials,
                                       std::uint64_t seed);

// Simple modules at random nonzero weights outside the principal block have
// even dimension matching the character formula where it applies.
VerificationReport verify_even_dim_nonprincipal(Family family, int rank, int samples,
                                                std::uint64_t seed);

// dim Ext^1(M, Omega^1 M) = 1 for endotrivial M.
VerificationReport verify_ext1(const Supermodule& m);

} // namespace supertriv
