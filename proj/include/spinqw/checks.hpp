#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spinqw/fusion.hpp"
#include "spinqw/identities.hpp"
#include "spinqw/partition.hpp"
#include "spinqw/rational.hpp"
#include "spinqw/report.hpp"

namespace spinqw {

// Exhaustive structural checks at one exact parameter point. Each returns a single report whose
// lhs/rhs are the sides of the first failing case (or of the last case when everything holds);
// the note carries the case count.

IdentityReport check_ybe(const Rational& q, const Rational& s, const Rational& u1, const Rational& u2, int max_index = 4,
                         const std::optional<Mutation<Rational>>& mutation = std::nullopt);

// Gauge relation between the unfused and dual weights, and its analogue for the continued fused weights.
IdentityReport check_gauge(const Rational& q, const Rational& s, const Rational& u, const Rational& x, int max_index = 4);

// Brute-force fusion = fusion recursion = closed formula, plus the u = s specialisation.
IdentityReport check_fusion_routes(const Rational& q, const Rational& s, const Rational& u, int max_spin = 3,
                                   int max_index = 3);

IdentityReport check_fused_ybe(const Rational& q, const Rational& s, const Rational& x, const Rational& y,
                               int max_entry = 2, FusedYbeForm form = FusedYbeForm::Corrected,
                               const std::optional<Mutation<Rational>>& mutation = std::nullopt);

// Box of partitions with at most `rows` parts, each at most `cols`.
struct Box {
    int cols = 3;
    int rows = 3;
};

// Branching = lattice for F and F*, and F* = normalisation * F, for all mu inside lambda in the box,
// using the first m variables for every m up to xs.size().
IdentityReport check_qw_routes(const Rational& q, const Rational& s, const std::vector<Rational>& xs, Box box = {});

// Permutation invariance in the variables and stability under appending x = -s.
IdentityReport check_qw_symmetry(const Rational& q, const Rational& s, const std::vector<Rational>& xs, Box box = {});

// F at s = 0 against the independently coded q-Whittaker polynomials.
IdentityReport check_s0_reduction(const Rational& q, const std::vector<Rational>& xs, Box box = {});

// Stable HL lattice = symmetrization, dual stable lattice = normalisation route, and the
// two routes for G*.
IdentityReport check_stable_routes(const Rational& q, const Rational& s, const std::vector<Rational>& us,
                                   Box box = {});

// A verify request as it arrives from the command line or a binding: raw text values keyed by
// q, s, u, v, x, y, lambda, mu, nu; anything missing is drawn from the seeded sampler.
struct VerifyRequest {
    std::string name;
    std::map<std::string, std::string> values;
    std::optional<Mode> mode;
    int m = -1;
    int n = -1;
    int cutoff = 30;
    double tol = 1e-10;
    std::uint64_t seed = 0;
};

struct CheckInfo {
    std::string name;
    std::string description;
    bool exact;   // can run in exact mode
    bool numeric; // can run in numeric mode
};

const std::vector<CheckInfo>& check_registry();
const CheckInfo& find_check(const std::string& name);

// Mode implied by the request; throws UsageError on mixed or unsupported input kinds.
Mode resolve_mode(const VerifyRequest& request);

IdentityReport run_check(const VerifyRequest& request, int trial);

} // namespace spinqw
