#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace ruledcent {

/* (a, b; r) with a, b mod n and r mod 2n.  Ordered by (r, a, b) so that the
   smallest element of a set is its canonical representative. */
struct TripleMod {
    std::int64_t n;
    std::int64_t a;
    std::int64_t b;
    std::int64_t r;

    friend bool operator==(const TripleMod&, const TripleMod&) = default;
    friend std::strong_ordering operator<=>(const TripleMod& x, const TripleMod& y);
};

TripleMod make_triple(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t r);

// T_n: r != 0 (mod 2n) and gcd(a, n) = 1
bool in_restricted_domain(const TripleMod& t);

enum class Move { C1, C2, C3, C4, C5, C6 };
std::string move_name(Move m);

/* c1 (-a,-b;r)   c2 (-a,b-ra;r)   c3 (a,-b;-r)   c4 (-b,-a;0) only at r = 0
   c5 identity    c6 every r' with a r' = 2b - r a (mod 2n), a taken as its least residue */
std::vector<TripleMod> apply_move(Move m, const TripleMod& t);

// c6 restricted to the solution with r' = r (mod 2).  Requires gcd(a, n) = 1.
TripleMod c6_parity_preserving(const TripleMod& t);

std::vector<TripleMod> orbit(const TripleMod& t);
TripleMod canonical_representative(const TripleMod& t);

enum class Equivalence { Yes, No, Unknown };
std::string to_string(Equivalence e);
Equivalence smoothly_equivalent(const TripleMod& t1, const TripleMod& t2);

using MoveFn = std::function<TripleMod(const TripleMod&)>;
struct MoveGenerators {
    MoveFn c1, c2, c3, c6;
};
MoveGenerators standard_generators();

struct GroupPresentationReport {
    bool passed = false;
    bool reached_16 = false;
    std::vector<std::int64_t> orders; // per sampled n, 0 if the closure exceeded the cap
    std::vector<std::string> failed_relations;
    std::string summary;
};

GroupPresentationReport verify_group_presentation(std::span<const std::int64_t> sample_n,
                                                  const MoveGenerators& gens = standard_generators());

} // namespace ruledcent
