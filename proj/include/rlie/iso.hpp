#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rlie/lie.hpp"
#include "rlie/linalg.hpp"
#include "rlie/restricted.hpp"

namespace rlie {

struct SearchBudget {
    std::uint64_t max_candidates = 200'000'000;
    std::optional<std::chrono::milliseconds> time_limit;
    // Extension degrees tried in order; each must be a multiple of the base degree.
    std::vector<unsigned> ladder = {1, 2, 4};
    unsigned threads = 1;

    void validate() const;
};

enum class SearchStatus { Found, Absent, Exhausted };
const char* to_string(SearchStatus s);

struct SearchResult {
    SearchStatus status = SearchStatus::Absent;
    std::optional<Matrix> witness;  // over `field`
    FieldPtr field;                 // field of the witness, or the last field searched
    std::uint64_t candidates = 0;
    std::string note;

    bool found() const { return status == SearchStatus::Found; }
};

struct AutomorphismList {
    std::vector<Matrix> maps;  // canonical matrix order
    bool complete = true;
    std::uint64_t candidates = 0;
};

// Brute force with constraint propagation, over the algebra's own field.
AutomorphismList automorphisms(const LieAlgebra& L, const SearchBudget& budget = {});
// Automorphisms phi with phi o m1 = m2 o phi.
AutomorphismList conjugators(const LieAlgebra& L, const PSemilinearMap& m1, const PSemilinearMap& m2,
                             const SearchBudget& budget = {});

// Single-field searches.
SearchResult find_lie_isomorphism(const LieAlgebra& src, const LieAlgebra& dst, const SearchBudget& budget = {});
SearchResult find_conjugator(const LieAlgebra& L, const PSemilinearMap& m1, const PSemilinearMap& m2,
                             const SearchBudget& budget = {});

// Ladder searches: inputs over F_{p^k0}; every ladder degree divisible by k0
// is tried in order and the witness is reported over the first field that has one.
SearchResult lie_isomorphism(const LieAlgebra& L1, const LieAlgebra& L2, const SearchBudget& budget = {});
SearchResult pmaps_conjugate(const LieAlgebra& L, const PSemilinearMap& m1, const PSemilinearMap& m2,
                             const SearchBudget& budget = {});
SearchResult restricted_isomorphic(const RestrictedLieAlgebra& R1, const RestrictedLieAlgebra& R2,
                                   const SearchBudget& budget = {});

// Lie-level invariants that no isomorphism can change, including under field extension.
struct LieInvariants {
    std::size_t center_dim = 0;
    std::size_t derived_dim = 0;
    std::vector<std::size_t> lower_central;
    std::vector<std::size_t> derived_series;
    std::size_t center_cap_derived = 0;

    bool operator==(const LieInvariants&) const = default;
};
LieInvariants lie_invariants(const LieAlgebra& L);

// Rational canonical form data: monic invariant factors d_1 | d_2 | ... of xI - A.
std::vector<Poly> invariant_factors(const Matrix& a);
bool similar(const Matrix& a, const Matrix& b);
// k in F^x and invertible P with P A P^{-1} = k B, first k in encoding order.
std::optional<std::pair<Matrix, Elem>> conjugate_up_to_scalar(const Matrix& a, const Matrix& b,
                                                              std::uint64_t seed = 0);

}  // namespace rlie
