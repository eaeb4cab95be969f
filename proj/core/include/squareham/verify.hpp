#pragma once

#include <string>
#include <vector>

#include "squareham/planar_map.hpp"
#include "squareham/two_factor.hpp"

namespace squareham {

struct ConstructionResult;

// One flag per claim. Everything except square_strict is mandatory;
// square_strict records whether the square relation is strict, which
// fails for self-square graphs such as K4 and is informational only.
struct VerificationReport {
    bool class_G = false;
    bool two_factor_valid = false;
    bool coloring_condition1 = false;
    bool bonds_valid = false;
    bool condition2_facial = false;
    bool condition3 = false;
    bool condition4 = false;
    bool euler_J = false;
    bool within_square = false;
    bool square_strict = false; // informational
    bool edge_count_formula = false;
    bool max_degree_le5 = false;
    bool hamilton_valid = false;
    bool omits_matching = false;
    bool simplicity_preserved = false;

    std::vector<std::string> notes;

    bool pass() const {
        return class_G && two_factor_valid && coloring_condition1 && bonds_valid &&
               condition2_facial && condition3 && condition4 && euler_J && within_square &&
               edge_count_formula && max_degree_le5 && hamilton_valid && omits_matching &&
               simplicity_preserved;
    }
};

// True iff cycle lists every vertex of j exactly once and consecutive
// pairs (cyclically) are realizable by pairwise distinct edges of j, none
// of them forbidden. forbidden_edges holds edge ids of j.
bool check_hamilton(const PlaneMultigraph& j, const std::vector<int>& cycle,
                    const std::vector<int>& forbidden_edges);

// Full independent check of a construction result: recomputes faces,
// distances, bonds and components from scratch, trusting only the
// recorded structures it is asked to validate.
VerificationReport verify(const PlaneMultigraph& g, const TwoFactor& x,
                          const ConstructionResult& result);

// Checks the theorem's externally observable clauses for a supergraph j
// and cycle h produced elsewhere. Edge ids 0..E(G)-1 of j must denote the
// edges of g. Internal-structure flags (bonds, conditions 2-4) are not
// recomputable without construction metadata; they are set true with a
// note saying they were skipped.
VerificationReport verify_theorem(const PlaneMultigraph& g, const TwoFactor& x,
                                  const PlaneMultigraph& j, const std::vector<int>& h);

} // namespace squareham
