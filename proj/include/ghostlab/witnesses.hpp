#pragma once

#include "ghostlab/age.hpp"

#include <optional>

namespace ghostlab {

struct LevelCurveData {
    DualGraph graph;
    MultiplicityCochain multiplicity;
};

struct JuniorWitness {
    DualGraph graph;
    MultiplicityCochain multiplicity;
    SymmetricFunction ghost;
    Rational age;
    std::string construction;
};

/// Worked instances used by tests, the `verify` suite and `witness`.
namespace instances {

/// Level 8, five vertices, eight edges; towers with 4, 3, 2 vertices.
LevelCurveData tower_level8();
/// Generators of order 2, 4, 8 for tower_level8, in that order.
std::vector<SymmetricFunction> tower_level8_generators();

/// Two parallel M = 1 edges x -> z closed up by a path of (q-1)/2 edges
/// carrying M = 2; the constant ghost a = 1 has age ((q+3)/2)/q < 1.
/// q = 5 is the three-vertex junior instance at level 5.
JuniorWitness odd_path_junior(Residue q);
JuniorWitness junior_level8();
JuniorWitness junior_level12();

/// Three parallel edges v1 -> v2 with M = 1 at level 3 (a cut).
LevelCurveData vine_level3();
/// Triangle with M = the circuit at level 3.
LevelCurveData triangle_level3();
/// Two vertices, two edges, M = the circuit (1, 2) at level 3.
LevelCurveData banana_level3();
/// Three parallel edges with M = (1, 2, 3) at level 6: no ghosts.
LevelCurveData parallel_level6();

}  // namespace instances

/// Same graph, multiplicity and ghost multiplied by `factor` at level factor·ℓ.
JuniorWitness scale(const JuniorWitness& w, Residue factor);

/// Raises vertex genera until every vertex is stable and total genus >= min_genus.
DualGraph stabilize_genera(const DualGraph& graph, int min_genus = 4);

/// A validated junior ghost at the given level, or nullopt exactly for ℓ ∈ {1,2,3,4,6}.
/// Throws std::logic_error if a constructed triple fails validation.
std::optional<JuniorWitness> junior_witness(Residue level);

}  // namespace ghostlab
