#pragma once

#include "zxcf/diagram.hpp"
#include "zxcf/rewrite.hpp"

#include <cstdint>
#include <random>

namespace zxcf {

/// All randomness in tests and the CLI flows through a seeded mt19937_64, so
/// every corpus is reproducible from its seed.
using Rng = std::mt19937_64;

struct RandomDiagramOptions {
    int vertices = 4;
    bool withInputs = true;
    bool ensureFlow = false; // rejection-sample until findFlow succeeds
    int maxAttempts = 100000;
};

Diagram randomDiagram(Rng& rng, const RandomDiagramOptions& o);

/// Random labelled open graph over all six labels (for flow testing).
LabelledOpenGraph randomLabelledGraph(Rng& rng, int vertices, bool pauliOnly = false);

/// A random flow-preserving rewrite step applied to d: one of LC, pivot,
/// z-delete, z-insert, bend, split, chosen among the applicable moves.
/// Nothing when no move applies.
std::optional<std::pair<Diagram, RewriteStep>> randomRewrite(Rng& rng, const Diagram& d);

} // namespace zxcf
