// Exact lattice width with a witness functional, plus the essential-vertex,
// minimality and quasi-minimality predicates built on top of it.
//
// The width search is certified exhaustive: after fixing three linearly
// independent difference vectors d1, d2, d3 of the configuration and an upper
// bound W0 from heuristic candidates, any functional f of width <= W0
// satisfies |f(di)| <= W0, so sweeping the integer triples
// (f(d1), f(d2), f(d3)) in [-W0, W0]^3 visits every competitor.

#pragma once

#include <stdexcept>
#include <vector>

#include "lp3/geometry.hpp"

namespace lp3 {

struct NotWideEnough : std::runtime_error {
    NotWideEnough()
        : std::runtime_error("NotWideEnough: configuration has width at most one") {}
};

struct WidthResult {
    Int width = 0;
    // Primitive functional achieving the width, normalized so that the first
    // nonzero linear coefficient is positive, (a, b, c) is lexicographically
    // smallest among the achievers, and min over the configuration is 0.
    // For degenerate input the functional vanishes on the configuration.
    Functional witness;
    bool degenerate = false;  // configuration not full-dimensional; width 0
};

WidthResult width(const PointList& a);

struct WidthAtMostOne {
    bool value = false;
    // Valid when value is true: a functional of range {0} (degenerate case)
    // or range within {0, 1} on the configuration.
    Functional witness;
    bool degenerate = false;
};

// Fast path: true iff the configuration is lower-dimensional or has width 1.
// Only the 3^3 sweep around the difference triple is needed for the proof.
WidthAtMostOne width_at_most_one(const PointList& a);

struct VertexEssentiality {
    LatticePoint vertex;
    bool essential = false;
    // Valid when essential: the removal either drops the dimension below 3 or
    // admits a functional of width <= 1 (stored in `witness`).
    bool dimension_drop = false;
    Functional witness;
};

struct EssentialVertexReport {
    std::vector<VertexEssentiality> vertices;
    std::size_t essential_count = 0;
    std::size_t non_essential_count = 0;
};

// Per-vertex classification of conv(A): vertex v is essential when the point
// set A \ {v} spans less than R^3 or has width <= 1.  Requires width(A) > 1.
EssentialVertexReport essential_vertices(const PointList& a);

// Quasi-minimal: at most one non-essential vertex.  Minimal: none.
bool is_quasi_minimal(const PointList& a);
bool is_minimal(const PointList& a);

}  // namespace lp3
