#pragma once

#include <stdexcept>

#include "uso/cube.hpp"

namespace uso {

struct NotUniqueSinkError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotUsoError : std::runtime_error {
  NotUsoError() : std::runtime_error("orientation is not a USO") {}
};

struct ClassProfile {
  bool is_uso = false;
  bool is_acyclic = false;
  bool is_locally_uniform = false;
  bool is_holt_klee = false;
  bool is_strongly_holt_klee = false;

  bool operator==(const ClassProfile&) const = default;
};

// Definitional USO test: every one of the 3^n subcubes has exactly one
// vertex with no outgoing edge inside it.
bool is_uso(const Orientation& phi);

// Pairwise outmap screen: for all u != v the symmetric difference of
// their outmaps meets u xor v. Agrees with is_uso on every orientation;
// used for fast pruning and as a cross-check.
bool uso_screen(const Orientation& phi);

// The unique vertex of s with no outgoing subcube edge (resp. with all
// subcube edges outgoing). Throws NotUniqueSinkError if zero or >= 2.
Vertex unique_sink(const Orientation& phi, const Subcube& s);
Vertex unique_source(const Orientation& phi, const Subcube& s);

bool is_acyclic(const Orientation& phi);

// Literal evaluation of the two local-uniformity implications at every
// vertex u and pair i < j with u_i = u_j = 0; vacuously true where the
// premises fail.
bool is_locally_uniform(const Orientation& phi);

// Maximum number of internally vertex-disjoint directed source->sink
// paths in the subcube, via unit-capacity max flow with vertex splitting.
// Never exceeds the subcube dimension.
int disjoint_path_count(const Orientation& phi, const Subcube& s);

// Every d-dimensional subcube has d disjoint source->sink paths.
// Throws NotUsoError unless phi is a USO.
bool is_holt_klee(const Orientation& phi);

// Holt-Klee for every coordinate reversal. Throws NotUsoError.
bool is_strongly_holt_klee(const Orientation& phi);

// Total classification; never throws. Non-USOs get the path-based flags
// false and is_locally_uniform by literal evaluation.
ClassProfile classify(const Orientation& phi);

}  // namespace uso
