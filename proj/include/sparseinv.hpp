#pragma once

// Sparse one-relator inverse monoids Inv⟨X | w = 1⟩: sparseness, approximation
// complexes, the word problem, face types, pushdown and geodesic automata.

#include "sparseinv/audit.hpp"
#include "sparseinv/automata.hpp"
#include "sparseinv/complex.hpp"
#include "sparseinv/error.hpp"
#include "sparseinv/face_types.hpp"
#include "sparseinv/io.hpp"
#include "sparseinv/word.hpp"
#include "sparseinv/word_problem.hpp"
