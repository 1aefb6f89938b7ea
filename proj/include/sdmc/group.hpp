#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sdmc/mat.hpp"

namespace sdmc {

// A labeled set of invertible n x n matrices generating a group that acts on
// row vectors by right multiplication.
struct GeneratorSet {
  FieldPtr field;
  int n = 0;
  std::string label;
  std::vector<Mat> gens;
};

// lambda with A A^T = lambda I, lambda != 0; nullopt otherwise.
std::optional<felem> is_similitude(const Mat& a);

// Scalar monomial group M_n: monomial matrices whose diagonal entries are
// +-alpha for a single alpha. Generators: adjacent transpositions,
// diag(-1, 1, ..., 1), and g*I for a primitive g.
GeneratorSet scalar_monomial_generators(FieldPtr f, int n);

// Full monomial group Mon_n (arbitrary nonzero diagonal).
GeneratorSet monomial_generators(FieldPtr f, int n);

// GL_n: diag(g, 1, ..., 1), the n-cycle permutation, and I + E_01.
GeneratorSet gl_generators(FieldPtr f, int n);

// Orthogonal similitudes group GO_n = {A : A A^T = lambda I, lambda != 0}.
// Odd q: reflections through all anisotropic vectors, all scalars, and (n
// even) one block similitude of non-square character. Even q: the full
// element set from exhaustive row-extension backtracking (n <= 6).
GeneratorSet go_generators(FieldPtr f, int n);

// Even-q alternative: sample random invertible matrices, keep similitudes,
// and stop once the closure reaches the exhaustive count. Deterministic for
// a fixed seed.
GeneratorSet go_generators_random(FieldPtr f, int n, std::uint64_t seed);

// Matrix-equivalence maps on extended row vectors: {L^T (x) I_m} u {I_l (x) M}
// for generators L of GL_l, M of GL_m, plus the transposition matrix T when
// l = m.
GeneratorSet equiv_generators(FieldPtr f, int l, int m);

// Same shape over GO_l, GO_m: the maps that also commute with the dual.
GeneratorSet equiv_sd_generators(FieldPtr f, int l, int m);

struct GroupClosure {
  std::vector<Mat> elements;  // sorted by entry key; deterministic
  std::uint64_t order = 0;
};

// Breadth-first closure under right multiplication by the generators.
// Always contains the identity; throws Err::cap_exceeded past cap.
GroupClosure group_closure(const GeneratorSet& gens, std::uint64_t cap = kDefaultClosureCap);

// Closure order only. Monomial generator sets (n <= 8, q <= 16) take a packed
// (permutation, diagonal) path that never materializes matrices.
std::uint64_t group_order(const GeneratorSet& gens, std::uint64_t cap = kDefaultClosureCap);

// |GL_n(F_q)| by the product formula prod_i (q^n - q^i); overflow-checked.
std::uint64_t gl_order(const FieldPtr& f, int n);

// |GO_n(F_q)|, always computed (closure for odd q, backtracking for even q)
// and memoized per field.
std::uint64_t go_order(const FieldPtr& f, int n);

// Full element list of GO_n, sorted by key (used by the double-coset
// validator; keep n small).
std::vector<Mat> go_elements(const FieldPtr& f, int n, std::uint64_t cap = kDefaultClosureCap);

// All A with A A^T = lambda I for some lambda != 0, by row-extension
// backtracking. Works in any characteristic; the exhaustive oracle for
// closure-computed GO orders.
std::vector<Mat> go_enumerate_backtracking(const FieldPtr& f, int n);

// c * |GL_l| * |GL_m| / (q - 1), c = 2 iff l = m.
std::uint64_t equiv_order(const FieldPtr& f, int l, int m);

// c * |GO_l| * |GO_m| / (q - 1), c = 2 iff l = m.
std::uint64_t equiv_sd_order(const FieldPtr& f, int l, int m);

// On-disk closure cache, keyed by (label, q, n). Binary layout (little
// endian): magic "SDMCGRP1", u32 label length, label bytes, u32 p, u32 e,
// u32 n, u64 order, then order * n * n entry bytes in key order. Writes are
// reproducible byte-for-byte.
void save_group_cache(const std::string& dir, const std::string& label, const GroupClosure& closure);
std::optional<GroupClosure> load_group_cache(const std::string& dir, const std::string& label,
                                             const FieldPtr& f, int n);

}  // namespace sdmc
