#pragma once

#include <string>
#include <vector>

#include "sdmc/code.hpp"
#include "sdmc/group.hpp"

namespace sdmc {

// Intermediate census levels larger than this abort with Err::size_guard.
inline constexpr std::uint64_t kMaxCensusLevelRecords = 20'000'000;

struct EnumerateOptions {
  std::string cache_dir;  // empty: no on-disk caching
  std::uint64_t census_guard = kMaxCensusSize;
};

// b in {0, 1, 2}: 1 for even q; for odd q, 0 iff q = 3 mod 4 and 4 does not
// divide n, else 2.
int mass_coefficient(const FieldPtr& f, int n);

// b * prod_{i=1}^{n/2-1} (q^i + 1): the number of self-dual codes of length n.
std::uint64_t count_self_dual(const FieldPtr& f, int n);

// The explicit self-dual code of length n = 2k: [I_k | I_k] for even q,
// [I_k | a I_k] with a^2 = -1 for q = 1 mod 4, and the four-block (b, c)
// form with b^2 + c^2 = -1 for q = 3 mod 4 (which needs 4 | n). Returned as
// a block code (shape 1 x n).
MatrixCode canonical_self_dual(const FieldPtr& f, int n);

// Same with explicit (b, c); only meaningful for q = 3 mod 4. The class
// partition downstream is independent of the admissible choice.
MatrixCode canonical_self_dual_bc(const FieldPtr& f, int n, felem b, felem c);

// Exhaustive census of self-dual codes of length n, built by level-wise
// extension of self-orthogonal subspaces (extend U by an isotropic
// v in U^perp \ U, dedup each level by canonical key). Sorted by key; size
// always equals count_self_dual. Shape 1 x n.
std::vector<MatrixCode> all_self_dual_codes(const FieldPtr& f, int n,
                                            const EnumerateOptions& opts = {});

struct OrbitPartition {
  // Classes in discovery order; members ascending; representative = member
  // with the lexicographically minimal key.
  std::vector<std::vector<int>> classes;
  std::vector<int> representatives;
};

// Partition codes under right multiplication by the generators. The input
// set must be closed under the action; an escaping product raises
// Err::action_escape (a non-similitude generator bug).
OrbitPartition orbit_partition(const std::vector<MatrixCode>& codes, const GeneratorSet& gens);

struct ClassSummary {
  MatrixCode rep;
  std::uint64_t class_size = 0;
  std::uint64_t aut_order = 0;  // group_order / class_size, exactly
  WeightDistribution rank_dist;
  WeightDistribution hamming_dist;
  bool mrd = false;
};

struct ClassificationReport {
  FieldPtr field;
  int l = 0, m = 0;
  std::uint64_t total_codes = 0;
  std::uint64_t group_order = 0;
  std::vector<ClassSummary> classes;  // sorted by (sort_dist, rep key)
  bool block = false;                 // classified under the block group
};

// Equivalence classes of self-dual l x m matrix codes under the self-dual
// matrix-equivalence group; classes sorted by (rank distribution, key).
ClassificationReport classify(const FieldPtr& f, int l, int m, const EnumerateOptions& opts = {});

// Same census partitioned by the scalar monomial group; classes sorted by
// (Hamming distribution, key).
ClassificationReport classify_block(const FieldPtr& f, int n, const EnumerateOptions& opts = {});

struct MassCheckResult {
  bool ok = false;
  std::uint64_t expected_count = 0;  // mass formula value
  std::uint64_t census_count = 0;
  std::uint64_t orbit_total = 0;              // sum of class sizes
  std::vector<std::uint64_t> residuals;       // group_order mod class_size, per class
};

// Exact integer verification of the mass formula against a report.
MassCheckResult mass_check(const ClassificationReport& report);

// True iff A fixes the canonical code. Also checks the structural route:
// S A S^-1 must be block lower-triangular with invertible diagonal blocks for
// S = [[I_k, M], [I_k, 0]] built from the canonical generator [I_k | M]; the
// two routes must agree.
bool stab_certificate(const FieldPtr& f, int n, const Mat& a);

// Number of Stab-Equiv^SD double cosets in GO_n, which equals the number of
// matrix-equivalence classes. Supported for lm <= 4 with q <= 5 and for
// (q, lm) = (2, 6).
std::uint64_t double_coset_classes(const FieldPtr& f, int l, int m,
                                   const EnumerateOptions& opts = {});

// Orbit of the canonical code under GO_n equals the whole census.
bool transitivity_check(const FieldPtr& f, int n, const EnumerateOptions& opts = {});

// Closure order of the scalar monomial group (memoized; the block-equivalence
// group order used by classify_block).
std::uint64_t scalar_monomial_order(const FieldPtr& f, int n);

}  // namespace sdmc
