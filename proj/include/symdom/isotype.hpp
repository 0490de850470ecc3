#pragma once

#include "symdom/domain_params.hpp"
#include "symdom/matrix_poly.hpp"
#include "symdom/partition.hpp"
#include "symdom/sympoly.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <vector>

namespace symdom {

// Fischer-orthogonal (unnormalized) basis of one Peter-Weyl isotype P_mu,
// with its diagonal Gram. Kept rational: no square roots are ever taken.
struct IsotypeBasis {
  Partition mu;
  std::vector<MatrixPoly> vectors;
  std::vector<Rat> gram;  // (v_i | v_i) > 0
  int dim() const { return static_cast<int>(vectors.size()); }
};

// Exact polynomial-model context for C^{rows x cols}: isotype bases are
// built on demand by spanning with reproducing kernels at seeded rational
// sample points, then Gram-Schmidt over the Fischer pairing.
class ModelContext {
 public:
  explicit ModelContext(int rows, int cols, std::uint64_t seed = 0);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int rank() const { return rows_ < cols_ ? rows_ : cols_; }
  std::uint64_t seed() const { return seed_; }
  const StructureParams& params() const { return params_; }

  const IsotypeBasis& basis(const Partition& mu);
  std::vector<Partition> isotypes_of_degree(int n) const;

  // pi_mu f, acting on the degree-|mu| part of f.
  MatrixPoly isotypic_project(const MatrixPoly& f, const Partition& mu);
  // sum of pi_mu f over partitions of length <= ell (identity if ell = rank).
  MatrixPoly project_to_max_length(const MatrixPoly& f, int ell);

 private:
  int rows_, cols_;
  std::uint64_t seed_;
  StructureParams params_;
  std::map<Partition, IsotypeBasis> cache_;
  std::mutex mutex_;
};

}  // namespace symdom
