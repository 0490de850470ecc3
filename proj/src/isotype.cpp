#include "symdom/isotype.hpp"

#include "symdom/errors.hpp"

#include <random>

namespace symdom {

ModelContext::ModelContext(int rows, int cols, std::uint64_t seed)
    : rows_(rows), cols_(cols), seed_(seed) {
  if (rows < 1 || cols < 1) throw ModelError("matrix model needs positive shape");
  if (rows > cols)
    throw ModelError("use rows <= cols for the matrix model (transpose is isomorphic)");
  params_ = derive_params(rows, 2, Rat(cols - rows));
}

std::vector<Partition> ModelContext::isotypes_of_degree(int n) const {
  return partitions_of_weight(n, rank());
}

const IsotypeBasis& ModelContext::basis(const Partition& mu) {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = cache_.find(mu);
  if (it != cache_.end()) return it->second;

  const int dim = dim_isotype(mu, params_).convert_to<int>();
  IsotypeBasis B;
  B.mu = mu;

  // Kernel vectors E^mu(., w) at seeded rational points span P_mu; orthogonal
  // candidates accumulate until the dimension count is reached.
  std::mt19937_64 rng(seed_ ^ (static_cast<std::uint64_t>(mu.weight()) << 32) ^
                      static_cast<std::uint64_t>(mu.part(0) * 31 + mu.length()));
  std::uniform_int_distribution<int> num(-4, 4);
  int attempts = 0;
  while (B.dim() < dim) {
    if (++attempts > 12 * dim + 60)
      throw Error("isotype basis sampling failed to reach full rank");
    GMat w(rows_, cols_);
    for (auto& v : w.a) v = GRat(Rat(num(rng)));
    MatrixPoly cand = fock_kernel(mu, w).primitive();
    for (int t = 0; t < B.dim(); ++t) {
      GRat c = fischer_pairing(cand, B.vectors[static_cast<std::size_t>(t)]);
      if (c.is_zero()) continue;
      MatrixPoly proj = B.vectors[static_cast<std::size_t>(t)];
      proj *= c / GRat(B.gram[static_cast<std::size_t>(t)]);
      cand -= proj;
    }
    if (cand.is_zero()) continue;
    // primitive rescale keeps the exact Gram-Schmidt from inflating
    cand = cand.primitive();
    Rat g = fischer_norm2(cand);
    if (g <= 0) throw Error("Fischer Gram degenerated during basis build");
    B.vectors.push_back(std::move(cand));
    B.gram.push_back(std::move(g));
  }
  return cache_.emplace(mu, std::move(B)).first->second;
}

MatrixPoly ModelContext::isotypic_project(const MatrixPoly& f, const Partition& mu) {
  if (mu.length() > rank()) return MatrixPoly(rows_, cols_);
  MatrixPoly part = f.homogeneous_part(mu.weight());
  MatrixPoly out(rows_, cols_);
  if (part.is_zero()) return out;
  const IsotypeBasis& B = basis(mu);
  for (int t = 0; t < B.dim(); ++t) {
    GRat c = fischer_pairing(part, B.vectors[static_cast<std::size_t>(t)]);
    if (c.is_zero()) continue;
    MatrixPoly v = B.vectors[static_cast<std::size_t>(t)];
    v *= c / GRat(B.gram[static_cast<std::size_t>(t)]);
    out += v;
  }
  return out;
}

MatrixPoly ModelContext::project_to_max_length(const MatrixPoly& f, int ell) {
  if (ell >= rank()) return f;
  MatrixPoly out(rows_, cols_);
  for (auto& [deg, comp] : f.by_degree()) {
    for (const Partition& mu : partitions_of_weight(deg, ell)) out += isotypic_project(comp, mu);
  }
  return out;
}

}  // namespace symdom
