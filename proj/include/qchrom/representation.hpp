#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qchrom/designs.hpp"
#include "qchrom/oracle.hpp"
#include "qchrom/spectrum.hpp"

namespace qchrom {

// Flat orthogonal representation of H(n,2) from a pair-separating family:
// stored as an evaluation rule (blocks + theta), never as a 2^n x d matrix.
// Coordinate i <= b of phi(v) is the block character (-1)^{|supp(v) & B_i|};
// coordinates b+1..2*theta are constant +1.
struct FlatRep {
  int n = 0;
  int theta = 0;
  std::vector<std::vector<int>> blocks;
  int dimension = 0;  // 2*theta

  std::vector<int> evaluate(const std::vector<int>& v) const;  // entries +-1
};

// Requires a constant separation number theta with 2*theta >= |family|.
FlatRep rep_from_family(const Design& family, int theta);

struct OrthogonalityVerdict {
  bool pass = true;
  // Supports {j,k} of weight-2 differences whose inner product is nonzero.
  std::vector<std::pair<int, int>> violations;
  int differences_checked = 0;
};

// One inner-product check per weight-2 difference class z (the character
// product law reduces vertex pairs to difference classes):
// sum_{i<=b} chi_i(z) + (2*theta - b) = 0.
OrthogonalityVerdict verify_flat_orthogonal(const FlatRep& rep, int n);

// The roots-of-unity representation v -> (zeta^{v_1}, ..., zeta^{v_n}).
struct NaturalRep {
  int p = 0;
  int n = 0;

  // Exact Hermitian inner product <phi(u), phi(w)> given the difference w-u.
  Cyclotomic inner_product_from_difference(const std::vector<int>& diff) const;
};

struct NaturalRepVerdict {
  bool pass = false;
  int upper_bound = 0;  // chi_q <= n when pass
  std::vector<TypeVector> failing_types;
  std::uint64_t edges_checked = 0;
};

// Certifies that adjacent vertices of the given Cayley graph map to
// orthogonal root-of-unity vectors. The per-type check is exact and complete
// (inner products depend only on the difference type); edge-level checks up
// to sample_budget edges exercise the same fact pointwise.
NaturalRepVerdict natural_rep_check(const CayleySpec& spec,
                                    std::uint64_t sample_budget = 1 << 16);

// (x_1,...,x_{n-1}) -> (x, -x.1): appends the check digit that lifts a
// length-(n-1) type-union Cayley graph into a length-n one.
std::vector<int> check_bit_embed(const std::vector<int>& x, int p);
std::vector<int> zero_pad_embed(const std::vector<int>& x);

Int g5_min_eigenvalue_closed_form(int l);

struct SubgraphRecord {
  std::string name;
  int n = 0;
  Int lambda_min;
  Int spectral_bound;
  Int advertised;  // chi_q from the tables
  bool pass = false;
};

struct EmbeddingRecord {
  std::string name;
  bool pass = false;
  bool skipped_budget = false;
};

struct SubgraphVerdict {
  int l = 0;
  int t = 0;
  bool pass = false;  // over everything that was actually checked
  bool complete = true;  // false when an embedding check hit its budget
  std::vector<SubgraphRecord> graphs;
  std::vector<EmbeddingRecord> embeddings;
  bool g5_closed_form_matches = false;
};

// Certifies the subgraph families at one parameter: spectral bounds equal to
// the advertised quantum chromatic numbers, the closed form for the smallest
// eigenvalue of the single-type Z_3^{3l-1} graph, and the zero-pad/check-bit
// embeddings into their parent graphs (exhaustively, within budget).
SubgraphVerdict verify_subgraph_theorems(int l, int t,
                                         const OracleBudget& budget = {});

}  // namespace qchrom
