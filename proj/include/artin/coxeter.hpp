#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "artin/defgraph.hpp"
#include "artin/words.hpp"

namespace artin {

inline constexpr double kGramTolerance = 1e-9;

// Symmetric cosine matrix: entry(s,s)=1, entry(s,t) = -cos(pi/m_st) for an
// edge, -1 for a non-edge. Row order matches the canonical vertex order of
// the set it was built from.
struct GramMatrix {
  int n = 0;
  std::vector<double> a;  // row-major, n*n

  double at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

GramMatrix gram_matrix(const DefiningGraph& g);
GramMatrix gram_matrix(const DefiningGraph& g, const VertexSet& t);

// True iff the Gram matrix of the subset is positive definite (Cholesky
// pivots all > tol). The empty set is spherical.
bool is_spherical(const DefiningGraph& g, const VertexSet& t, double tol = kGramTolerance);
bool is_spherical_mask(const DefiningGraph& g, std::uint64_t mask, double tol = kGramTolerance);

// -1 if the matrix is not positive semidefinite, otherwise the dimension of
// its kernel (0 means positive definite).
int psd_corank(const GramMatrix& m, double tol = kGramTolerance);

// Connected components of the non-commuting graph on t (pairs with
// m_st != 2, absent edges included).
std::vector<VertexSet> irreducible_components(const DefiningGraph& g, const VertexSet& t);

// Components of t whose Gram matrix is positive semidefinite with a
// one-dimensional kernel, paired with their rank (= component size).
std::vector<std::pair<VertexSet, int>> affine_components(const DefiningGraph& g,
                                                         const VertexSet& t);

enum class CoxFamily { A, B, D, E6, E7, E8, F4, H3, H4, I2, AffineIrreducible, Indefinite };

struct CoxeterTypeName {
  CoxFamily family = CoxFamily::Indefinite;
  int rank = 0;
  int m = 0;  // the I2(m) parameter, 0 otherwise
  VertexSet support;

  std::string str() const;
};

// One entry per irreducible component of the graph, sorted by support.
std::vector<CoxeterTypeName> finite_type_name(const DefiningGraph& g);

// ---------------------------------------------------------------------------
// Word problem for W(Delta): Tits' braid-closure algorithm.

struct TitsSolver {
  const DefiningGraph* graph;
  std::size_t closure_cap = 500000;

  explicit TitsSolver(const DefiningGraph& g, std::size_t cap = 500000)
      : graph(&g), closure_cap(cap) {}

  // Canonical reduced representative: the shortlex-least word among all
  // reduced expressions (signs of the input are ignored). Throws cap_exceeded
  // when the braid-closure set outgrows the cap.
  GroupWord reduce(const GroupWord& w) const;
  bool is_reduced(const GroupWord& w) const;
  bool equal(const GroupWord& a, const GroupWord& b) const;

  // All reduced expressions of a reduced word, as byte strings of generator
  // indices, sorted. Exposed for tests.
  std::vector<std::string> reduced_closure(const std::string& word) const;

  std::string reduce_bytes(std::string w) const;
};

GroupWord coxeter_reduce(const DefiningGraph& g, const GroupWord& w,
                         std::size_t closure_cap = 500000);
bool coxeter_equal(const DefiningGraph& g, const GroupWord& a, const GroupWord& b,
                   std::size_t closure_cap = 500000);

// Sign erasure: the canonical projection G(Delta) -> W(Delta) at word level.
GroupWord project_to_coxeter(const GroupWord& w);

// Letterwise positive lift of a reduced Coxeter word. Throws parse_error if
// the input is not reduced.
GroupWord tits_section(const DefiningGraph& g, const GroupWord& w,
                       std::size_t closure_cap = 500000);

// ---------------------------------------------------------------------------
// Exact enumeration of W(Delta) up to a cap (independent oracle for
// is_spherical). Backed by coset enumeration over the trivial subgroup;
// elements come out as shortlex-canonical reduced words found by
// breadth-first right multiplication.

struct CoxeterEnumeration {
  bool closed = false;  // false: the group did not close below the cap
  std::vector<GroupWord> elements;        // shortlex order; [0] is the identity
  std::vector<std::vector<int>> right;    // right[i][s] = index of elements[i] * s

  int multiply(int element, int gen) const { return right[element][gen]; }
  std::optional<int> index_of(const GroupWord& w) const;  // reduced lookup by folding
};

CoxeterEnumeration enumerate_coxeter(const DefiningGraph& g, std::size_t cap);

}  // namespace artin
