#ifndef COFULL_SIMPLICIAL_HPP
#define COFULL_SIMPLICIAL_HPP

#include "cofull/ideal.hpp"

namespace cofull {

// Simplicial complex on vertices 0..n-1, stored by its facets.  Faces are
// sorted vertex lists; the complex is the downward closure of the facets.
class SimplicialComplex {
public:
  SimplicialComplex(int nvertices, std::vector<std::vector<int>> facets);

  int nvertices() const { return n_; }
  const std::vector<std::vector<int>>& facets() const { return facets_; }

  bool is_face(const std::vector<int>& f) const;
  // Inclusion-minimal non-faces, sorted.
  std::vector<std::vector<int>> minimal_nonfaces() const;
  // dim = size of largest facet - 1 (empty complex has dim -1).
  int dimension() const;

private:
  int n_;
  std::vector<std::vector<int>> facets_;
};

// Stanley-Reisner ideal: squarefree monomials of the minimal non-faces.
IdealPtr stanley_reisner(const SimplicialComplex& K, const RingPtr& ring);

// Boundary-of-simplex and cycle helpers used by the worked examples.
SimplicialComplex cycle_complex(int n);  // n-gon: edges {i, i+1 mod n}

}  // namespace cofull

#endif
