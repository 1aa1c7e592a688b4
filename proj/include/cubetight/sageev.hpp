#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cubetight/bitset.hpp"
#include "cubetight/cubecomplex.hpp"
#include "cubetight/wallsys.hpp"

namespace cubetight {

/// All coherent orientations (bit w set = plus side of wall w chosen), sorted.
/// Backtracking in nesting order with upward-closure propagation.
std::vector<Bitset> coherent_orientations(const WallSystem& ws);

/// The orientation induced by a ground point: for each wall, the side holding it.
Bitset principal_orientation(const WallSystem& ws, std::size_t point);

/// Exhaustion plus upward closure.
bool is_coherent(const WallSystem& ws, const Bitset& orientation);

/// Sageev's dual cube complex: coherent orientations joined when they differ on
/// one wall, restricted to the component of the point-induced orientations.
/// Vertex labels are orientation bit strings ('1' = plus), wall order kept.
CubeComplex dual_complex(const WallSystem& ws);

/// One wall per hyperplane class of the 1-skeleton, with sides defined through
/// medians. Ground set is the vertex labels.
WallSystem walls_of(const CubeComplex& X);

struct WallIsomorphism {
  bool isomorphic = false;
  std::vector<Vertex> point_to_vertex;  // ground point -> principal vertex of the dual
  std::vector<std::size_t> wall_map;    // wall of ws -> wall of walls_of(dual)
  std::vector<bool> flipped;            // plus side maps to minus side
  std::string detail;                   // reason on failure
};

struct ComplexIsomorphism {
  bool isomorphic = false;
  std::vector<Vertex> vertex_map;  // vertex of X -> vertex of dual_complex(walls_of(X))
  std::string detail;
};

/// walls_of(dual_complex(ws)) against ws, as pocsets pulled back to the ground.
WallIsomorphism wall_roundtrip(const WallSystem& ws);
/// dual_complex(walls_of(X)) against X, as graphs.
ComplexIsomorphism complex_roundtrip(const CubeComplex& X);

struct RoundTripCertificate {
  WallIsomorphism walls;
  ComplexIsomorphism complex;
  bool isomorphic() const { return walls.isomorphic && complex.isomorphic; }
};

/// Both directions of the duality, starting from a wall system.
RoundTripCertificate roundtrip_check(const WallSystem& ws);

}  // namespace cubetight
