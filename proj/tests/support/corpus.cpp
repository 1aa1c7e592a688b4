#include "support/corpus.hpp"

#include "cubetight/sageev.hpp"

namespace corpus {

using namespace cubetight;

std::vector<CubeComplex> random_duals(Rng& rng, std::size_t count, std::size_t max_vertices) {
  std::vector<CubeComplex> out;
  while (out.size() < count) {
    CubeComplex X = dual_complex(random_wall_system(rng));
    if (X.vertex_count() <= max_vertices) out.push_back(std::move(X));
  }
  return out;
}

std::vector<Named> standard(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Named> out;
  out.push_back({"path6", path(6)});
  out.push_back({"tree12", tree(random_parents(rng, 12))});
  out.push_back({"tree20", tree(random_parents(rng, 20))});
  out.push_back({"grid2x2", grid({2, 2})});
  out.push_back({"grid3x4", grid({3, 4})});
  out.push_back({"grid6x6", grid({6, 6})});
  out.push_back({"cube3", hypercube(3)});
  out.push_back({"cube5", hypercube(5)});
  out.push_back({"staircase6w1", staircase(6, 1)});
  out.push_back({"staircase6w2", staircase(6, 2)});
  auto duals = random_duals(rng, 20);
  for (std::size_t i = 0; i < duals.size(); ++i) out.push_back({"dual" + std::to_string(i), std::move(duals[i])});
  return out;
}

}  // namespace corpus
