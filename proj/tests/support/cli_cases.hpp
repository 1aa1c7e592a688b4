#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "cubetight/cli.hpp"

namespace cli_cases {

struct Result {
  int code = 0;
  std::string out, err;
};

inline Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Result r;
  r.code = cubetight::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

/// Every verb over the sample inputs. Paths are relative to the samples dir.
inline std::vector<std::vector<std::string>> examples(const std::string& dir) {
  auto in = [&](const char* f) { return dir + "/" + f; };
  return {
      {"wallsys", "validate", "-i", in("square_walls.json")},
      {"wallsys", "chain", "-i", in("nested_walls.json"), "--from", "a", "--to", "d"},
      {"cube", "dist", "--metric", "linf", "-i", in("cube3.json"), "--from", "000", "--to", "111"},
      {"cube", "dist", "--metric", "l1", "-i", in("grid2.json")},
      {"cube", "median", "-i", in("grid4.json"), "--x", "1-2", "--y", "3-1", "--z", "2-3"},
      {"cube", "interval", "-i", in("grid4.json"), "--from", "0-0", "--to", "2-1"},
      {"cube", "hull", "-i", in("grid4.json"), "--set", "0-0,2-1"},
      {"cube", "gate", "-i", in("grid4.json"), "--from", "0-0", "--set", "1-1,1-2,2-1,2-2"},
      {"cube", "geodesic", "-i", in("grid2.json"), "--path", "0-0,1-0,1-1"},
      {"cube", "dimension", "-i", in("cube3.json")},
      {"cube", "helly", "-i", in("cube3.json"), "--metric", "l1", "--ball", "000:1", "--ball", "011:1", "--ball",
       "101:1", "--ball", "110:1"},
      {"cube", "show", "-i", in("tree7.json"), "--format", "dot"},
      {"cube", "dot", "-i", in("square_walls.json")},
      {"sageev", "dual", "-i", in("square_walls.json")},
      {"sageev", "dual", "-i", in("nested_walls.json"), "--format", "dot"},
      {"sageev", "walls", "-i", in("grid2.json")},
      {"sageev", "roundtrip", "-i", in("cube3.json")},
      {"sageev", "random", "--seed", "7", "--count", "3"},
      {"median", "check", "-i", in("k23.json")},
      {"median", "check", "-i", in("c6.json")},
      {"median", "cubify", "-i", in("grid2.json")},
      {"hyp", "lsep", "-i", in("grid4.json"), "--L", "3"},
      {"hyp", "lsep", "-i", in("grid4.json"), "--walls", "0,2", "--L", "4"},
      {"hyp", "grids", "-i", in("grid4.json")},
      {"hyp", "dl", "-i", in("grid4.json"), "--L", "4", "--from", "0-0", "--to", "4-4"},
      {"hyp", "dl", "-i", in("tree7.json"), "--L", "0"},
      {"hyp", "curtain-model", "-i", in("grid2.json")},
      {"hyp", "curtain-model", "-i", in("tree7.json"), "--exponent", "3/2", "--from", "a1", "--to", "b1"},
      {"hyp", "delta", "-i", in("grid2.json"), "--metric", "l1"},
      {"hyp", "delta", "-i", in("grid2.json"), "--metric", "linf"},
      {"hyp", "delta", "-i", in("grid2.json"), "--metric", "dl", "--L", "1"},
      {"hyp", "delta", "-i", in("grid2.json"), "--metric", "curtain"},
      {"tightspan", "cells", "-i", in("two_points.json")},
      {"tightspan", "cells", "-i", in("square_metric.csv")},
      {"tightspan", "cells", "-i", in("halves_metric.json")},
      {"tightspan", "retract", "-i", in("two_points.json"), "--form", "3,3"},
      {"tightspan", "retract", "-i", in("square_metric.csv"), "--form", "3,3,3,3", "--tol", "1e-10"},
      {"tightspan", "helly", "-i", in("tripod.json"), "--ball", "x:2", "--ball", "y:3", "--ball", "z:5"},
      {"tightspan", "helly", "-i", in("two_points.json"), "--ball", "x:2", "--ball", "y:2"},
      {"tightspan", "tripod", "-i", in("tripod.json"), "--x", "x", "--y", "y", "--z", "z"},
      {"tightspan", "center", "-i", in("square_metric.csv"), "--points", "p,q,r"},
      {"tightspan", "comb", "-i", in("two_points.json"), "--f", "@x", "--g", "@y", "--t", "1/2"},
      {"tightspan", "random-metric", "--seed", "3", "--points", "4"},
  };
}

struct Malformed {
  std::string fixture;
  std::vector<std::string> command;
};

/// Fixtures under tests/data and the command each one is fed to.
inline std::vector<Malformed> malformed() {
  return {
      {"broken_json.json", {"sageev", "dual"}},
      {"overlapping_sides.json", {"sageev", "dual"}},
      {"duplicate_wall.json", {"sageev", "roundtrip"}},
      {"unknown_point.json", {"wallsys", "chain", "--from", "a", "--to", "b"}},
      {"missing_walls.json", {"sageev", "dual"}},
      {"disconnected_graph.json", {"cube", "dist"}},
      {"non_median_graph.json", {"median", "cubify"}},
      {"self_loop.json", {"median", "check"}},
      {"asymmetric_metric.json", {"tightspan", "cells"}},
      {"triangle_violation.json", {"tightspan", "cells"}},
      {"zero_denominator.json", {"tightspan", "cells"}},
      {"negative_distance.json", {"tightspan", "retract", "--form", "1,1"}},
      {"short_row.csv", {"tightspan", "cells"}},
      {"non_numeric.csv", {"tightspan", "cells"}},
      {"not_an_object.json", {"cube", "dimension"}},
      {"missing_file.json", {"cube", "dimension"}},
  };
}

}  // namespace cli_cases
