#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fsdraw/io_json.hpp"

namespace fsdraw {

struct GenOptions {
  double skew = 0.0;  // shear angle applied to coordinates
  std::optional<unsigned long long> seed;  // jitters per-zone lengths
};

// Regular 2k-gon; k zones at directions i*pi/k.
Document gen_polygon(int k, const GenOptions& opt = {});

// (m+1) x (n+1) lattice; m column zones plus n row zones.
Document gen_grid(int m, int n, const GenOptions& opt = {});

// k rhombi sharing a central vertex of degree k+1; the k+1 spokes are
// equally spaced over an angular interval of width (k-1)*pi/k.
Document gen_fan(int k, const GenOptions& opt = {});

// k rays from one center, equally spaced; every zone is a single edge.
Document gen_star(int k, const GenOptions& opt = {});

// Comb tree: a horizontal spine of k vertices with one upward tooth per
// spine vertex.  Long combs make the boundary winding constraints bind
// strictly below the degree bound.
Document gen_comb(int k, const GenOptions& opt = {});

// Unit-circle initializer: each of the 2t pseudoline ends gets the unit
// vector at angle pi*j/t, and a zone's direction is the normalized
// difference of its two end vectors, canonicalized to [0, pi).
std::vector<double> arrangement_init(const std::vector<std::string>& ends);

}  // namespace fsdraw
