#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "copclean/graph.hpp"

namespace copclean {

Graph cycle(int n);
Graph path(int n);
Graph complete(int n);
/// Centre 0, leaves 1..leaves.
Graph star(int leaves);
/// Centre 0 with `legs` paths of `leg_len` vertices each.
Graph spider(int legs, int leg_len);
/// (3,6)-cage in the LCF [5,-5]^7 labelling: i ~ i+-1 (mod 14), even i ~ i+5.
Graph heawood();
Graph petersen();

/// Uniform labelled tree on n vertices via a random Pruefer sequence.
Graph random_tree(int n, std::mt19937_64& rng);

/// g plus a pendant path of d-1 new edges from v to a new end vertex u.
/// Original labels are kept; new vertices are appended in path order.
Graph attach_path(const Graph& g, Vertex v, int d);

/// "cycle:5", "path:4", "complete:6", "star:3", "spider:3,2", "heawood",
/// "petersen", "tree:<n>,<seed>", "construction:<k>,<m>".
Graph make_family(std::string_view spec);

}  // namespace copclean
