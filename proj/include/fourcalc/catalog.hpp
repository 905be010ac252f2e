// The catalog of building blocks with cited invariants, tracked
// surfaces, and fundamental-group data.
#pragma once

#include "fourcalc/manifold.hpp"

namespace fourcalc {

struct CatalogEntry {
  std::string name;
  std::string params;  // human-readable parameter doc
  std::string description;
};

std::vector<CatalogEntry> catalog_list();

// Blocks:
//   "S"              quadrangle-cover surface, optional n (default 5)
//   "S_hat"          S blown up once, carrying the square-zero genus-6 curve Rtilde
//   "X_km"           params (k, m): the fiber-sum blocks with sigma = -4
//   "X_gg2"          param g: sigma = -2 blocks with two genus-g (-1)-surfaces
//   "X_gg1"          param g: sigma = -1 blocks with a genus-(g+1) square-zero surface
//   "T4"             the 4-torus with a dual pair of square-zero tori
//   "T4_braided"     the 4-torus with a braided torus in class 2[pt x T^2]
//   "Sigma2xSigmaN"  param n: product of a genus-2 and a genus-n surface
//   "Yn"             param n: surgered product with explicit presentation
//   "Yn_pq"          params (n, p, q, m): surgered (genus n) x (torus) family
ManifoldState catalog_block(const std::string& name, const std::vector<i64>& params = {});

}  // namespace fourcalc
