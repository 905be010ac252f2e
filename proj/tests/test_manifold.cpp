#include <doctest.h>

#include <algorithm>

#include "fourcalc/pipelines.hpp"

using namespace fourcalc;

namespace {

ManifoldState quadrangle_s() { return catalog_block("S"); }

}  // namespace

TEST_CASE("blow_up arithmetic on S") {
  ManifoldState s = quadrangle_s();
  ManifoldState hat = blow_up(s);
  CHECK(hat.invariants.e == 16);
  CHECK(hat.invariants.sigma == 4);
  CHECK(hat.invariants.c1_sq == 44);
  CHECK(hat.invariants.chi_h == 5);
  CHECK(hat.invariants.spin == Spin::NonSpin);
  CHECK(hat.find("E1") != nullptr);
  CHECK(hat.find("E1")->self_intersection == -1);
  CHECK_THROWS_AS(blow_up(s, std::string("nope")), UnknownSurface);
}

TEST_CASE("blow_up on a surface drops its square and tracks the sphere") {
  ManifoldState s = quadrangle_s();
  ManifoldState r = resolve(s, {"R3", "R7", "R10"}, "R");
  const TrackedSurface& merged = r.require("R");
  CHECK(merged.genus == 6);
  CHECK(merged.self_intersection == 1);
  CHECK(r.invariants.e == 15);  // resolution leaves the manifold alone

  ManifoldState hat = blow_up(r, std::string("R"), std::string("Rtilde"));
  const TrackedSurface& rt = hat.require("Rtilde");
  CHECK(rt.genus == 6);
  CHECK(rt.self_intersection == 0);
  CHECK(rt.intersections.at("E1") == 1);
}

TEST_CASE("two blow-ups bring a square +2 surface to zero") {
  ManifoldState x24 = catalog_block("X_gg2", {2});
  ManifoldState t = resolve(x24, {"Sigma2", "S1", "S2"}, "Sigma6p");
  CHECK(t.require("Sigma6p").genus == 6);
  CHECK(t.require("Sigma6p").self_intersection == 2);
  t = blow_up(t, std::string("Sigma6p"));
  t = blow_up(t, std::string("Sigma6p"));
  CHECK(t.require("Sigma6p").self_intersection == 0);
  CHECK(t.invariants.e == 12);
  CHECK(t.invariants.sigma == -4);
  CHECK(t.invariants.c1_sq == 12);  // 2e + 3 sigma, not the stated 16
}

TEST_CASE("resolve instances from the constructions") {
  // genus-2 pair meeting once on top of a square-zero surface
  ManifoldState x46 = catalog_block("X_gg2", {4});
  ManifoldState r = resolve(x46, {"Sigma2", "S1"}, "Sigma6p");
  CHECK(r.require("Sigma6p").genus == 6);
  CHECK(r.require("Sigma6p").self_intersection == 1);
  // the untouched genus-4 surface still meets the resolved one
  CHECK(r.require("Sigma6p").intersections.at("S2") == 1);
  CHECK(r.require("S2").intersections.at("Sigma6p") == 1);

  // two tori meeting once
  ManifoldState t4 = catalog_block("T4");
  ManifoldState g2 = resolve(t4, {"Ta", "Tb"}, "Sigma2");
  CHECK(g2.require("Sigma2").genus == 2);
  CHECK(g2.require("Sigma2").self_intersection == 2);
}

TEST_CASE("resolve requires a connected configuration") {
  ManifoldState x46 = catalog_block("X_gg2", {4});
  CHECK_THROWS_AS(resolve(x46, {"S1", "S2"}, "nope"), DisconnectedConfiguration);
  CHECK_THROWS_AS(resolve(x46, {"S1", "missing"}, "nope"), UnknownSurface);
}

TEST_CASE("blow_up_at_intersection separates a double point") {
  ManifoldState t4 = catalog_block("T4_braided");
  CHECK(t4.require("Ta").intersections.at("Tbeta") == 2);
  ManifoldState b = blow_up_at_intersection(t4, "Ta", "Tbeta");
  CHECK(b.invariants.e == 1);
  CHECK(b.invariants.sigma == -1);
  CHECK(b.require("Ta").self_intersection == -1);
  CHECK(b.require("Tbeta").self_intersection == -1);
  CHECK(b.require("Ta").intersections.at("Tbeta") == 1);
  CHECK(b.require("E1").intersections.at("Ta") == 1);
  ManifoldState g2 = resolve(b, {"Ta", "Tbeta"}, "Sigma2");
  CHECK(g2.require("Sigma2").genus == 2);
  CHECK(g2.require("Sigma2").self_intersection == 0);
  CHECK(g2.require("Sigma2").intersections.at("E1") == 2);
}

TEST_CASE("symplectic_sum formulas and fundamental group deduction") {
  ManifoldState s_hat = catalog_block("S_hat");
  ManifoldState x31 = catalog_block("X_km", {3, 1});
  ManifoldState z = symplectic_sum(s_hat, "Rtilde", x31, "Sigma6");
  CHECK(z.invariants.e == 52);
  CHECK(z.invariants.sigma == 0);
  CHECK(z.invariants.c1_sq == 104);
  CHECK(z.invariants.chi_h == 13);
  CHECK(z.invariants.simply_connected);
  CHECK(z.invariants.spin == Spin::NonSpin);
  CHECK(z.pi1.form == Pi1Form::Explicit);
  CHECK(z.pi1.presentation->is_trivial_presentation());
  CHECK(z.find("Rtilde") == nullptr);
  CHECK(z.find("Sigma6") == nullptr);
  // the rim tori survive untouched, the -1 tori are boundary-touching
  CHECK(z.find("Rbar1") != nullptr);
  const TrackedSurface& t1 = z.require("T1");
  CHECK(std::find(t1.notes.begin(), t1.notes.end(), "boundary-touching") != t1.notes.end());
}

TEST_CASE("symplectic_sum checks genus and normal bundles") {
  ManifoldState a = catalog_block("Sigma2xSigmaN", {5});
  ManifoldState b = catalog_block("Sigma2xSigmaN", {4});
  CHECK_THROWS_AS(symplectic_sum(a, "SigmaN", b, "SigmaN"), GenusMismatch);
  ManifoldState x46 = catalog_block("X_gg2", {4});
  // genus 4 vs genus 4 but squares -1 + 0 != 0
  CHECK_THROWS_AS(symplectic_sum(x46, "S1", b, "SigmaN"), NormalBundleMismatch);
}

TEST_CASE("genus-1 sum adds euler characteristics exactly") {
  ManifoldState a = catalog_block("T4");
  ManifoldState b = catalog_block("T4");
  ManifoldState s = symplectic_sum(a, "Ta", b, "Ta");
  CHECK(s.invariants.e == 0);
  CHECK(s.invariants.sigma == 0);
  CHECK(s.pi1.form == Pi1Form::Undetermined);
}

TEST_CASE("M35 sum values") {
  PipelineResult pr = run_named_pipeline("M35");
  CHECK(pr.state.invariants.e == 57);
  CHECK(pr.state.invariants.sigma == 3);
  CHECK(pr.state.invariants.c1_sq == 123);
  CHECK(pr.state.invariants.chi_h == 15);
}

TEST_CASE("luttinger preserves every invariant") {
  ManifoldState y = catalog_block("Yn", {3});
  // add a surgery torus by hand
  TrackedSurface torus;
  torus.name = "L";
  torus.genus = 1;
  torus.self_intersection = 0;
  torus.tags = {SurfaceTag::Lagrangian};
  y.surfaces.push_back(torus);

  LuttingerSpec spec;
  spec.torus_name = "L";
  spec.curve_label = "gamma";
  spec.coeff_num = 1;
  spec.coeff_den = 1;
  spec.mu = gen_word(0);
  spec.gamma_push = gen_word(1);
  ManifoldState after = luttinger(y, spec);
  CHECK(after.invariants == y.invariants);
  CHECK(after.pi1.presentation->relators.size() == y.pi1.presentation->relators.size() + 1);
  CHECK(after.pi1.presentation->relators.back() == concat(spec.mu, spec.gamma_push));

  // the 0/1 coefficient adjoins the bare meridian
  LuttingerSpec zero = spec;
  zero.coeff_num = 0;
  ManifoldState z0 = luttinger(y, zero);
  CHECK(z0.invariants == y.invariants);
  CHECK(z0.pi1.presentation->relators.back() == spec.mu);

  LuttingerSpec not_torus = spec;
  not_torus.torus_name = "SigmaN";
  CHECK_THROWS_AS(luttinger(y, not_torus), NotATorus);
  LuttingerSpec missing = spec;
  missing.torus_name = "nope";
  CHECK_THROWS_AS(luttinger(y, missing), UnknownSurface);
}

TEST_CASE("knot surgery changes only the family label") {
  ManifoldState z = run_named_pipeline("Z3").state;
  ManifoldState k3 = knot_surgery(z, "Rbar1", 3);
  CHECK(k3.invariants.e == z.invariants.e);
  CHECK(k3.invariants.sigma == z.invariants.sigma);
  CHECK(k3.invariants.simply_connected == z.invariants.simply_connected);
  CHECK_FALSE(k3.invariants.symplectic);
  CHECK(k3.provenance.size() == z.provenance.size() + 1);

  ManifoldState k0 = knot_surgery(z, "Rbar1", 0);
  CHECK(k0.invariants == z.invariants);  // unknot convention keeps the symplectic flag

  ManifoldState k5 = knot_surgery(z, "Rbar1", 5);
  CHECK(k5.invariants.e == k3.invariants.e);
  CHECK(k5.provenance.back().op != k3.provenance.back().op);

  CHECK_THROWS_AS(knot_surgery(z, "Rbar2", 1), MissingComplementFact);
}

TEST_CASE("catalog blocks carry the cited invariants") {
  ManifoldState x31 = catalog_block("X_km", {3, 1});
  CHECK(x31.invariants.e == 16);
  CHECK(x31.invariants.sigma == -4);
  CHECK(x31.invariants.c1_sq == 20);
  CHECK(x31.invariants.chi_h == 3);
  CHECK(x31.require("Sigma6").genus == 6);
  CHECK(x31.require("Sigma6").self_intersection == 0);

  ManifoldState x46 = catalog_block("X_gg2", {4});
  CHECK(x46.invariants.e == 18);
  CHECK(x46.invariants.sigma == -2);
  CHECK(x46.invariants.c1_sq == 30);
  CHECK(x46.invariants.chi_h == 4);

  ManifoldState x56 = catalog_block("X_gg1", {5});
  CHECK(x56.invariants.e == 21);
  CHECK(x56.invariants.sigma == -1);
  CHECK(x56.invariants.c1_sq == 39);
  CHECK(x56.invariants.chi_h == 5);

  CHECK_THROWS_AS(catalog_block("nope"), UnknownBlock);
  CHECK_THROWS_AS(catalog_block("X_km", {0, 1}), BadParameter);
  CHECK_THROWS_AS(catalog_block("X_km", {3}), BadParameter);
  CHECK_THROWS_AS(catalog_block("S", {9}), BadParameter);
}

TEST_CASE("catalog states validate their ledgers") {
  for (const CatalogEntry& e : catalog_list()) {
    std::vector<i64> params;
    if (e.name == "S")
      params = {};
    else if (e.name == "X_km")
      params = {3, 1};
    else if (e.name == "X_gg2" || e.name == "X_gg1")
      params = {4};
    else if (e.name == "Sigma2xSigmaN")
      params = {5};
    else if (e.name == "Yn")
      params = {2};
    else if (e.name == "Yn_pq")
      params = {2, 1, 1, 1};
    ManifoldState st = catalog_block(e.name, params);
    st.validate();
    CHECK(st.invariants.c1_sq == 2 * st.invariants.e + 3 * st.invariants.sigma);
  }
}

TEST_CASE("Y_n blocks agree with the abelianized presentation") {
  ManifoldState y2 = catalog_block("Yn", {2});
  CHECK(y2.invariants.e == 4);
  CHECK(y2.invariants.b1 == 0);
  ManifoldState ypq = catalog_block("Yn_pq", {2, 1, 1, 1});
  CHECK(ypq.invariants.e == 0);
  CHECK(ypq.invariants.b1 == 2);
  CHECK(ypq.invariants.b2 == 2);
}
