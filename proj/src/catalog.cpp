#include "fourcalc/catalog.hpp"

#include "fourcalc/covers.hpp"
#include "fourcalc/smith.hpp"

namespace fourcalc {

namespace {

TrackedSurface surface(std::string name, i64 genus, i64 square, std::set<SurfaceTag> tags) {
  TrackedSurface s;
  s.name = std::move(name);
  s.genus = genus;
  s.self_intersection = square;
  s.tags = std::move(tags);
  return s;
}

void link(ManifoldState& st, const std::string& a, const std::string& b, i64 count) {
  st.require(a).intersections[b] = count;
  st.require(b).intersections[a] = count;
}

// The quadrangle-cover surface with the ramification curves the later
// constructions touch: the singular fiber R3 u R7, the section-like
// (-1)-curve R10 over the last exceptional line, and R8, a genus-2
// (-1)-curve disjoint from all three (the odd-square witness).
ManifoldState block_s(i64 n) {
  CoverSurface cs = quadrangle_cover_surface(n);
  ManifoldState st;
  st.invariants = cs.invariants;
  st.pi1.form = Pi1Form::Declared;
  if (n == 5) {
    std::set<SurfaceTag> tags{SurfaceTag::Complex, SurfaceTag::Symplectic};
    st.surfaces.push_back(surface("R3", 2, -1, tags));
    st.surfaces.push_back(surface("R7", 2, -1, tags));
    st.surfaces.push_back(surface("R10", 2, -1, tags));
    st.surfaces.push_back(surface("R8", 2, -1, tags));
    link(st, "R3", "R7", 1);   // the two components of a singular fiber
    link(st, "R3", "R10", 1);  // the fiber meets the curve over E3 once
  }
  st.provenance.push_back({"catalog S(" + std::to_string(n) + ")",
                           "§2.2: K_S^2 = 9^2 - 4*3^2 = 45, e(S) = 15; §5.4: "
                           "c1^2(S(n)) = 5(n-2)^2"});
  st.provenance.push_back(
      {"fibration (genus " + std::to_string(cs.fibration.fiber_genus) + " over genus " +
           std::to_string(cs.fibration.base_genus) + ", " +
           std::to_string(cs.fibration.singular_fibers) + " singular fibers)",
       "§2.3 Prop. (i); §5.4"});
  return st;
}

// S blown up once on the resolved genus-6 curve: carries Rtilde of
// square zero with the surjectivity and meridian facts.
ManifoldState block_s_hat() {
  ManifoldState st = block_s(5);
  st = resolve(st, {"R3", "R7", "R10"}, "R");
  // R^2 = 1 > 0 in an algebraic surface, so its fundamental group
  // surjects onto the ambient one
  st = blow_up(st, std::string("R"), std::string("Rtilde"));
  st = with_fact(st, FactKind::SurjectiveFromSurface, "Rtilde",
                 "§2.3 Prop. (iii): pi1(Rtilde) -> pi1(S # CP2bar) is surjective");
  return st;
}

ManifoldState block_x_km(i64 k, i64 m) {
  if (k < 1) throw BadParameter("X_km: k must be >= 1");
  if (m == 0) throw BadParameter("X_km: m must be nonzero");
  i64 e = checked_add(checked_mul(4, k), 4);
  i64 sigma = -4;
  ManifoldState st;
  st.invariants = derive(e, sigma, 0, Spin::NonSpin);
  st.invariants.simply_connected = true;
  st.invariants.symplectic = (m == 1 || m == -1);
  st.invariants.minimal = (m == 1 || m == -1);
  st.pi1.form = Pi1Form::Explicit;
  st.pi1.presentation = Presentation{};
  std::string sig = "Sigma" + std::to_string(2 * k);
  bool sympl = (m == 1 || m == -1);
  std::set<SurfaceTag> stag = sympl ? std::set<SurfaceTag>{SurfaceTag::Symplectic}
                                    : std::set<SurfaceTag>{};
  st.surfaces.push_back(surface(sig, 2 * k, 0, stag));
  for (int i = 1; i <= 4; ++i) {
    st.surfaces.push_back(surface("T" + std::to_string(i), 1, -1, stag));
    link(st, sig, "T" + std::to_string(i), 1);
  }
  for (i64 i = 1; i <= 2 * k - 2; ++i) {
    std::string rim = "Rbar" + std::to_string(i);
    std::string van = "V" + std::to_string(i);
    st.surfaces.push_back(surface(rim, 1, 0, {SurfaceTag::Lagrangian}));
    st.surfaces.push_back(surface(van, 1, -2, {SurfaceTag::Lagrangian}));
    link(st, rim, van, 1);
  }
  st.provenance.push_back({"catalog X(" + std::to_string(k) + "," + std::to_string(m) + ")",
                           "§3.4 Thm: e(X(k,m)) = 4k + 4, sigma = -4, c1^2 = 8k - 4, "
                           "simply connected; Remark: 2k-2 rim tori with dual vanishing classes"});
  st = with_fact(st, FactKind::GeneratorsDieInComplement, sig,
                 "§4 proof: the loops a1',...,b6' are trivial in the complement of the "
                 "genus-2k fiber");
  st = with_fact(st, FactKind::MeridianDies, sig,
                 "§4 proof: the meridian mu' is trivial in the complement of the "
                 "genus-2k fiber");
  return st;
}

ManifoldState block_x_gg2(i64 g) {
  if (g < 1) throw BadParameter("X_gg2: g must be >= 1");
  ManifoldState st;
  st.invariants = derive(checked_add(checked_mul(4, g), 2), -2, 0, Spin::NonSpin);
  st.invariants.simply_connected = true;
  st.invariants.symplectic = true;
  st.invariants.minimal = true;
  st.pi1.form = Pi1Form::Explicit;
  st.pi1.presentation = Presentation{};
  std::set<SurfaceTag> sym{SurfaceTag::Symplectic};
  st.surfaces.push_back(surface("Sigma2", 2, 0, sym));
  st.surfaces.push_back(surface("S1", g, -1, sym));
  st.surfaces.push_back(surface("S2", g, -1, sym));
  link(st, "Sigma2", "S1", 1);
  link(st, "Sigma2", "S2", 1);
  st.surfaces.push_back(surface("T1", 1, 0, {SurfaceTag::Lagrangian}));
  st.surfaces.push_back(surface("T2", 1, 0, {SurfaceTag::Lagrangian}));
  st.provenance.push_back(
      {"catalog X_{" + std::to_string(g) + "," + std::to_string(g + 2) + "}",
       "§3.4 Thm: e = 4g+2, sigma = -2, simply connected, minimal; genus-2 surface of "
       "square 0 and two genus-g surfaces of square -1 meeting it"});
  st = with_complement_trivial(
      st, "T1", "pi1 trivial off the Lagrangian pair T1 u T2 (cited proof of Thm 8, p. 272)");
  st = with_complement_trivial(
      st, "T2", "pi1 trivial off the Lagrangian pair T1 u T2 (cited proof of Thm 8, p. 272)");
  return st;
}

ManifoldState block_x_gg1(i64 g) {
  if (g < 1) throw BadParameter("X_gg1: g must be >= 1");
  ManifoldState st;
  st.invariants = derive(checked_add(checked_mul(4, g), 1), -1, 0, Spin::NonSpin);
  st.invariants.simply_connected = true;
  st.invariants.symplectic = true;
  st.invariants.minimal = true;
  st.pi1.form = Pi1Form::Explicit;
  st.pi1.presentation = Presentation{};
  std::set<SurfaceTag> sym{SurfaceTag::Symplectic};
  st.surfaces.push_back(surface("Sigma2", 2, 0, sym));
  st.surfaces.push_back(surface("Sigma" + std::to_string(g + 1), g + 1, 0, sym));
  link(st, "Sigma2", "Sigma" + std::to_string(g + 1), 1);
  st.surfaces.push_back(surface("T1", 1, 0, {SurfaceTag::Lagrangian}));
  st.surfaces.push_back(surface("T2", 1, 0, {SurfaceTag::Lagrangian}));
  st.provenance.push_back({"catalog X_{" + std::to_string(g) + "," + std::to_string(g + 1) + "}",
                           "§3.4 Thm: e = 4g+1, sigma = -1, simply connected, minimal"});
  return st;
}

Presentation free_abelian_presentation(const std::vector<std::string>& gens) {
  Presentation p;
  for (const std::string& g : gens) p.add_generator(g);
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      p.add_relator(commutator(gen_word(static_cast<int>(i)), gen_word(static_cast<int>(j))));
  return p;
}

ManifoldState block_t4(bool braided) {
  ManifoldState st;
  st.invariants = derive(0, 0, 4, Spin::Spin);
  st.invariants.symplectic = true;
  st.invariants.minimal = true;
  st.pi1.form = Pi1Form::Explicit;
  st.pi1.presentation = free_abelian_presentation({"x1", "x2", "x3", "x4"});
  std::set<SurfaceTag> sym{SurfaceTag::Symplectic};
  st.surfaces.push_back(surface("Ta", 1, 0, sym));
  if (braided) {
    // the braided torus in the class 2[pt x T^2] meets Ta twice
    st.surfaces.push_back(surface("Tbeta", 1, 0, sym));
    link(st, "Ta", "Tbeta", 2);
    st.provenance.push_back({"catalog T4 with braided torus",
                             "§5.3: braided torus in the class 2[pt x T^2] meeting "
                             "T^2 x pt at two points"});
  } else {
    st.surfaces.push_back(surface("Tb", 1, 0, sym));
    link(st, "Ta", "Tb", 1);
    st.provenance.push_back({"catalog T4", "dual pair of square-zero tori in the 4-torus"});
  }
  return st;
}

ManifoldState block_sigma2_x_sigma_n(i64 n) {
  if (n < 1) throw BadParameter("Sigma2xSigmaN: n must be >= 1");
  i64 e = checked_mul(-2, checked_sub(2, checked_mul(2, n)));  // e(Sigma2) * e(Sigma_n)
  i64 b1 = checked_add(4, checked_mul(2, n));
  ManifoldState st;
  st.invariants = derive(e, 0, b1, Spin::Spin);
  st.invariants.symplectic = true;
  st.invariants.minimal = true;

  // pi1 = (genus-2 group) x (genus-n group)
  Presentation p;
  std::vector<int> a(2), b(2), c(n), d(n);
  for (int i = 0; i < 2; ++i) a[i] = p.add_generator("a" + std::to_string(i + 1));
  for (int i = 0; i < 2; ++i) b[i] = p.add_generator("b" + std::to_string(i + 1));
  for (i64 j = 0; j < n; ++j) c[j] = p.add_generator("c" + std::to_string(j + 1));
  for (i64 j = 0; j < n; ++j) d[j] = p.add_generator("d" + std::to_string(j + 1));
  Word s1 = concat(commutator(gen_word(a[0]), gen_word(b[0])),
                   commutator(gen_word(a[1]), gen_word(b[1])));
  p.add_relator(s1);
  Word s2;
  for (i64 j = 0; j < n; ++j) s2 = concat(s2, commutator(gen_word(c[j]), gen_word(d[j])));
  p.add_relator(s2);
  for (int i = 0; i < 2; ++i)
    for (i64 j = 0; j < n; ++j) {
      p.add_relator(commutator(gen_word(a[i]), gen_word(c[j])));
      p.add_relator(commutator(gen_word(a[i]), gen_word(d[j])));
      p.add_relator(commutator(gen_word(b[i]), gen_word(c[j])));
      p.add_relator(commutator(gen_word(b[i]), gen_word(d[j])));
    }
  st.pi1.form = Pi1Form::Explicit;
  st.pi1.presentation = std::move(p);

  std::set<SurfaceTag> sym{SurfaceTag::Symplectic};
  st.surfaces.push_back(surface("Sigma2", 2, 0, sym));
  st.surfaces.push_back(surface("SigmaN", n, 0, sym));
  link(st, "Sigma2", "SigmaN", 1);
  st.surfaces.push_back(surface("T1", 1, 0, {SurfaceTag::Lagrangian}));
  st.surfaces.push_back(surface("T2", 1, 0, {SurfaceTag::Lagrangian}));
  st.provenance.push_back({"catalog Sigma2 x Sigma" + std::to_string(n),
                           "product symplectic form; two Lagrangian tori away from the "
                           "standard surfaces (§5.1)"});
  return st;
}

ManifoldState block_y_n(i64 n) {
  ManifoldState st;
  Presentation p = make_y_n_presentation(n);
  i64 b1 = abelianize(p).free_rank;
  st.invariants = derive(checked_sub(checked_mul(4, n), 4), 0, b1, Spin::Unknown);
  st.invariants.symplectic = true;
  st.invariants.minimal = true;
  st.pi1.form = Pi1Form::Explicit;
  st.pi1.presentation = std::move(p);
  std::set<SurfaceTag> sym{SurfaceTag::Symplectic};
  st.surfaces.push_back(surface("Sigma2", 2, 0, sym));
  st.surfaces.push_back(surface("SigmaN", n, 0, sym));
  link(st, "Sigma2", "SigmaN", 1);
  st.provenance.push_back({"catalog Y_" + std::to_string(n),
                           "§3.3: 2n+4 Luttinger surgeries on Sigma_n x Sigma_2; "
                           "e(Y_n) = 4n - 4, sigma = 0"});
  return st;
}

ManifoldState block_y_n_pq(i64 n, i64 p_coef, i64 q_coef, i64 m) {
  ManifoldState st;
  Presentation p = make_y_n_pq_presentation(n, p_coef, q_coef, m);
  i64 b1 = abelianize(p).free_rank;
  st.invariants = derive(0, 0, b1, Spin::Unknown);
  st.invariants.symplectic = (m == 1 || m == -1);
  st.invariants.minimal = (m == 1 || m == -1);
  st.pi1.form = Pi1Form::Explicit;
  st.pi1.presentation = std::move(p);
  std::set<SurfaceTag> sym{SurfaceTag::Symplectic};
  st.surfaces.push_back(surface("SigmaN", n, 0, sym));
  st.surfaces.push_back(surface("T", 1, 0, sym));
  link(st, "SigmaN", "T", 1);
  st.provenance.push_back({"catalog Y_" + std::to_string(n) + "(1/" + std::to_string(p_coef) +
                               ", " + std::to_string(m) + "/" + std::to_string(q_coef) + ")",
                           "§3.3: 2n torus surgeries on Sigma_n x T^2"});
  return st;
}

void expect_params(const std::string& name, const std::vector<i64>& params, size_t lo,
                   size_t hi) {
  if (params.size() < lo || params.size() > hi)
    throw BadParameter("catalog block " + name + ": wrong parameter count");
}

}  // namespace

std::vector<CatalogEntry> catalog_list() {
  return {
      {"S", "[n = 5]", "quadrangle-cover surface on the c1^2 = 9 chi_h line"},
      {"S_hat", "", "S # CP2bar with the square-zero genus-6 curve Rtilde"},
      {"X_km", "(k, m)", "simply connected block with e = 4k+4, sigma = -4"},
      {"X_gg2", "(g)", "simply connected block with e = 4g+2, sigma = -2"},
      {"X_gg1", "(g)", "simply connected block with e = 4g+1, sigma = -1"},
      {"T4", "", "4-torus with a dual pair of square-zero tori"},
      {"T4_braided", "", "4-torus with a braided torus in class 2[pt x T^2]"},
      {"Sigma2xSigmaN", "(n)", "product of a genus-2 and a genus-n surface"},
      {"Yn", "(n)", "surgered Sigma_n x Sigma_2 with explicit presentation"},
      {"Yn_pq", "(n, p, q, m)", "surgered Sigma_n x T^2 family"},
  };
}

ManifoldState catalog_block(const std::string& name, const std::vector<i64>& params) {
  ManifoldState st;
  if (name == "S") {
    expect_params(name, params, 0, 1);
    st = block_s(params.empty() ? 5 : params[0]);
  } else if (name == "S_hat") {
    expect_params(name, params, 0, 0);
    st = block_s_hat();
  } else if (name == "X_km") {
    expect_params(name, params, 2, 2);
    st = block_x_km(params[0], params[1]);
  } else if (name == "X_gg2") {
    expect_params(name, params, 1, 1);
    st = block_x_gg2(params[0]);
  } else if (name == "X_gg1") {
    expect_params(name, params, 1, 1);
    st = block_x_gg1(params[0]);
  } else if (name == "T4") {
    expect_params(name, params, 0, 0);
    st = block_t4(false);
  } else if (name == "T4_braided") {
    expect_params(name, params, 0, 0);
    st = block_t4(true);
  } else if (name == "Sigma2xSigmaN") {
    expect_params(name, params, 1, 1);
    st = block_sigma2_x_sigma_n(params[0]);
  } else if (name == "Yn") {
    expect_params(name, params, 1, 1);
    st = block_y_n(params[0]);
  } else if (name == "Yn_pq") {
    expect_params(name, params, 4, 4);
    st = block_y_n_pq(params[0], params[1], params[2], params[3]);
  } else {
    throw UnknownBlock("no catalog block named " + name);
  }
  st.validate();
  return st;
}

}  // namespace fourcalc
