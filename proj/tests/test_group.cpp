#include <doctest.h>

#include <numeric>
#include <random>

#include "fourcalc/pi1.hpp"
#include "fourcalc/smith.hpp"
#include "fourcalc/textio.hpp"
#include "fourcalc/tietze.hpp"

using namespace fourcalc;

namespace {

Presentation two_gen(const std::string& a, const std::string& b) {
  Presentation p;
  p.add_generator(a);
  p.add_generator(b);
  return p;
}

// Independent H1 oracle: determinantal divisors. d_k is the gcd of all
// k-by-k minors; the invariant factors are s_k = d_k / d_{k-1}.
std::pair<i64, std::vector<i64>> h1_by_determinantal_divisors(const IntMatrix& m, i64 gens) {
  auto combos = [](int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> idx(static_cast<size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      out.push_back(idx);
      int i = k - 1;
      while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
      if (i < 0) break;
      ++idx[static_cast<size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
  };
  std::vector<i64> dk;  // dk[k-1] = gcd of k-minors
  int nmax = std::min(m.rows, m.cols);
  for (int k = 1; k <= nmax; ++k) {
    i64 g = 0;
    for (const auto& rows : combos(m.rows, k))
      for (const auto& cols : combos(m.cols, k)) {
        IntMatrix sub(k, k);
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j)
            sub.at(i, j) = m.at(rows[static_cast<size_t>(i)], cols[static_cast<size_t>(j)]);
        g = std::gcd(g, determinant(sub));
        if (g == 1) break;
      }
    dk.push_back(g);
    if (g == 0) break;
  }
  int rank = 0;
  for (i64 d : dk)
    if (d != 0) ++rank;
  std::vector<i64> torsion;
  i64 prev = 1;
  for (int k = 0; k < rank; ++k) {
    i64 s = dk[static_cast<size_t>(k)] / prev;
    if (s > 1) torsion.push_back(s);
    prev = dk[static_cast<size_t>(k)];
  }
  return {gens - rank, torsion};
}

}  // namespace

TEST_CASE("add_relator rejects undeclared generators") {
  Presentation p = two_gen("a", "b");
  CHECK_THROWS_AS(p.add_relator(gen_word(5)), UnknownGenerator);
}

TEST_CASE("luttinger_quotient adjoins exactly one relator") {
  Presentation p = two_gen("mu", "g");
  Word mu = p.word_of("mu");
  Word gp = p.word_of("g");

  Presentation q1 = luttinger_quotient(p, mu, gp, 1);
  CHECK(q1.generators == p.generators);
  REQUIRE(q1.relators.size() == 1);
  CHECK(q1.relators[0] == free_reduce(concat(mu, gp)));

  Presentation q0 = luttinger_quotient(p, mu, gp, 0);
  CHECK(q0.relators[0] == mu);

  Presentation q5 = luttinger_quotient(p, mu, Word{}, 5);
  CHECK(q5.relators[0] == mu);

  Presentation base = make_y_n_presentation(2);
  Presentation quot = luttinger_quotient(base, gen_word(0), gen_word(1), 2);
  CHECK(quot.generators == base.generators);
  for (size_t i = 0; i < base.relators.size(); ++i) CHECK(quot.relators[i] == base.relators[i]);
  CHECK(quot.relators.size() == base.relators.size() + 1);
  CHECK_THROWS_AS(luttinger_quotient(p, gen_word(9), gp, 1), UnknownGenerator);
}

TEST_CASE("Y_n presentations have the displayed shape") {
  Presentation y2 = make_y_n_presentation(2);
  CHECK(y2.generators.size() == 8);
  CHECK(y2.relators.size() == 18);
  Presentation y3 = make_y_n_presentation(3);
  CHECK(y3.generators.size() == 10);
  CHECK(y3.relators.size() == 22);
  CHECK_THROWS_AS(make_y_n_presentation(1), BadParameter);
}

TEST_CASE("Y_n(1/p, m/q) carries the stated relators verbatim") {
  Presentation p = make_y_n_pq_presentation(3, 1, 1, 4);
  CHECK(p.generators.size() == 8);
  // the relator [c^-1, b3]^-4 d^-1, built through the text parser as an
  // independent route
  Word expected = parse_word(p, "[c^-1,b3]^-4 d^-1");
  bool found = false;
  for (const Word& r : p.relators) found = found || r == expected;
  CHECK(found);
  CHECK_THROWS_AS(make_y_n_pq_presentation(1, 1, 1, 1), BadParameter);
  CHECK_THROWS_AS(make_y_n_pq_presentation(2, 0, 1, 1), BadParameter);
}

TEST_CASE("abelianize on the catalog examples") {
  Presentation torus = two_gen("a", "b");
  torus.add_relator(commutator(gen_word(0), gen_word(1)));
  CHECK(abelianize(torus) == AbelianGroupDescription{2, {}});

  CHECK(abelianize(make_y_n_presentation(2)).is_trivial());

  Presentation z2;
  z2.add_generator("x");
  z2.add_relator(gen_word(0, 2));
  CHECK(abelianize(z2) == AbelianGroupDescription{0, {2}});

  CHECK(abelianize(make_y_n_pq_presentation(2, 1, 1, 1)) == AbelianGroupDescription{2, {}});
}

TEST_CASE("abelianize matches Z^2 + Z/p + Z/q on the surgered family") {
  for (i64 n = 2; n <= 4; ++n)
    for (i64 p = 1; p <= 3; ++p)
      for (i64 q = 1; q <= 3; ++q) {
        AbelianGroupDescription got = abelianize(make_y_n_pq_presentation(n, p, q, 1));
        CHECK(got == AbelianGroupDescription::canonical(2, {p, q}));
      }
  // spot check the canonical form itself: Z/2 + Z/3 = Z/6
  CHECK(AbelianGroupDescription::canonical(2, {2, 3}) == AbelianGroupDescription{2, {6}});
  CHECK(abelianize(make_y_n_pq_presentation(2, 2, 3, 1)) ==
        AbelianGroupDescription::canonical(2, {2, 3}));
}

TEST_CASE("abelianization is trivial for Y_n, n = 2..6") {
  for (i64 n = 2; n <= 6; ++n) CHECK(abelianize(make_y_n_presentation(n)).is_trivial());
}

TEST_CASE("abelianize is invariant under free reduction") {
  Presentation p = two_gen("a", "b");
  Word messy{{0, 1}, {0, -1}, {1, 2}, {0, 3}};
  p.add_relator(messy);  // stored reduced
  Presentation q = two_gen("a", "b");
  q.add_relator(free_reduce(messy));
  CHECK(abelianize(p) == abelianize(q));
}

TEST_CASE("smith normal form certificate on the Y_2 matrix") {
  IntMatrix a = exponent_matrix(make_y_n_presentation(2));
  SmithResult snf = smith_normal_form(a);
  CHECK(multiply(multiply(snf.u, to_big(a)), snf.v) == snf.d);
  CHECK((snf.u_det == 1 || snf.u_det == -1));
  CHECK((snf.v_det == 1 || snf.v_det == -1));
  for (size_t i = 1; i < snf.divisors.size(); ++i)
    CHECK(snf.divisors[i] % snf.divisors[i - 1] == 0);
  CHECK(snf.rank == 8);  // kills all eight generators
}

TEST_CASE("smith normal form against the determinantal-divisor oracle") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> dim(1, 4), entry(-4, 4);
  for (int trial = 0; trial < 300; ++trial) {
    int r = dim(rng), c = dim(rng);
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m.at(i, j) = entry(rng);
    SmithResult snf = smith_normal_form(m);
    CHECK(multiply(multiply(snf.u, to_big(m)), snf.v) == snf.d);
    CHECK(determinant(snf.u) == snf.u_det);
    CHECK(determinant(snf.v) == snf.v_det);
    auto [free_rank, torsion] = h1_by_determinantal_divisors(m, c);
    CHECK(free_rank == c - snf.rank);
    std::vector<i64> snf_torsion;
    for (i64 d : snf.divisors)
      if (d > 1) snf_torsion.push_back(d);
    CHECK(torsion == snf_torsion);
  }
}

TEST_CASE("tietze_simplify trivializes the obvious cases") {
  Presentation p = two_gen("a", "b");
  p.add_relator(gen_word(0));
  p.add_relator(gen_word(1));
  TietzeResult r = tietze_simplify(p, 10000);
  CHECK(r.trivialized);
  CHECK(r.result.generators.empty());

  Presentation q = two_gen("a", "b");
  q.add_relator(concat(gen_word(0), gen_word(1, -1)));
  q.add_relator(gen_word(1));
  CHECK(tietze_simplify(q, 10000).trivialized);
}

TEST_CASE("tietze_simplify shrinks Y_2 and never lies about triviality") {
  Presentation y2 = make_y_n_presentation(2);
  TietzeResult r = tietze_simplify(y2, 1000000);
  CHECK(r.result.generators.size() < y2.generators.size());
  CHECK(r.result.relators.size() < y2.relators.size());
  if (r.trivialized) {
    CHECK(r.result.generators.empty());
    CHECK(r.result.relators.empty());
  }
  // every transcript step preserves H1
  AbelianGroupDescription h1 = abelianize(y2);
  for (const TietzeStep& step : r.transcript) CHECK(abelianize(step.after) == h1);
}

TEST_CASE("tietze budget exhaustion still returns a presentation") {
  TietzeResult r = tietze_simplify(make_y_n_presentation(4), 50);
  CHECK(r.budget_spent >= 50);
  CHECK(!r.result.generators.empty());
  CHECK_THROWS_AS(tietze_simplify(make_y_n_presentation(2), 0), BadParameter);
}

TEST_CASE("van kampen amalgamation of explicit sides") {
  Presentation a;
  a.add_generator("a");
  Presentation b;
  b.add_generator("x");
  Pi1Datum merged = van_kampen_sum(ExplicitPi1{a, {}}, ExplicitPi1{b, {}}, {gen_word(0)},
                                   {gen_word(0)}, false);
  const auto& e = std::get<ExplicitPi1>(merged);
  CHECK(e.pres.generators.size() == 2);
  CHECK(abelianize(e.pres) == AbelianGroupDescription{1, {}});  // infinite cyclic

  Pi1Datum trivial = van_kampen_sum(ExplicitPi1{Presentation{}, {}},
                                    ExplicitPi1{Presentation{}, {}}, {}, {}, true);
  CHECK(std::get<ExplicitPi1>(trivial).pres.is_trivial_presentation());
}

TEST_CASE("van kampen renames colliding generators") {
  Presentation a = two_gen("a", "b");
  Presentation b = two_gen("a", "b");
  Pi1Datum merged = van_kampen_sum(ExplicitPi1{a, {}}, ExplicitPi1{b, {}}, {}, {}, false);
  const auto& e = std::get<ExplicitPi1>(merged);
  REQUIRE(e.pres.generators.size() == 4);
  CHECK(e.pres.gen_index("a'") >= 0);
  CHECK(e.pres.gen_index("b'") >= 0);
}

TEST_CASE("van kampen meridian relators are imposed when killing") {
  Presentation a;
  a.add_generator("m");
  ExplicitPi1 ea{a, gen_word(0)};
  Pi1Datum merged =
      van_kampen_sum(ea, ExplicitPi1{Presentation{}, {}}, {}, {}, true);
  const auto& e = std::get<ExplicitPi1>(merged);
  REQUIRE(e.pres.relators.size() == 1);
  CHECK(e.pres.relators[0] == gen_word(0));
}

TEST_CASE("van kampen deduction rule on declared facts") {
  DeclaredPi1 surj{{{FactKind::SurjectiveFromSurface, "cited surjectivity", "R"},
                    {FactKind::MeridianDies, "cited sphere section", "R"}},
                   false};
  DeclaredPi1 killed{{{FactKind::GeneratorsDieInComplement, "cited kill", "S"},
                      {FactKind::MeridianDies, "cited kill", "S"}},
                     false};
  Pi1Datum result = van_kampen_sum(surj, killed, {}, {}, true);
  CHECK(std::get<ExplicitPi1>(result).pres.is_trivial_presentation());

  // symmetric orientation
  Pi1Datum swapped = van_kampen_sum(killed, surj, {}, {}, true);
  CHECK(std::get<ExplicitPi1>(swapped).pres.is_trivial_presentation());

  // any missing kill-fact blocks the deduction
  DeclaredPi1 partial{{{FactKind::GeneratorsDieInComplement, "cited kill", "S"}}, false};
  Pi1Datum blocked = van_kampen_sum(surj, partial, {}, {}, true);
  CHECK(std::get<DeclaredPi1>(blocked).undetermined);

  // no meridian killing, no deduction
  Pi1Datum no_kill = van_kampen_sum(surj, killed, {}, {}, false);
  CHECK(std::get<DeclaredPi1>(no_kill).undetermined);
}

TEST_CASE("van kampen deduction never fires without the full fact set") {
  std::vector<Pi1Fact> all = {{FactKind::SurjectiveFromSurface, "c", ""},
                              {FactKind::GeneratorsDieInComplement, "c", ""},
                              {FactKind::MeridianDies, "c", ""}};
  for (int mask_a = 0; mask_a < 8; ++mask_a)
    for (int mask_b = 0; mask_b < 8; ++mask_b) {
      DeclaredPi1 a, b;
      for (int bit = 0; bit < 3; ++bit) {
        if (mask_a & (1 << bit)) a.facts.push_back(all[static_cast<size_t>(bit)]);
        if (mask_b & (1 << bit)) b.facts.push_back(all[static_cast<size_t>(bit)]);
      }
      Pi1Datum r = van_kampen_sum(a, b, {}, {}, true);
      bool trivial = std::holds_alternative<ExplicitPi1>(r);
      bool a_surj = has_fact(a, FactKind::SurjectiveFromSurface);
      bool b_surj = has_fact(b, FactKind::SurjectiveFromSurface);
      bool a_kills = has_fact(a, FactKind::GeneratorsDieInComplement) &&
                     has_fact(a, FactKind::MeridianDies);
      bool b_kills = has_fact(b, FactKind::GeneratorsDieInComplement) &&
                     has_fact(b, FactKind::MeridianDies);
      CHECK(trivial == ((a_surj && b_kills) || (b_surj && a_kills)));
    }
}

TEST_CASE("van kampen explicit kill side with literal relators") {
  // B kills the identified generator by a literal relator
  Presentation b = two_gen("x", "y");
  b.add_relator(gen_word(0));
  DeclaredPi1 surj{{{FactKind::SurjectiveFromSurface, "cited", ""}}, false};
  Pi1Datum ok = van_kampen_sum(surj, ExplicitPi1{b, gen_word(1)}, {Word{}}, {gen_word(0)}, true);
  CHECK(std::holds_alternative<ExplicitPi1>(ok));
  // an identified word that is not literally killed blocks it
  Pi1Datum blocked =
      van_kampen_sum(surj, ExplicitPi1{b, gen_word(1)}, {Word{}}, {gen_word(1)}, true);
  CHECK(std::get<DeclaredPi1>(blocked).undetermined);
}

TEST_CASE("van kampen rejects mismatched identification lists") {
  CHECK_THROWS_AS(van_kampen_sum(ExplicitPi1{Presentation{}, {}},
                                 ExplicitPi1{Presentation{}, {}}, {Word{}}, {}, false),
                  InconsistentIdentification);
}

TEST_CASE("presentation text format round-trips") {
  Presentation p = parse_presentation("gens: a b c\nrels: [a,b], a^2 b^-1");
  CHECK(p.generators == std::vector<std::string>{"a", "b", "c"});
  REQUIRE(p.relators.size() == 2);
  CHECK(p.relators[0] == commutator(gen_word(0), gen_word(1)));
  CHECK(p.relators[1] == free_reduce(Word{{0, 2}, {1, -1}}));
  Presentation q = parse_presentation(presentation_to_string(p));
  CHECK(q == p);
  // whitespace-insensitive; a one-line form with ';' also parses
  CHECK(parse_presentation("gens:a b c  rels:[ a , b ],a^2b^-1") == p);
  CHECK(parse_presentation("gens: a b c; rels: [a,b], a^2 b^-1") == p);
}
