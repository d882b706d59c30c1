#include <qdo/pbw.hpp>
#include <qdo/stateio.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace qdo;

namespace {

PBWState vac() { return PBWState::bottom_vector(); }

BasisKey rand_vq_creation(std::mt19937_64& rng, long w, long maxdepth) {
  long k = static_cast<long>(rng() % (2 * w + 1)) - w;
  long l = -1 - static_cast<long>(rng() % maxdepth);
  return EKey{k, l};
}

BasisKey rand_tilde_creation(std::mt19937_64& rng, long w, long maxdepth) {
  long a = static_cast<long>(rng() % (2 * w + 1)) - w;
  long m = static_cast<long>(rng() % (2 * w + 1)) - w;
  long d = -1 - static_cast<long>(rng() % maxdepth);
  return loop(GKey{a, m}, d);
}

LieElem rand_elem(const std::string& alg, std::mt19937_64& rng, long w) {
  auto idx = [&](long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
  };
  if (alg == "vq") {
    unsigned long roll = rng() % 12;
    if (roll == 0) return central(Central::C1);
    if (roll == 1) return central(Central::C2);
    long k, l;
    do {
      k = idx(-w, w);
      l = idx(-w, w);
    } while (k == 0 && l == 0);
    return E(k, l);
  }
  unsigned long roll = rng() % 12;
  if (roll == 0) return central(Central::K1);
  if (roll == 1) return central(Central::K2);
  return basis(loop(GKey{idx(-w, w), idx(-w, w)}, idx(-w, w)));
}

std::map<BasisKey, Matrix, KeyLess> scalar_table(
    const std::vector<std::pair<BasisKey, QLaurent>>& entries) {
  std::map<BasisKey, Matrix, KeyLess> t;
  for (const auto& [k, v] : entries) t.emplace(k, Matrix{{v}});
  return t;
}

}  // namespace

TEST_CASE("verma action: frozen values") {
  InductionSpec S = make_verma(QLaurent(0), QLaurent(1));

  PBWState w = act(S, E(-1, -2), vac());
  CHECK(act(S, E(1, 2), w) == QLaurent(2) * vac());

  // central action scales by the level
  CHECK(act(S, central(Central::C2), w) == w);
  CHECK(act(S, central(Central::C1), w).is_zero());

  // both l-indices land above the highest weight: everything dies
  PBWState u = act(S, E(2, -1), vac());
  CHECK(act(S, E(1, 3), u).is_zero());
}

TEST_CASE("vacuum action over tilde-A: frozen value") {
  InductionSpec S = make_vacuum("tilde-A", QLaurent(1), QLaurent(1));
  PBWState w = act(S, basis(loop(GKey{-1, 0}, -1)), vac());
  PBWState got = act(S, basis(loop(GKey{1, 0}, 0)), w);
  PBWState expected = act(S, (G(0, 1) - G(0, -1)).tensor_t(-1), vac()) + vac();
  CHECK(got == expected);
}

TEST_CASE("straightening reorders words with bracket corrections") {
  InductionSpec S = make_verma(QLaurent(0), QLaurent(1));
  PBWState sorted = parse_state(S, "E[1,-2] E[2,-1] v");
  REQUIRE(sorted.terms().size() == 1);
  CHECK(sorted.terms().begin()->first.monomial ==
        std::vector<BasisKey>{BasisKey(EKey{1, -2}), BasisKey(EKey{2, -1})});

  PBWState unsorted = parse_state(S, "E[2,-1] E[1,-2] v");
  PBWState corr = act(S, E(3, -3), vac());
  CHECK(unsorted == sorted + (q_pow(3) - q_pow(-3)) * corr);

  // printing a normal form round-trips
  CHECK(parse_state(S, state_str(S, unsorted)) == unsorted);
}

TEST_CASE("module axiom: frozen instances") {
  InductionSpec S = make_verma(QLaurent(0), QLaurent(1));
  CHECK(check_module_axiom(S, E(1, 1), E(-1, -1), vac()));
  PBWState both = act(S, E(1, 1), act(S, E(-1, -1), vac()));
  CHECK(both == (S.l1 + S.l2) * vac());
  CHECK(check_module_axiom(S, E(2, -1), E(2, -1), vac()));

  InductionSpec V = make_vacuum("tilde-A", QLaurent(1), QLaurent(1));
  CHECK(check_module_axiom(V, basis(loop(GKey{0, 1}, 2)), basis(loop(GKey{0, 1}, -3)), vac()));
}

TEST_CASE("module axiom on random triples, three induction specs") {
  std::mt19937_64 rng(91);
  InductionSpec verma = make_verma(QLaurent(0), QLaurent(1));
  InductionSpec vacuum = make_vacuum("tilde-A", QLaurent(Rational(1, 2)), QLaurent(1));
  InductionSpec ind = make_ind(
      QLaurent(0), QLaurent(Rational(1, 2)), 1,
      [] {
        std::map<BasisKey, Matrix, KeyLess> t;
        Matrix e12{{QLaurent(0), QLaurent(1)}, {QLaurent(0), QLaurent(0)}};
        Matrix e12b{{QLaurent(0), QLaurent(2)}, {QLaurent(0), QLaurent(0)}};
        t.emplace(EKey{1, 0}, e12);
        t.emplace(EKey{-1, 0}, e12b);
        return t;
      }(),
      2);

  for (int trial = 0; trial < 40; ++trial) {
    {
      PBWState w = vac();
      long depth = rng() % 3;
      for (long i = 0; i < depth; ++i) w = act(verma, basis(rand_vq_creation(rng, 3, 3)), w);
      CHECK(check_module_axiom(verma, rand_elem("vq", rng, 3), rand_elem("vq", rng, 3), w));
    }
    {
      PBWState w = vac();
      long depth = rng() % 3;
      for (long i = 0; i < depth; ++i)
        w = act(vacuum, basis(rand_tilde_creation(rng, 2, 2)), w);
      CHECK(check_module_axiom(vacuum, rand_elem("tilde-A", rng, 2),
                               rand_elem("tilde-A", rng, 2), w));
    }
    {
      PBWState w = PBWState::bottom_vector(static_cast<int>(rng() % 2));
      long depth = rng() % 3;
      for (long i = 0; i < depth; ++i) w = act(ind, basis(rand_vq_creation(rng, 2, 2)), w);
      CHECK(check_module_axiom(ind, rand_elem("vq", rng, 3), rand_elem("vq", rng, 3), w));
    }
  }
}

TEST_CASE("bottom consistency") {
  // trivial one-dimensional bottom at l1 = 0: consistent
  InductionSpec ok = make_verma(QLaurent(0), QLaurent(1));
  CHECK(check_bottom_consistency(ok, 3).consistent);

  // l1 = 1 on a one-dimensional bottom is inconsistent:
  // [E_{1,0}, E_{-1,0}] = c1 must act as 1 but scalars commute
  InductionSpec bad = make_verma(QLaurent(1), QLaurent(1));
  ConsistencyReport rep = check_bottom_consistency(bad, 2);
  CHECK_FALSE(rep.consistent);
  bool found = false;
  for (const auto& v : rep.violations)
    if (v.find("E[1,0]") != std::string::npos && v.find("E[-1,0]") != std::string::npos)
      found = true;
  CHECK(found);

  // empty table with l1 = l2 = 0
  CHECK(check_bottom_consistency(make_verma(QLaurent(0), QLaurent(0)), 3).consistent);

  // highest-weight scalars on E_{k,0} are fine as long as l1 = 0
  InductionSpec hw = make_verma(
      QLaurent(0), QLaurent(1),
      scalar_table({{EKey{1, 0}, QLaurent(3)},
                    {EKey{-1, 0}, QLaurent(Rational(1, 2))},
                    {EKey{2, 0}, q_pow(1)}}));
  CHECK(check_bottom_consistency(hw, 3).consistent);

  // vacuum bottoms are consistent at any level
  CHECK(check_bottom_consistency(make_vacuum("tilde-A", QLaurent(5), q_pow(2)), 2).consistent);
}

TEST_CASE("restrictedness bound") {
  InductionSpec S = make_verma(QLaurent(0), QLaurent(1));
  std::vector<long> ks = {-4, -2, -1, 0, 1, 2, 4};

  CHECK(restrictedness_bound(S, vac(), ks) == 1);

  PBWState w = parse_state(S, "E[1,-2] E[2,-1] v");
  CHECK(state_depth(w) == 3);
  CHECK(restrictedness_bound(S, w, ks) == 4);

  InductionSpec ind = make_ind(QLaurent(0), QLaurent(1), 1);
  PBWState u = act(ind, E(0, -2), vac());
  CHECK(restrictedness_bound(ind, u, ks) == 4);

  CHECK_THROWS_AS(
      restrictedness_bound(make_vacuum("tilde-A", QLaurent(0), QLaurent(0)), vac(), ks),
      std::invalid_argument);
}

TEST_CASE("support lemma with the symbolic bottom") {
  // j > i1*j1: vanishes
  SupportReport r1 = check_support_lemma(1, 0, 1, 1, 2, 3);
  CHECK(r1.ok);
  CHECK(r1.vanished);

  // j = i1*j1: singleton C E_{k'+i1 k1, t} v with the straightened scalar
  SupportReport r2 = check_support_lemma(1, 0, 1, 1, 2, 2);
  CHECK(r2.ok);
  CHECK_FALSE(r2.vanished);
  QLaurent c = q_pow(3) - q_pow(-3);  // t+2 = 3
  CHECK(r2.scalar == c * c);

  // i1 = 0: E_{k',t} v survives untouched
  SupportReport r3 = check_support_lemma(2, 3, 1, 1, 0, 0);
  CHECK(r3.ok);
  CHECK(r3.scalar == QLaurent(1));

  // a zero q-scalar lands in the line as 0: k1(t+j) + j1 k' = 0
  SupportReport r4 = check_support_lemma(1, -2, 1, 1, 1, 1);
  CHECK(r4.ok);
  CHECK(r4.vanished);

  // sweep: containment for j = i1*j1 and vanishing above it
  for (long t : {1L, 2L})
    for (long kp = -2; kp <= 2; ++kp)
      for (long k1 = -2; k1 <= 2; ++k1)
        for (long j1 = 1; j1 <= 2; ++j1)
          for (long i1 = 0; i1 <= 2; ++i1) {
            CHECK(check_support_lemma(t, kp, k1, j1, i1, i1 * j1).ok);
            CHECK(check_support_lemma(t, kp, k1, j1, i1, i1 * j1 + 1).ok);
            CHECK(check_support_lemma(t, kp, k1, j1, i1, i1 * j1 + 1).vanished);
          }
}

TEST_CASE("phi: frozen values") {
  QLaurent l1(3), l2(1);
  InductionSpec hat = make_vacuum("hat-A", QLaurent(0), l2);
  InductionSpec tilde = make_vacuum("tilde-A", l1, l2);

  CHECK(phi_map(hat, l1, vac()) == vac());

  // phi(G_{0,2}(-1) vac) = G_{0,2}(-1) vac - mu(G_{0,2}) l1 vac, mu = 1
  PBWState w = act(tilde, basis(loop(GKey{0, 2}, -1)), vac());
  PBWState img = phi_map(hat, l1, w);
  PBWState expected = act(hat, basis(loop(GKey{0, 2}, -1)), vac()) - l1 * vac();
  CHECK(img == expected);

  // mu(G_{1,0}) = 0: phi is the identity there
  PBWState w2 = act(tilde, basis(loop(GKey{1, 0}, -1)), vac());
  CHECK(phi_map(hat, l1, w2) == act(hat, basis(loop(GKey{1, 0}, -1)), vac()));
}

TEST_CASE("phi intertwines the two tilde-A actions") {
  std::mt19937_64 rng(404);
  for (auto [l1v, l2v] : std::vector<std::pair<QLaurent, QLaurent>>{
           {QLaurent(0), QLaurent(2)}, {QLaurent(1), QLaurent(1)},
           {QLaurent(Rational(1, 2)), q_pow(1)}}) {
    InductionSpec tilde = make_vacuum("tilde-A", l1v, l2v);
    InductionSpec hat = make_vacuum("hat-A", QLaurent(0), l2v);
    for (int trial = 0; trial < 30; ++trial) {
      PBWState w = vac();
      long depth = rng() % 3;
      for (long i = 0; i < depth; ++i) w = act(tilde, basis(rand_tilde_creation(rng, 2, 2)), w);
      LieElem x = rand_elem("tilde-A", rng, 2);
      CHECK(phi_map(hat, l1v, act(tilde, x, w)) == twisted_act(hat, l1v, x, phi_map(hat, l1v, w)));
      if (l1v.is_zero()) CHECK(phi_map(hat, l1v, w) == w);
    }
  }
}

TEST_CASE("vacuum grading: a (x) t^{-m} raises degree by m") {
  InductionSpec V = make_vacuum("tilde-A", QLaurent(1), QLaurent(2));
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    PBWState w = vac();
    long depth = rng() % 3;
    for (long i = 0; i < depth; ++i) w = act(V, basis(rand_tilde_creation(rng, 2, 2)), w);
    long before = state_depth(w);
    long m = 1 + static_cast<long>(rng() % 3);
    PBWState r = act(V, basis(loop(GKey{1, 1}, -m)), w);
    REQUIRE_FALSE(r.is_zero());
    CHECK(state_depth(r) == before + m);
  }
}

TEST_CASE("spec files round-trip") {
  InductionSpec hw = make_verma(
      QLaurent(0), QLaurent(1),
      scalar_table({{EKey{1, 0}, QLaurent(3)}, {EKey{-1, 0}, QLaurent(Rational(1, 2))}}));
  Json j = spec_to_json(hw);
  InductionSpec back = spec_from_json(j);
  CHECK(back.algebra.name == "vq");
  CHECK(back.bottom.cutoff == 0);
  CHECK(back.l2 == QLaurent(1));
  PBWState w = act(back, E(1, 0), PBWState::bottom_vector());
  CHECK(w == QLaurent(3) * PBWState::bottom_vector());

  Json vacj = spec_to_json(make_vacuum("tilde-A", QLaurent(1), QLaurent(1)));
  InductionSpec vacs = spec_from_json(vacj);
  CHECK(vacs.kind == "vacuum");
  CHECK(vacs.bottom_symbol == "vac");

  Json badkey = j;
  badkey["action"][0]["key"] = "E[1,5]";
  CHECK_THROWS_AS(spec_from_json(badkey), std::invalid_argument);
}
