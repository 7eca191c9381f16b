#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "diagdeg/actions.hpp"
#include "diagdeg/degrees.hpp"
#include "diagdeg/oracle.hpp"
#include "testutil.hpp"

using namespace diagdeg;

namespace {

ActionState proj(const Diagram& d) {
  return ActionState::make(StateKind::Proj, d);
}

}  // namespace

TEST_CASE("projection action transitions") {
  ActionTable t = build_projection_action(Family::P, 3);
  Diagram pi    = special(Family::P, 3, "pi");
  Diagram zeta  = special(Family::P, 3, "zeta");
  Diagram alpha = special(Family::P, 3, "alpha");
  Diagram beta  = special(Family::P, 3, "beta");
  Diagram gamma = special(Family::P, 3, "gamma");

  CHECK(t.apply(proj(pi), zeta) == proj(zeta));
  CHECK(t.apply(proj(pi), alpha).is_sink());
  CHECK(t.apply(proj(pi), beta)
        == proj(Diagram::parse("[[1,2],[3],[-1,-2],[-3]]", 3)));
  CHECK(t.apply(proj(pi), gamma) == proj(gamma));
  for (const Diagram& a : {zeta, alpha, beta, gamma, pi}) {
    CHECK(t.apply(ActionState::sink(), a).is_sink());
  }
}

TEST_CASE("action law") {
  EnumeratedMonoid p2 = enumerate(Family::P, 2);
  ActionTable t2      = build_projection_action(Family::P, 2);
  CHECK(check_action_law(t2, p2).ok);

  EnumeratedMonoid b4 = enumerate(Family::B, 4);
  ActionTable tb4     = build_brauer_action(4);
  CHECK(check_action_law(tb4, b4).ok);

  // full law on P_3 (all states, all pairs)
  EnumeratedMonoid p3 = enumerate(Family::P, 3);
  ActionTable t3      = build_projection_action(Family::P, 3);
  CHECK(check_action_law(t3, p3).ok);

  // the odd Brauer quotient and both transported TL parities
  EnumeratedMonoid b3 = enumerate(Family::B, 3);
  CHECK(check_action_law(build_brauer_action(3), b3).ok);
  EnumeratedMonoid tl4 = enumerate(Family::TL, 4);
  CHECK(check_action_law(build_projection_action(Family::TL, 4), tl4).ok);
  EnumeratedMonoid tl5 = enumerate(Family::TL, 5);
  CHECK(check_action_law(build_projection_action(Family::TL, 5), tl5).ok);

  // sampled mode, for monoids too large to sweep
  EnumeratedMonoid b6 = enumerate(Family::B, 6);
  CHECK(check_action_law_sampled(build_brauer_action(6), b6.elements(), 20000,
                                 99)
            .ok);

  // a corrupted dense table is detected, with a witness
  auto table = materialize_transitions(t2, p2);
  CHECK(check_action_law_table(table, p2).ok);
  table[1][3] = table[1][3] == 0 ? 1 : 0;
  LawCheck bad = check_action_law_table(table, p2);
  CHECK(!bad.ok);
  CHECK(!bad.witness.empty());
}

TEST_CASE("state counts") {
  CHECK(build_projection_action(Family::P, 2).state_count() == 7);
  CHECK(build_projection_action(Family::M, 2).state_count() == 6);
  CHECK(build_projection_action(Family::P, 3).state_count() == 22);
  CHECK(build_brauer_action(3).state_count() == 7);
  CHECK(build_brauer_action(5).state_count() == 46);
  CHECK(build_brauer_action(4).state_count() == 19);
  CHECK_THROWS_AS(build_projection_action(Family::P, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_brauer_action(2), std::invalid_argument);
}

TEST_CASE("faithfulness by full kernel") {
  EnumeratedMonoid p3 = enumerate(Family::P, 3);
  CHECK(check_faithful_full(build_projection_action(Family::P, 3), p3));
  CHECK(!check_faithful_full(build_mu_prime(Family::P, 3), p3));
  // the Cayley action (quotient by the diagonal) is faithful
  EnumeratedMonoid p2 = enumerate(Family::P, 2);
  ActionTable cayley  = quotient_action(p2, EquivRelation(p2.size()));
  CHECK(cayley.state_count() == p2.size());
  CHECK(check_faithful_full(cayley, p2));
}

TEST_CASE("mu prime kernel is lambda") {
  for (auto [f, n] : {std::pair<Family, int>{Family::P, 2},
                      {Family::PB, 2},
                      {Family::PP, 2},
                      {Family::M, 2},
                      {Family::P, 3},
                      {Family::PB, 3},
                      {Family::PP, 3},
                      {Family::M, 3},
                      {Family::PP, 4},
                      {Family::M, 4}}) {
    EnumeratedMonoid m = enumerate(f, n);
    ActionTable t      = build_mu_prime(f, n);
    CHECK(action_kernel(t, m) == lambda_relation(m));
  }
}

TEST_CASE("mu prime sink is absorbing") {
  ActionTable t       = build_mu_prime(Family::P, 2);
  EnumeratedMonoid p2 = enumerate(Family::P, 2);
  for (const Diagram& a : p2.elements()) {
    CHECK(t.apply(ActionState::sink(), a).is_sink());
  }
}

TEST_CASE("mu prime separations on P_3") {
  ActionTable t = build_mu_prime(Family::P, 3);
  Diagram zeta  = special(Family::P, 3, "zeta");
  Diagram alpha = special(Family::P, 3, "alpha");
  Diagram beta  = special(Family::P, 3, "beta");
  Diagram gamma = special(Family::P, 3, "gamma");
  CHECK(check_faithful_minpairs(t, {{zeta, beta}}).ok);
  CHECK(check_faithful_minpairs(t, {{zeta, gamma}}).ok);
  MinpairsCheck r = check_faithful_minpairs(t, {{zeta, alpha}});
  CHECK(!r.ok);
  CHECK(r.unseparated->first == zeta);
  CHECK(r.unseparated->second == alpha);
}

TEST_CASE("mu prime unseparated witness on P_4") {
  ActionTable t = build_mu_prime(Family::P, 4);
  MinpairsCheck r
      = check_faithful_minpairs(t, minimal_pairs(Family::P, 4));
  CHECK(!r.ok);
  CHECK(r.unseparated->second == special(Family::P, 4, "alpha"));
}

TEST_CASE("sigma classifier") {
  auto ctx3 = std::make_shared<const BrauerContext>(brauer_context(3));
  BrauerSigmaClassifier cls3(ctx3);
  CHECK(cls3.orbit(ctx3->zeta).size() == 1);  // [zeta] = {zeta}
  CHECK(cls3.canonical_rep(ctx3->zeta) == ctx3->zeta);

  auto ctx5 = std::make_shared<const BrauerContext>(brauer_context(5));
  BrauerSigmaClassifier cls5(ctx5);
  CHECK(cls5.orbit(ctx5->zeta).size() == 1);

  // alpha L^U bar(alpha) for every alpha in K (Brauer bar), exhaustive B_4
  auto ctx4 = std::make_shared<const BrauerContext>(brauer_context(4));
  BrauerSigmaClassifier cls4(ctx4);
  EnumeratedMonoid b4 = enumerate(Family::B, 4);
  for (const Diagram& a : b4.elements()) {
    if (cls4.in_sink(a)) {
      continue;
    }
    CHECK(cls4.canonical_rep(a) == cls4.canonical_rep(bar(a, Family::B)));
  }

  // class counts inside L-classes of K: r!/|Gamma_r| for B_5, r in {1,3}
  EnumeratedMonoid b5 = enumerate(Family::B, 5);
  std::map<std::pair<int, std::string>, std::set<Diagram>> classes;
  for (const Diagram& a : b5.elements()) {
    if (cls5.in_sink(a) || a.rank() == 5) {
      continue;
    }
    classes[{a.rank(), a.coker().to_string()}].insert(cls5.canonical_rep(a));
  }
  for (const auto& [key, reps] : classes) {
    CHECK(reps.size() == (key.first == 1 ? 1u : 3u));
  }
}

TEST_CASE("sigma classes are representative independent") {
  // Multiplying any two members of a class by the same element lands in the
  // same class again.
  auto ctx = std::make_shared<const BrauerContext>(brauer_context(5));
  BrauerSigmaClassifier cls(ctx);
  std::mt19937_64 rng(77);
  EnumeratedMonoid b5 = enumerate(Family::B, 5);
  std::uniform_int_distribution<size_t> pick(0, b5.size() - 1);
  for (int i = 0; i < 300; ++i) {
    const Diagram& x = b5.at(pick(rng));
    if (cls.in_sink(x)) {
      continue;
    }
    std::vector<Diagram> orb = cls.orbit(x);
    const Diagram& x2 = orb[pick(rng) % orb.size()];
    const Diagram& beta = b5.at(pick(rng));
    Diagram xa = x * beta, x2a = x2 * beta;
    CHECK(cls.in_sink(xa) == cls.in_sink(x2a));
    if (!cls.in_sink(xa)) {
      CHECK(cls.canonical_rep(xa) == cls.canonical_rep(x2a));
    }
  }
}

TEST_CASE("brauer K-rank enumeration") {
  auto ctx = brauer_context(5);
  // |D_r n K| = C(k, (r-1)/2) * C(n,r) (n-r-1)!! r!
  CHECK(brauer_rank_K(ctx, 1).size() == 15);        // 1 * 5*3!! * 1
  CHECK(brauer_rank_K(ctx, 3).size() == 2 * 60);    // C(2,1) * C(5,3)*1!!*3!
  for (const Diagram& d : brauer_rank_K(ctx, 3)) {
    CHECK(d.rank() == 3);
    CHECK(d.ker().refines(ctx.kappa));
  }
}

TEST_CASE("odd brauer action") {
  for (int n : {3, 5}) {
    ActionTable t      = build_brauer_action(n);
    EnumeratedMonoid m = enumerate(Family::B, n);
    CHECK(check_faithful_full(t, m));
    CHECK(check_monogenic(t, t.witnesses().front()));
    CHECK(t.sink_index().has_value());
  }
  // orbit of the sink alone is not the whole state set
  ActionTable t3 = build_brauer_action(3);
  CHECK(!check_monogenic(t3, ActionState::sink()));
}

TEST_CASE("even brauer action") {
  ActionTable t      = build_brauer_action(4);
  EnumeratedMonoid m = enumerate(Family::B, 4);
  CHECK(t.state_count() == 19);
  CHECK(check_faithful_full(t, m));

  // |Omega_1| = 2 p_2 + p_0 = 15 for n = 4
  size_t omega1 = 0;
  for (const ActionState& s : t.states()) {
    if (s.kind == StateKind::Elem) {
      ++omega1;
    }
  }
  CHECK(omega1 == 15);

  // mu_1 separates (zeta, beta) and (gamma, delta); mu_2 separates
  // (zeta, alpha).
  Diagram zeta  = special(Family::B, 4, "zeta");
  Diagram alpha = special(Family::B, 4, "alpha");
  Diagram beta  = special(Family::B, 4, "beta");
  Diagram gamma = special(Family::B, 4, "gamma");
  Diagram delta = special(Family::B, 4, "delta");
  ActionState wz = t.witnesses()[0];
  ActionState wg = t.witnesses()[1];
  ActionState wp = t.witnesses()[2];
  CHECK(wz == ActionState::make(StateKind::Elem, zeta));
  CHECK(t.apply(wz, zeta) != t.apply(wz, beta));
  CHECK(t.apply(wg, gamma) != t.apply(wg, delta));
  CHECK(t.apply(wp, zeta) != t.apply(wp, alpha));
  CHECK(t.apply(wp, alpha).is_sink());
}

TEST_CASE("TL action states are the low-rank TL projections") {
  // Even degree: the transported states are exactly the projections of rank
  // 0, 2, 4; odd degree: rank 1 and 3.
  for (int n : {4, 6, 8}) {
    ActionTable t = build_projection_action(Family::TL, n);
    std::set<Diagram> have;
    for (const ActionState& s : t.states()) {
      if (!s.is_sink()) {
        have.insert(s.value);
      }
    }
    std::set<Diagram> want;
    for (int r : {0, 2, 4}) {
      for (const Diagram& d : projections(Family::TL, n, r)) {
        want.insert(d);
      }
    }
    CHECK(have == want);
  }
  for (int n : {3, 5, 7}) {
    ActionTable t = build_projection_action(Family::TL, n);
    std::set<Diagram> have;
    for (const ActionState& s : t.states()) {
      if (!s.is_sink()) {
        have.insert(s.value);
      }
    }
    std::set<Diagram> want;
    for (int r : {1, 3}) {
      for (const Diagram& d : projections(Family::TL, n, r)) {
        want.insert(d);
      }
    }
    CHECK(have == want);
  }
}

TEST_CASE("minimal pair checks agree with full checks") {
  for (auto [f, n] : {std::pair<Family, int>{Family::P, 3},
                      {Family::PB, 3},
                      {Family::PP, 3},
                      {Family::M, 3},
                      {Family::TL, 5},
                      {Family::TL, 6},
                      {Family::B, 4},
                      {Family::B, 5}}) {
    ActionTable t      = build_projection_action(f, n);
    EnumeratedMonoid m = enumerate(f, n);
    bool full          = check_faithful_full(t, m);
    bool pairs         = check_faithful_minpairs(t, minimal_pairs(f, n)).ok;
    CHECK(full);
    CHECK(pairs == full);
  }
}

TEST_CASE("quotient actions") {
  EnumeratedMonoid p2 = enumerate(Family::P, 2);

  ActionTable universal = quotient_action(p2, EquivRelation::universal(p2.size()));
  CHECK(universal.state_count() == 1);

  // sigma_pi: the action is monogenic from pi, so the quotient by sigma_pi
  // is isomorphic to it.
  ActionTable t = build_projection_action(Family::P, 2);
  ActionState seed = t.witnesses().front();
  EquivRelation sigma_pi = sigma_from_state(t, seed, p2);
  CHECK(verify_right_congruence(p2, sigma_pi));
  ActionTable q = quotient_action(p2, sigma_pi);
  CHECK(q.state_count() == t.state_count());
  // isomorphism: [a] -> mu(pi, a), checked equivariant on every element
  std::map<size_t, ActionState> iso;
  for (size_t e = 0; e < p2.size(); ++e) {
    size_t cls = sigma_pi.find(e);
    ActionState image = t.apply(seed, p2.at(e));
    auto it = iso.find(cls);
    if (it == iso.end()) {
      iso.emplace(cls, image);
    } else {
      CHECK(it->second == image);
    }
  }
  std::set<std::string> images;
  for (const auto& [cls, image] : iso) {
    images.insert(image.label());
  }
  CHECK(images.size() == t.state_count());
  for (size_t e = 0; e < p2.size(); ++e) {
    for (const Diagram& g : p2.elements()) {
      ActionState lhs = iso.at(sigma_pi.find(p2.index_of(p2.at(e) * g)));
      ActionState rhs = t.apply(iso.at(sigma_pi.find(e)), g);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("quotient kernel equals the largest contained congruence") {
  EnumeratedMonoid b3 = enumerate(Family::B, 3);
  TableMonoid tm      = TableMonoid::from_monoid(b3);
  auto ctx            = std::make_shared<const BrauerContext>(brauer_context(3));
  BrauerSigmaClassifier cls(ctx);

  EquivRelation sigma = brauer_sigma_relation(b3, cls);
  REQUIRE(verify_right_congruence(b3, sigma));
  CHECK(action_kernel(quotient_action(b3, sigma), b3)
        == largest_congruence_within(tm, sigma));

  // a Rees right congruence: collapse the ideal of non-maximal rank
  EquivRelation rees(b3.size());
  int64_t first = -1;
  for (size_t e = 0; e < b3.size(); ++e) {
    if (b3.at(e).rank() < 3) {
      if (first < 0) {
        first = static_cast<int64_t>(e);
      } else {
        rees.merge(static_cast<size_t>(first), e);
      }
    }
  }
  REQUIRE(verify_right_congruence(b3, rees));
  CHECK(action_kernel(quotient_action(b3, rees), b3)
        == largest_congruence_within(tm, rees));
}

TEST_CASE("sigma and tau class counts") {
  // |B_n / sigma| = 1 + sum_r p_r r!/|Gamma_r|, and the tau-classes meeting
  // the rank <= 4 ideal number 1 + 3 p_4 + p_0.
  auto gamma_order = [](int rank) {
    uint64_t g = 1;
    for (int i = 1; i <= rank / 2; ++i) {
      g *= 2 * static_cast<uint64_t>(i);
    }
    return g;
  };
  auto fact = [](int rank) {
    uint64_t f = 1;
    for (int i = 2; i <= rank; ++i) {
      f *= static_cast<uint64_t>(i);
    }
    return f;
  };
  for (int n : {3, 4, 5, 6}) {
    EnumeratedMonoid m = enumerate(Family::B, n);
    auto ctx = std::make_shared<const BrauerContext>(brauer_context(n));
    BrauerSigmaClassifier cls(ctx);
    uint64_t want = 1;
    for (int rank = n % 2; rank <= n; rank += 2) {
      want += brauer_p(n, rank).to_u64() * (fact(rank) / gamma_order(rank));
    }
    CHECK(brauer_sigma_relation(m, cls).num_classes() == want);
    if (n % 2 == 0) {
      EquivRelation tau = brauer_tau_relation(m, cls);
      std::set<size_t> meeting_ideal;
      for (size_t e = 0; e < m.size(); ++e) {
        if (m.at(e).rank() <= 4) {
          meeting_ideal.insert(tau.find(e));
        }
      }
      uint64_t omega2 = 1 + 3 * brauer_p(n, 4).to_u64()
                        + brauer_p(n, 0).to_u64();
      CHECK(meeting_ideal.size() == omega2);
    }
  }
}

TEST_CASE("sigma and tau are right congruences, chi is two-sided") {
  for (int n : {3, 4, 5, 6}) {
    EnumeratedMonoid m = enumerate(Family::B, n);
    auto ctx = std::make_shared<const BrauerContext>(brauer_context(n));
    BrauerSigmaClassifier cls(ctx);
    std::vector<Diagram> gens = standard_generators(Family::B, n);
    CHECK(verify_right_congruence(m, brauer_sigma_relation(m, cls), &gens));
    if (n % 2 == 0) {
      CHECK(verify_right_congruence(m, brauer_tau_relation(m, cls), &gens));
    }
  }
  EnumeratedMonoid b4 = enumerate(Family::B, 4);
  CHECK(verify_two_sided_congruence(b4, brauer_chi_relation(b4)));
}

TEST_CASE("states reached by bar images are distinct") {
  // P_3: mu(pi, bar(eps)) = eps for every state eps of the action.
  ActionTable t    = build_projection_action(Family::P, 3);
  ActionState seed = t.witnesses().front();
  std::set<std::string> seen;
  for (const ActionState& s : t.states()) {
    if (s.is_sink()) {
      continue;
    }
    ActionState reached = t.apply(seed, bar(s.value, Family::P));
    CHECK(reached == s);
    seen.insert(reached.label());
  }
  CHECK(seen.size() == t.state_count() - 1);

  // odd Brauer B_5: mu([pi], bar(x)) = [x] for every class representative x.
  ActionTable tb = build_brauer_action(5);
  ActionState sb = tb.witnesses().front();
  for (const ActionState& s : tb.states()) {
    if (s.is_sink()) {
      continue;
    }
    CHECK(tb.apply(sb, bar(s.value, Family::B)) == s);
  }
}

TEST_CASE("action table export") {
  ActionTable t = build_projection_action(Family::M, 2);
  nlohmann::json j = t.to_json();
  CHECK(j["family"] == "M");
  CHECK(j["n"] == 2);
  CHECK(j["states"].size() == 6);
  CHECK(j["sink_index"] == 0);
  CHECK(j["transitions"].size() == j["states"].size());
  CHECK(j["transitions"][0].size() == j["generators"].size());
  // the sink row is constant
  for (const auto& v : j["transitions"][0]) {
    CHECK(v == 0);
  }
  // deterministic
  CHECK(t.to_json().dump() == build_projection_action(Family::M, 2).to_json().dump());
}
