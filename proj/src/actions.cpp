#include "diagdeg/actions.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <set>
#include <unordered_set>

namespace diagdeg {

std::string ActionState::label() const {
  switch (kind) {
    case StateKind::Sink: return "sink";
    case StateKind::Proj: return "proj:" + value.to_string();
    case StateKind::SigmaClass: return "sig:" + value.to_string();
    case StateKind::Elem: return "elem:" + value.to_string();
    case StateKind::LuClass: return "lu:" + value.to_string();
  }
  return "?";
}

ActionTable::ActionTable(Family family, int n, std::string construction,
                         std::vector<ActionState> states,
                         std::optional<size_t> sink_index,
                         std::vector<Diagram> generators,
                         std::vector<ActionState> witnesses, Evaluator eval)
    : family_(family),
      n_(n),
      construction_(std::move(construction)),
      states_(std::move(states)),
      sink_index_(sink_index),
      generators_(std::move(generators)),
      witnesses_(std::move(witnesses)),
      eval_(std::move(eval)) {
  index_.reserve(states_.size());
  for (size_t i = 0; i < states_.size(); ++i) {
    if (!index_.emplace(states_[i], i).second) {
      throw std::logic_error("ActionTable: duplicate state");
    }
  }
}

size_t ActionTable::index_of(const ActionState& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) {
    throw std::logic_error("ActionTable: transition left the state set: "
                           + s.label());
  }
  return it->second;
}

nlohmann::json ActionTable::to_json() const {
  nlohmann::json j;
  j["family"]       = std::string(family_code(family_));
  j["n"]            = n_;
  j["construction"] = construction_;
  nlohmann::json states = nlohmann::json::array();
  for (const auto& s : states_) {
    states.push_back(s.label());
  }
  j["states"] = std::move(states);
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : generators_) {
    gens.push_back(g.to_string());
  }
  j["generators"] = std::move(gens);
  nlohmann::json transitions = nlohmann::json::array();
  for (size_t i = 0; i < states_.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& g : generators_) {
      row.push_back(apply_index(i, g));
    }
    transitions.push_back(std::move(row));
  }
  j["transitions"] = std::move(transitions);
  if (sink_index_) {
    j["sink_index"] = *sink_index_;
  }
  return j;
}

////////////////////////////////////////////////////////////////////////
// Brauer sigma classifier
////////////////////////////////////////////////////////////////////////

BrauerSigmaClassifier::BrauerSigmaClassifier(
    std::shared_ptr<const BrauerContext> ctx)
    : ctx_(std::move(ctx)) {}

bool BrauerSigmaClassifier::in_sink(const Diagram& a) const {
  return !a.ker().refines(ctx_->kappa);
}

std::vector<Diagram> BrauerSigmaClassifier::orbit(const Diagram& a) const {
  std::unordered_set<Diagram, DiagramHash> seen = {a};
  std::vector<Diagram> frontier = {a};
  while (!frontier.empty()) {
    std::vector<Diagram> next;
    for (const Diagram& x : frontier) {
      for (const Diagram& g : ctx_->stabilizer_gens) {
        Diagram y = g * x;
        if (seen.insert(y).second) {
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

Diagram BrauerSigmaClassifier::canonical_rep(const Diagram& a) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = rep_.find(a);
    if (it != rep_.end()) {
      return it->second;
    }
  }
  std::vector<Diagram> orb = orbit(a);
  Diagram least = *std::min_element(orb.begin(), orb.end());
  {
    std::lock_guard<std::mutex> lock(mutex_);
    for (const Diagram& x : orb) {
      rep_.emplace(x, least);
    }
  }
  return least;
}

////////////////////////////////////////////////////////////////////////
// Brauer element enumeration
////////////////////////////////////////////////////////////////////////

namespace {

void gen_perfect_matchings_of(const std::vector<int>& points,
                              const std::function<void(
                                  const std::vector<std::array<int, 2>>&)>& emit) {
  std::vector<std::array<int, 2>> pairs;
  std::vector<bool> used(points.size(), false);
  std::function<void(size_t)> rec = [&](size_t p) {
    while (p < points.size() && used[p]) {
      ++p;
    }
    if (p == points.size()) {
      emit(pairs);
      return;
    }
    used[p] = true;
    for (size_t q = p + 1; q < points.size(); ++q) {
      if (used[q]) {
        continue;
      }
      used[q] = true;
      pairs.push_back({points[p], points[q]});
      rec(p + 1);
      pairs.pop_back();
      used[q] = false;
    }
    used[p] = false;
  };
  rec(0);
}

// All Brauer elements with the given transversal sources (dom, sorted) and
// upper non-transversal blocks.
std::vector<Diagram> brauer_with_upper(
    int n, const std::vector<int>& dom,
    const std::vector<std::vector<int>>& upper_blocks) {
  std::vector<Diagram> out;
  const int r = static_cast<int>(dom.size());
  std::vector<int> choice;
  std::function<void(int)> choose_codom = [&](int from) {
    if (static_cast<int>(choice.size()) == r) {
      std::vector<int> images = choice;
      std::sort(images.begin(), images.end());
      do {
        std::vector<int> rest;
        for (int v = 1; v <= n; ++v) {
          if (std::find(images.begin(), images.end(), v) == images.end()) {
            rest.push_back(v);
          }
        }
        gen_perfect_matchings_of(
            rest, [&](const std::vector<std::array<int, 2>>& pairs) {
              std::vector<std::vector<int>> blocks = upper_blocks;
              for (int i = 0; i < r; ++i) {
                blocks.push_back({dom[i], -images[i]});
              }
              for (const auto& pr : pairs) {
                blocks.push_back({-pr[0], -pr[1]});
              }
              out.emplace_back(n, std::move(blocks));
            });
      } while (std::next_permutation(images.begin(), images.end()));
      return;
    }
    for (int v = from; v <= n; ++v) {
      choice.push_back(v);
      choose_codom(v + 1);
      choice.pop_back();
    }
  };
  choose_codom(1);
  return out;
}

void for_each_subset(int k, int size,
                     const std::function<void(const std::vector<int>&)>& emit) {
  std::vector<int> chosen;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(chosen.size()) == size) {
      emit(chosen);
      return;
    }
    for (int i = from; i < k; ++i) {
      chosen.push_back(i);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(0);
}

}  // namespace

std::vector<Diagram> brauer_rank_K(const BrauerContext& ctx, int r) {
  const bool odd = ctx.n % 2 != 0;
  if (r < 0 || r > ctx.n || (ctx.n - r) % 2 != 0) {
    throw std::invalid_argument("brauer_rank_K: bad rank");
  }
  const int splits = odd ? (r - 1) / 2 : r / 2;
  std::vector<Diagram> out;
  for_each_subset(ctx.k, splits, [&](const std::vector<int>& split) {
    std::vector<int> dom;
    if (odd) {
      dom.push_back(1);
    }
    std::vector<std::vector<int>> upper;
    std::vector<bool> is_split(ctx.k, false);
    for (int i : split) {
      is_split[i] = true;
      dom.push_back(ctx.z_blocks[i][0]);
      dom.push_back(ctx.z_blocks[i][1]);
    }
    std::sort(dom.begin(), dom.end());
    for (int i = 0; i < ctx.k; ++i) {
      if (!is_split[i]) {
        upper.push_back({ctx.z_blocks[i][0], ctx.z_blocks[i][1]});
      }
    }
    std::vector<Diagram> part = brauer_with_upper(ctx.n, dom, upper);
    out.insert(out.end(), part.begin(), part.end());
  });
  std::sort(out.begin(), out.end());
  return out;
}

////////////////////////////////////////////////////////////////////////
// Action builders
////////////////////////////////////////////////////////////////////////

namespace {

// mu(eps, a) on projections with the kernel-preservation condition.
ActionState project_step(const Diagram& eps, const Diagram& a) {
  Diagram ea = eps * a;
  if (!(ea.ker() == eps.ker())) {
    return ActionState::sink();
  }
  return ActionState::make(StateKind::Proj, a.star() * ea);
}

ActionTable build_ptype_action(Family f, int n) {
  if (n < 2) {
    throw std::invalid_argument("build_projection_action: need n >= 2");
  }
  std::vector<ActionState> states = {ActionState::sink()};
  for (int r = 0; r <= 2; ++r) {
    for (Diagram& d : projections(f, n, r)) {
      states.push_back(ActionState::make(StateKind::Proj, std::move(d)));
    }
  }
  std::sort(states.begin() + 1, states.end());
  auto eval = [](const ActionState& x, const Diagram& a) {
    if (x.is_sink()) {
      return ActionState::sink();
    }
    return project_step(x.value, a);
  };
  ActionState seed = ActionState::make(StateKind::Proj, special(f, n, "pi"));
  return ActionTable(f, n, "projection-action", std::move(states), 0,
                     standard_generators(f, n), {seed}, eval);
}

ActionTable build_tl_action(int n) {
  if (n < 3) {
    throw std::invalid_argument("build_projection_action: TL needs n >= 3");
  }
  std::vector<ActionState> states = {ActionState::sink()};
  ActionTable::Evaluator eval;
  ActionState seed;
  if (n % 2 == 0) {
    const int m = n / 2;
    for (int r = 0; r <= 2; ++r) {
      for (const Diagram& d : projections(Family::PP, m, r)) {
        states.push_back(
            ActionState::make(StateKind::Proj, tilde_pp_to_tl(d)));
      }
    }
    eval = [](const ActionState& x, const Diagram& a) {
      if (x.is_sink()) {
        return ActionState::sink();
      }
      ActionState y = project_step(untilde_tl_to_pp(x.value),
                                   untilde_tl_to_pp(a));
      if (y.is_sink()) {
        return y;
      }
      return ActionState::make(StateKind::Proj, tilde_pp_to_tl(y.value));
    };
    seed = ActionState::make(StateKind::Proj,
                             tilde_pp_to_tl(special(Family::PP, m, "pi")));
  } else {
    const int m = (n + 1) / 2;
    for (int r = 1; r <= 2; ++r) {
      for (const Diagram& d : model_projections(m, r)) {
        states.push_back(ActionState::make(
            StateKind::Proj, tl_strip_strand(tilde_pp_to_tl(d))));
      }
    }
    eval = [](const ActionState& x, const Diagram& a) {
      if (x.is_sink()) {
        return ActionState::sink();
      }
      ActionState y
          = project_step(untilde_tl_to_pp(tl_prepend_strand(x.value)),
                         untilde_tl_to_pp(tl_prepend_strand(a)));
      if (y.is_sink()) {
        return y;
      }
      return ActionState::make(StateKind::Proj,
                               tl_strip_strand(tilde_pp_to_tl(y.value)));
    };
    seed = ActionState::make(
        StateKind::Proj,
        tl_strip_strand(tilde_pp_to_tl(special_model(m, "pi"))));
  }
  std::sort(states.begin() + 1, states.end());
  return ActionTable(Family::TL, n, "projection-action", std::move(states), 0,
                     standard_generators(Family::TL, n), {seed},
                     std::move(eval));
}

}  // namespace

ActionTable build_projection_action(Family f, int n) {
  switch (f) {
    case Family::P:
    case Family::PB:
    case Family::PP:
    case Family::M:
      return build_ptype_action(f, n);
    case Family::TL:
      return build_tl_action(n);
    case Family::B:
      return build_brauer_action(n);
    case Family::S:
      throw std::invalid_argument("build_projection_action: S_n not supported");
  }
  throw std::invalid_argument("build_projection_action: unknown family");
}

ActionTable build_mu_prime(Family f, int n) {
  if (f != Family::P && f != Family::PB && f != Family::PP && f != Family::M) {
    throw std::invalid_argument("build_mu_prime: partition-type families only");
  }
  if (n < 2) {
    throw std::invalid_argument("build_mu_prime: need n >= 2");
  }
  std::vector<ActionState> states = {ActionState::sink()};
  for (int r = 0; r <= n; ++r) {
    for (Diagram& d : projections(f, n, r)) {
      states.push_back(ActionState::make(StateKind::Proj, std::move(d)));
    }
  }
  std::sort(states.begin() + 1, states.end());
  auto eval = [](const ActionState& x, const Diagram& a) {
    if (x.is_sink()) {
      return ActionState::sink();
    }
    const Diagram& p = x.value;
    Diagram pa       = p * a;
    if (!green_related(p, pa, GreenRel::R)) {
      return ActionState::sink();
    }
    return ActionState::make(StateKind::Proj, a.star() * pa);
  };
  return ActionTable(f, n, "mu-prime", std::move(states), 0,
                     standard_generators(f, n), {}, eval);
}

namespace {

ActionTable build_brauer_action_odd(int n) {
  auto ctx = std::make_shared<const BrauerContext>(brauer_context(n));
  auto cls = std::make_shared<BrauerSigmaClassifier>(ctx);

  std::set<Diagram> reps;
  for (int r : {1, 3}) {
    for (const Diagram& d : brauer_rank_K(*ctx, r)) {
      reps.insert(cls->canonical_rep(d));
    }
  }
  std::vector<ActionState> states = {ActionState::sink()};
  for (const Diagram& d : reps) {
    states.push_back(ActionState::make(StateKind::SigmaClass, d));
  }
  auto eval = [cls](const ActionState& x, const Diagram& a) {
    if (x.is_sink()) {
      return ActionState::sink();
    }
    Diagram y = x.value * a;
    if (cls->in_sink(y)) {
      return ActionState::sink();
    }
    return ActionState::make(StateKind::SigmaClass, cls->canonical_rep(y));
  };
  ActionState seed = ActionState::make(
      StateKind::SigmaClass, cls->canonical_rep(special(Family::B, n, "pi")));
  return ActionTable(Family::B, n, "sigma-quotient-odd", std::move(states), 0,
                     standard_generators(Family::B, n), {seed}, eval);
}

ActionTable build_brauer_action_even(int n) {
  auto ctx = std::make_shared<const BrauerContext>(brauer_context(n));
  auto cls = std::make_shared<BrauerSigmaClassifier>(ctx);

  const Diagram gamma = special(Family::B, n, "gamma");
  const SetPartition ker_gamma = gamma.ker();

  // Omega_1 = R_gamma u R_zeta; the rank-0 part doubles as the chi-class
  // labels glued along the push-out.
  std::vector<Diagram> omega1 = brauer_with_upper(
      n, {1, 2},
      [&] {
        std::vector<std::vector<int>> upper;
        for (int i = 1; i < ctx->k; ++i) {
          upper.push_back({ctx->z_blocks[i][0], ctx->z_blocks[i][1]});
        }
        return upper;
      }());
  {
    std::vector<Diagram> rzeta = brauer_rank_K(*ctx, 0);
    omega1.insert(omega1.end(), rzeta.begin(), rzeta.end());
  }
  std::sort(omega1.begin(), omega1.end());

  std::set<Diagram> lu_reps;
  for (const Diagram& d : brauer_rank_K(*ctx, 4)) {
    lu_reps.insert(cls->canonical_rep(d));
  }

  std::vector<ActionState> states = {ActionState::sink()};
  for (const Diagram& d : omega1) {
    states.push_back(ActionState::make(StateKind::Elem, d));
  }
  for (const Diagram& d : lu_reps) {
    states.push_back(ActionState::make(StateKind::LuClass, d));
  }

  auto eval = [cls](const ActionState& x, const Diagram& a) {
    switch (x.kind) {
      case StateKind::Sink:
        return ActionState::sink();
      case StateKind::Elem:
        // Omega_1 is a right ideal: the product stays in R_gamma u R_zeta.
        return ActionState::make(StateKind::Elem, x.value * a);
      case StateKind::LuClass: {
        Diagram y = x.value * a;
        if (cls->in_sink(y)) {
          return ActionState::sink();
        }
        if (y.rank() == 4) {
          return ActionState::make(StateKind::LuClass, cls->canonical_rep(y));
        }
        // Rank <= 2 lands in the right ideal J; its tau-class is the
        // chi-class labelled by the paired-up element of R_zeta.
        return ActionState::make(StateKind::Elem, hat_pairup(y));
      }
      default:
        throw std::logic_error("brauer even action: unexpected state kind");
    }
  };
  ActionState w_zeta = ActionState::make(StateKind::Elem, ctx->zeta);
  ActionState w_gamma = ActionState::make(StateKind::Elem, gamma);
  ActionState w_pi   = ActionState::make(
      StateKind::LuClass, cls->canonical_rep(special(Family::B, n, "pi")));
  return ActionTable(Family::B, n, "pushout-even", std::move(states), 0,
                     standard_generators(Family::B, n),
                     {w_zeta, w_gamma, w_pi}, eval);
}

}  // namespace

ActionTable build_brauer_action(int n) {
  if (n < 3) {
    throw std::invalid_argument("build_brauer_action: need n >= 3");
  }
  return n % 2 != 0 ? build_brauer_action_odd(n) : build_brauer_action_even(n);
}

////////////////////////////////////////////////////////////////////////
// Checks
////////////////////////////////////////////////////////////////////////

LawCheck check_action_law(const ActionTable& t, const EnumeratedMonoid& m) {
  const Diagram id = Diagram::identity(m.degree());
  for (size_t x = 0; x < t.state_count(); ++x) {
    if (t.apply_index(x, id) != x) {
      return {false, "identity moves state " + t.states()[x].label()};
    }
  }
  for (size_t x = 0; x < t.state_count(); ++x) {
    const ActionState& sx = t.states()[x];
    for (const Diagram& a : m.elements()) {
      ActionState xa = t.apply(sx, a);
      for (const Diagram& b : m.elements()) {
        if (t.apply(xa, b) != t.apply(sx, a * b)) {
          return {false, "law fails at state " + sx.label() + ", a = "
                             + a.to_string() + ", b = " + b.to_string()};
        }
      }
    }
  }
  return {};
}

LawCheck check_action_law_sampled(const ActionTable& t,
                                  const std::vector<Diagram>& elements,
                                  size_t triples, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<size_t> elem(0, elements.size() - 1);
  std::uniform_int_distribution<size_t> state(0, t.state_count() - 1);
  for (size_t i = 0; i < triples; ++i) {
    const ActionState& x = t.states()[state(rng)];
    const Diagram& a     = elements[elem(rng)];
    const Diagram& b     = elements[elem(rng)];
    if (t.apply(t.apply(x, a), b) != t.apply(x, a * b)) {
      return {false, "law fails at state " + x.label() + ", a = "
                         + a.to_string() + ", b = " + b.to_string()};
    }
  }
  return {};
}

std::vector<std::vector<uint32_t>> materialize_transitions(
    const ActionTable& t, const EnumeratedMonoid& m) {
  std::vector<std::vector<uint32_t>> table(
      t.state_count(), std::vector<uint32_t>(m.size()));
  for (size_t x = 0; x < t.state_count(); ++x) {
    for (size_t e = 0; e < m.size(); ++e) {
      table[x][e] = static_cast<uint32_t>(t.apply_index(x, m.at(e)));
    }
  }
  return table;
}

LawCheck check_action_law_table(const std::vector<std::vector<uint32_t>>& table,
                                const EnumeratedMonoid& m) {
  for (size_t x = 0; x < table.size(); ++x) {
    if (table[x][m.identity_index()] != x) {
      return {false, "identity moves state " + std::to_string(x)};
    }
    for (size_t i = 0; i < m.size(); ++i) {
      for (size_t j = 0; j < m.size(); ++j) {
        if (table[table[x][i]][j] != table[x][m.product(i, j)]) {
          return {false, "law fails at state " + std::to_string(x) + ", a = "
                             + m.at(i).to_string() + ", b = "
                             + m.at(j).to_string()};
        }
      }
    }
  }
  return {};
}

EquivRelation action_kernel(const ActionTable& t, const EnumeratedMonoid& m) {
  struct RowHash {
    size_t operator()(const std::vector<uint32_t>& row) const {
      size_t h = 1469598103934665603ull;
      for (uint32_t v : row) {
        h ^= v;
        h *= 1099511628211ull;
      }
      return h;
    }
  };
  EquivRelation kernel(m.size());
  std::unordered_map<std::vector<uint32_t>, size_t, RowHash> seen;
  seen.reserve(m.size());
  std::vector<uint32_t> row(t.state_count());
  for (size_t e = 0; e < m.size(); ++e) {
    for (size_t x = 0; x < t.state_count(); ++x) {
      row[x] = static_cast<uint32_t>(t.apply_index(x, m.at(e)));
    }
    auto [it, inserted] = seen.emplace(row, e);
    if (!inserted) {
      kernel.merge(it->second, e);
    }
  }
  return kernel;
}

bool check_faithful_full(const ActionTable& t, const EnumeratedMonoid& m) {
  return action_kernel(t, m).is_trivial();
}

MinpairsCheck check_faithful_minpairs(
    const ActionTable& t,
    const std::vector<std::pair<Diagram, Diagram>>& pairs) {
  for (const auto& [a, b] : pairs) {
    bool separated = false;
    for (const ActionState& w : t.witnesses()) {
      if (t.apply(w, a) != t.apply(w, b)) {
        separated = true;
        break;
      }
    }
    for (size_t i = 0; !separated && i < t.state_count(); ++i) {
      separated = t.apply(t.states()[i], a) != t.apply(t.states()[i], b);
    }
    if (!separated) {
      return {false, std::make_pair(a, b)};
    }
  }
  return {};
}

bool check_monogenic(const ActionTable& t, const ActionState& seed) {
  std::unordered_set<size_t> reached = {t.index_of(seed)};
  std::queue<size_t> frontier;
  frontier.push(t.index_of(seed));
  while (!frontier.empty()) {
    size_t x = frontier.front();
    frontier.pop();
    for (const Diagram& g : t.generators()) {
      size_t y = t.apply_index(x, g);
      if (reached.insert(y).second) {
        frontier.push(y);
      }
    }
  }
  return reached.size() == t.state_count();
}

////////////////////////////////////////////////////////////////////////
// Quotient actions and congruence relations
////////////////////////////////////////////////////////////////////////

ActionTable quotient_action(const EnumeratedMonoid& m, const EquivRelation& sigma) {
  if (sigma.size() != m.size()) {
    throw std::invalid_argument("quotient_action: relation size mismatch");
  }
  auto class_rep = std::make_shared<std::vector<uint32_t>>(m.size());
  {
    std::vector<int64_t> first(m.size(), -1);
    for (size_t i = 0; i < m.size(); ++i) {
      size_t root = sigma.find(i);
      if (first[root] < 0) {
        first[root] = static_cast<int64_t>(i);
      }
      (*class_rep)[i] = static_cast<uint32_t>(first[root]);
    }
  }
  std::vector<ActionState> states;
  for (size_t i = 0; i < m.size(); ++i) {
    if ((*class_rep)[i] == i) {
      states.push_back(ActionState::make(StateKind::SigmaClass, m.at(i)));
    }
  }
  std::sort(states.begin(), states.end());
  const EnumeratedMonoid* mp = &m;
  auto eval = [mp, class_rep](const ActionState& x, const Diagram& a) {
    size_t idx = mp->index_of(x.value * a);
    return ActionState::make(StateKind::SigmaClass,
                             mp->at((*class_rep)[idx]));
  };
  return ActionTable(m.family(), m.degree(), "right-congruence-quotient",
                     std::move(states), std::nullopt,
                     standard_generators(m.family(), m.degree()), {}, eval);
}

EquivRelation sigma_from_state(const ActionTable& t, const ActionState& x,
                               const EnumeratedMonoid& m) {
  EquivRelation sigma(m.size());
  std::unordered_map<ActionState, size_t, ActionStateHash> seen;
  for (size_t e = 0; e < m.size(); ++e) {
    ActionState result  = t.apply(x, m.at(e));
    auto [it, inserted] = seen.emplace(result, e);
    if (!inserted) {
      sigma.merge(it->second, e);
    }
  }
  return sigma;
}

namespace {

template <typename KeyFn>
EquivRelation relation_from_keys(const EnumeratedMonoid& m, KeyFn&& key) {
  // key returns an optional Diagram; elements with equal keys are merged,
  // elements without a key stay alone.
  EquivRelation rel(m.size());
  std::unordered_map<Diagram, size_t, DiagramHash> seen;
  for (size_t e = 0; e < m.size(); ++e) {
    std::optional<Diagram> k = key(m.at(e));
    if (!k) {
      continue;
    }
    auto [it, inserted] = seen.emplace(std::move(*k), e);
    if (!inserted) {
      rel.merge(it->second, e);
    }
  }
  return rel;
}

}  // namespace

EquivRelation lambda_relation(const EnumeratedMonoid& m) {
  return relation_from_keys(m, [](const Diagram& a) -> std::optional<Diagram> {
    if (a.rank() != 0) {
      return std::nullopt;
    }
    return a.star() * a;  // the L-class invariant
  });
}

EquivRelation rho_relation(const EnumeratedMonoid& m) {
  return relation_from_keys(m, [](const Diagram& a) -> std::optional<Diagram> {
    if (a.rank() != 0) {
      return std::nullopt;
    }
    return a * a.star();
  });
}

EquivRelation eta_relation(const EnumeratedMonoid& m) {
  return relation_from_keys(m, [](const Diagram& a) -> std::optional<Diagram> {
    if (a.rank() > 1) {
      return std::nullopt;
    }
    return hat_flatten(a);
  });
}

EquivRelation brauer_sigma_relation(const EnumeratedMonoid& m,
                                    const BrauerSigmaClassifier& cls) {
  EquivRelation rel(m.size());
  int64_t sink_first = -1;
  std::unordered_map<Diagram, size_t, DiagramHash> seen;
  for (size_t e = 0; e < m.size(); ++e) {
    if (cls.in_sink(m.at(e))) {
      if (sink_first < 0) {
        sink_first = static_cast<int64_t>(e);
      } else {
        rel.merge(static_cast<size_t>(sink_first), e);
      }
      continue;
    }
    auto [it, inserted] = seen.emplace(cls.canonical_rep(m.at(e)), e);
    if (!inserted) {
      rel.merge(it->second, e);
    }
  }
  return rel;
}

EquivRelation brauer_tau_relation(const EnumeratedMonoid& m,
                                  const BrauerSigmaClassifier& cls) {
  EquivRelation rel(m.size());
  int64_t sink_first = -1;
  std::unordered_map<Diagram, size_t, DiagramHash> chi_seen;
  std::unordered_map<Diagram, size_t, DiagramHash> lu_seen;
  for (size_t e = 0; e < m.size(); ++e) {
    const Diagram& a = m.at(e);
    if (cls.in_sink(a)) {
      if (sink_first < 0) {
        sink_first = static_cast<int64_t>(e);
      } else {
        rel.merge(static_cast<size_t>(sink_first), e);
      }
    } else if (a.rank() <= 2) {
      auto [it, inserted] = chi_seen.emplace(hat_pairup(a), e);
      if (!inserted) {
        rel.merge(it->second, e);
      }
    } else {
      auto [it, inserted] = lu_seen.emplace(cls.canonical_rep(a), e);
      if (!inserted) {
        rel.merge(it->second, e);
      }
    }
  }
  return rel;
}

EquivRelation brauer_chi_relation(const EnumeratedMonoid& m) {
  return relation_from_keys(m, [](const Diagram& a) -> std::optional<Diagram> {
    if (a.rank() > 2) {
      return std::nullopt;
    }
    return hat_pairup(a);
  });
}

namespace {

bool verify_compatibility(const EnumeratedMonoid& m, const EquivRelation& sigma,
                          const std::vector<Diagram>* generators, bool left,
                          bool right) {
  if (sigma.size() != m.size()) {
    throw std::invalid_argument("verify congruence: relation size mismatch");
  }
  std::vector<uint32_t> rep(m.size());
  {
    std::vector<int64_t> first(m.size(), -1);
    for (size_t i = 0; i < m.size(); ++i) {
      size_t root = sigma.find(i);
      if (first[root] < 0) {
        first[root] = static_cast<int64_t>(i);
      }
      rep[i] = static_cast<uint32_t>(first[root]);
    }
  }
  auto translates_ok = [&](const Diagram& s) {
    for (size_t i = 0; i < m.size(); ++i) {
      if (rep[i] == i) {
        continue;
      }
      const Diagram& a = m.at(i);
      const Diagram& b = m.at(rep[i]);
      if (right && !sigma.same(m.index_of(a * s), m.index_of(b * s))) {
        return false;
      }
      if (left && !sigma.same(m.index_of(s * a), m.index_of(s * b))) {
        return false;
      }
    }
    return true;
  };
  if (generators != nullptr) {
    for (const Diagram& g : *generators) {
      if (!translates_ok(g)) {
        return false;
      }
    }
    return true;
  }
  for (const Diagram& s : m.elements()) {
    if (!translates_ok(s)) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool verify_right_congruence(const EnumeratedMonoid& m, const EquivRelation& sigma,
                             const std::vector<Diagram>* generators) {
  return verify_compatibility(m, sigma, generators, false, true);
}

bool verify_two_sided_congruence(const EnumeratedMonoid& m,
                                 const EquivRelation& sigma,
                                 const std::vector<Diagram>* generators) {
  return verify_compatibility(m, sigma, generators, true, true);
}

}  // namespace diagdeg
