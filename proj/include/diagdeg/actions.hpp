// Right-congruence and action machinery: the projection actions for the
// partition-type families, the odd/even Brauer quotient and push-out
// actions, quotient actions of right congruences, and the verification
// predicates (action laws, faithfulness, monogenicity, kernels).
#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "diagdeg/diagram.hpp"
#include "diagdeg/equiv.hpp"
#include "diagdeg/families.hpp"
#include "json.hpp"

namespace diagdeg {

enum class StateKind : uint8_t {
  Sink,        // the absorbing state (the adjoined point, or the I-class)
  Proj,        // a projection, for the partition-type actions
  SigmaClass,  // canonical representative of a sigma-class (odd Brauer)
  Elem,        // an element of the right ideal R_gamma u R_zeta (even Brauer)
  LuClass      // canonical representative of a rank-4 L^U-class (even Brauer)
};

struct ActionState {
  StateKind kind = StateKind::Sink;
  Diagram value;

  static ActionState sink() {
    return {};
  }
  static ActionState make(StateKind k, Diagram d) {
    return ActionState{k, std::move(d)};
  }
  bool is_sink() const {
    return kind == StateKind::Sink;
  }
  std::string label() const;

  friend bool operator==(const ActionState& a, const ActionState& b) {
    return a.kind == b.kind && a.value == b.value;
  }
  friend bool operator!=(const ActionState& a, const ActionState& b) {
    return !(a == b);
  }
  friend bool operator<(const ActionState& a, const ActionState& b) {
    if (a.kind != b.kind) {
      return a.kind < b.kind;
    }
    return a.value < b.value;
  }
};

struct ActionStateHash {
  size_t operator()(const ActionState& s) const {
    return s.value.hash() * 31 + static_cast<size_t>(s.kind);
  }
};

class ActionTable {
 public:
  using Evaluator = std::function<ActionState(const ActionState&, const Diagram&)>;

  ActionTable(Family family, int n, std::string construction,
              std::vector<ActionState> states,
              std::optional<size_t> sink_index, std::vector<Diagram> generators,
              std::vector<ActionState> witnesses, Evaluator eval);

  Family family() const {
    return family_;
  }
  int degree() const {
    return n_;
  }
  const std::string& construction() const {
    return construction_;
  }
  const std::vector<ActionState>& states() const {
    return states_;
  }
  size_t state_count() const {
    return states_.size();
  }
  std::optional<size_t> sink_index() const {
    return sink_index_;
  }
  const std::vector<Diagram>& generators() const {
    return generators_;
  }
  const std::vector<ActionState>& witnesses() const {
    return witnesses_;
  }

  ActionState apply(const ActionState& x, const Diagram& a) const {
    return eval_(x, a);
  }
  size_t apply_index(size_t i, const Diagram& a) const {
    return index_of(eval_(states_[i], a));
  }
  size_t index_of(const ActionState& s) const;

  nlohmann::json to_json() const;

 private:
  Family family_;
  int n_;
  std::string construction_;
  std::vector<ActionState> states_;
  std::optional<size_t> sink_index_;
  std::vector<Diagram> generators_;
  std::vector<ActionState> witnesses_;
  Evaluator eval_;
  std::unordered_map<ActionState, size_t, ActionStateHash> index_;
};

// Classifies Brauer elements modulo sigma = nabla_I u L^U|_K: elements of I
// are sunk, elements of K map to the least member of their left U-orbit.
class BrauerSigmaClassifier {
 public:
  explicit BrauerSigmaClassifier(std::shared_ptr<const BrauerContext> ctx);

  const BrauerContext& context() const {
    return *ctx_;
  }
  bool in_sink(const Diagram& a) const;
  Diagram canonical_rep(const Diagram& a) const;
  std::vector<Diagram> orbit(const Diagram& a) const;

 private:
  std::shared_ptr<const BrauerContext> ctx_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<Diagram, Diagram, DiagramHash> rep_;
};

// All elements of D_r n K, i.e. rank r with kernel within kappa.
std::vector<Diagram> brauer_rank_K(const BrauerContext& ctx, int r);

// The faithful minimum-degree actions.
ActionTable build_projection_action(Family f, int n);
ActionTable build_brauer_action(int n);

// The P^- variant with the plain R-class condition (not faithful; its kernel
// is the minimal congruence lambda).
ActionTable build_mu_prime(Family f, int n);

struct LawCheck {
  bool ok = true;
  std::string witness;
};

LawCheck check_action_law(const ActionTable& t, const EnumeratedMonoid& m);
LawCheck check_action_law_sampled(const ActionTable& t,
                                  const std::vector<Diagram>& elements,
                                  size_t triples, uint64_t seed);

// Dense transition table over the monoid, rows indexed by state.
std::vector<std::vector<uint32_t>> materialize_transitions(
    const ActionTable& t, const EnumeratedMonoid& m);
LawCheck check_action_law_table(const std::vector<std::vector<uint32_t>>& table,
                                const EnumeratedMonoid& m);

EquivRelation action_kernel(const ActionTable& t, const EnumeratedMonoid& m);
bool check_faithful_full(const ActionTable& t, const EnumeratedMonoid& m);

struct MinpairsCheck {
  bool ok = true;
  std::optional<std::pair<Diagram, Diagram>> unseparated;
};

// True iff every pair is separated by some state; the designated witnesses
// are tried first, then the whole state list.
MinpairsCheck check_faithful_minpairs(
    const ActionTable& t,
    const std::vector<std::pair<Diagram, Diagram>>& pairs);

bool check_monogenic(const ActionTable& t, const ActionState& seed);

// The action of the monoid on the classes of a right congruence.  The
// returned table references m; m must outlive it.
ActionTable quotient_action(const EnumeratedMonoid& m, const EquivRelation& sigma);

// sigma_x = {(a, b) : mu(x, a) = mu(x, b)}, always a right congruence.
EquivRelation sigma_from_state(const ActionTable& t, const ActionState& x,
                               const EnumeratedMonoid& m);

// The minimal congruences of the partition-type families as relations.
EquivRelation lambda_relation(const EnumeratedMonoid& m);
EquivRelation rho_relation(const EnumeratedMonoid& m);
EquivRelation eta_relation(const EnumeratedMonoid& m);

// The Brauer relations sigma, tau (even n) and chi (even n).
EquivRelation brauer_sigma_relation(const EnumeratedMonoid& m,
                                    const BrauerSigmaClassifier& cls);
EquivRelation brauer_tau_relation(const EnumeratedMonoid& m,
                                  const BrauerSigmaClassifier& cls);
EquivRelation brauer_chi_relation(const EnumeratedMonoid& m);

// Right (or two-sided) compatibility, checked over the given generators when
// provided, otherwise over the whole monoid.
bool verify_right_congruence(const EnumeratedMonoid& m, const EquivRelation& sigma,
                             const std::vector<Diagram>* generators = nullptr);
bool verify_two_sided_congruence(const EnumeratedMonoid& m,
                                 const EquivRelation& sigma,
                                 const std::vector<Diagram>* generators = nullptr);

}  // namespace diagdeg
