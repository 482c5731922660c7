#include "rainbow/finder.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace rainbow {

namespace {

int order_bound(int k) {
  if (k <= 0) return 0;
  return k <= 3 ? 4 * k - 3 : 4 * k - 4;
}

[[noreturn]] void internal_breach(const std::string& what) {
  throw std::logic_error("internal invariant breach: " + what);
}

// One induction level: extends a rainbow matching of size level-1 to size
// level, or produces a checkable hypothesis violation.
class Augmenter {
 public:
  Augmenter(const EdgeColouredGraph& g, int level, int top_k, const Matching& prev,
            AugmentTrace& trace, FinderStats& stats)
      : g_(g),
        n_(g.order()),
        k_(level),
        top_k_(top_k),
        trace_(trace),
        stats_(stats),
        colmat_(static_cast<std::size_t>(n_) * n_, 0),
        x_(k_ + 1, -1),
        y_(k_ + 1, -1),
        z_(k_ + 1, -1),
        w_(k_ + 1, -1),
        chainz_(k_ + 1, -1),
        mpair_(n_, 0),
        mppair_(n_, 0),
        chain_at_(n_, 0) {
    for (const auto& e : g_.edges()) {
      colmat_[idx(e.u, e.v)] = e.colour;
      colmat_[idx(e.v, e.u)] = e.colour;
    }
    if (static_cast<int>(prev.size()) != k_ - 1)
      internal_breach("augmenter seeded with wrong matching size");
    for (int i = 1; i <= k_ - 1; ++i) {
      const Edge& e = prev[i - 1];
      sigma_.transpose(sigma_.forward(e.colour), i);
      x_[i] = e.u;
      y_[i] = e.v;
    }
    rebuild_membership();
  }

  Outcome run() {
    for (;;) {
      if (auto r = direct_extension(); r.kind != Kind::None) return deliver(r);
      grow_mprime();
      if (s_ == k_ - 1) return deliver(finalize_full_s());
      clear_chain();
      auto r = build_chain();
      if (r.kind == Kind::Restart) { note_restart(); continue; }
      if (r.kind != Kind::None) return deliver(r);
      r = exploit_low_colour_degree();
      if (r.kind == Kind::Restart) { note_restart(); continue; }
      return deliver(r);
    }
  }

 private:
  enum class Kind { None, Found, Violated, Restart };
  struct StepResult {
    Kind kind = Kind::None;
    Matching m;
    HypothesisViolation viol;
  };
  struct Dispatch {
    enum class Type { None, Absorb, Cross, Base } type = Type::None;
    int u = -1;
    int w = -1;
    int level = 0;  // cross-build pair index floor
    int j = 0;      // base-swap pair index
  };

  std::size_t idx(int u, int v) const { return static_cast<std::size_t>(u) * n_ + v; }
  int oc(int u, int v) const { return colmat_[idx(u, v)]; }
  int lab(int u, int v) const { return sigma_.forward(oc(u, v)); }
  bool is_label(int l) const { return l >= 1 && l <= k_ - 1; }
  bool in_w(int v) const { return mpair_[v] == 0 && mppair_[v] == 0; }

  Edge edge(int u, int v) const {
    int c = oc(u, v);
    if (c == 0) internal_breach("materialized a non-edge");
    return {std::min(u, v), std::max(u, v), c};
  }

  Matching current_m() const {
    Matching m;
    for (int i = 1; i <= k_ - 1; ++i) m.push_back(edge(x_[i], y_[i]));
    return m;
  }
  Matching current_mp() const {
    Matching m;
    for (int i = 1; i <= s_; ++i) m.push_back(edge(z_[i], w_[i]));
    return m;
  }

  void rebuild_membership() {
    std::fill(mpair_.begin(), mpair_.end(), 0);
    std::fill(mppair_.begin(), mppair_.end(), 0);
    for (int i = 1; i <= k_ - 1; ++i) {
      mpair_[x_[i]] = i;
      mpair_[y_[i]] = i;
    }
    for (int i = 1; i <= s_; ++i) {
      mppair_[z_[i]] = i;
      mppair_[w_[i]] = i;
    }
  }

  void clear_chain() {
    std::fill(chainz_.begin(), chainz_.end(), -1);
    std::fill(chain_at_.begin(), chain_at_.end(), 0);
  }

  void record(StepTag tag, Matching step_edges) {
    trace_.steps.push_back(
        {tag, k_, s_, std::move(step_edges), current_m(), current_mp()});
  }

  void note_restart() {
    if (s_ <= s_at_last_restart_)
      internal_breach("restart without lexicographic progress");
    s_at_last_restart_ = s_;
    ++stats_.restarts_total;
    ++stats_.restarts_per_level[k_];
  }

  Outcome deliver(const StepResult& r) {
    if (r.kind == Kind::Found) return r.m;
    if (r.kind == Kind::Violated) return r.viol;
    internal_breach("augmentation loop ended without a result");
  }

  StepResult found(Matching m, StepTag tag) {
    std::sort(m.begin(), m.end());
    auto check = check_rainbow_matching(g_, m);
    if (!check.ok || static_cast<int>(m.size()) != k_)
      internal_breach("constructed matching failed verification: " + check.reason);
    record(tag, m);
    return {Kind::Found, std::move(m), {}};
  }

  StepResult violated_vertex(int v) {
    if (g_.colour_degree(v) >= top_k_)
      internal_breach("claimed colour-degree violation at a saturated vertex");
    return {Kind::Violated, {}, HypothesisViolation{v, top_k_, "colour-degree"}};
  }

  StepResult stuck_no_vertex() {
    if (n_ < order_bound(top_k_))
      return {Kind::Violated, {}, HypothesisViolation{std::nullopt, top_k_, "order"}};
    internal_breach("ran out of spare vertices despite the order bound");
  }

  // Swaps the roles (and colour labels) of M pairs a and b.
  void swap_m_pairs(int a, int b) {
    if (a == b) return;
    std::swap(x_[a], x_[b]);
    std::swap(y_[a], y_[b]);
    mpair_[x_[a]] = a;
    mpair_[y_[a]] = a;
    mpair_[x_[b]] = b;
    mpair_[y_[b]] = b;
    sigma_.transpose(a, b);
  }

  // Absorbs a W-edge carrying M colour l > s into M' as pair s+1.
  void absorb(const Edge& e, int l) {
    if (l <= s_ || l > k_ - 1) internal_breach("absorbing an edge with a bad label");
    swap_m_pairs(l, s_ + 1);
    ++s_;
    z_[s_] = std::min(e.u, e.v);
    w_[s_] = std::max(e.u, e.v);
    mppair_[e.u] = s_;
    mppair_[e.v] = s_;
    record(StepTag::TwinAbsorb, {e});
  }

  // Any edge avoiding V(M) whose colour is off M's palette extends directly.
  StepResult direct_extension() {
    for (const auto& e : g_.edges()) {
      if (mpair_[e.u] != 0 || mpair_[e.v] != 0) continue;
      if (is_label(sigma_.forward(e.colour))) continue;
      Matching m = current_m();
      m.push_back(e);
      return found(std::move(m), StepTag::DirectExtension);
    }
    return {};
  }

  // Absorbs W-edges with M colours outside [s] until none remain.
  void grow_mprime() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& e : g_.edges()) {
        if (!in_w(e.u) || !in_w(e.v)) continue;
        int l = sigma_.forward(e.colour);
        if (!is_label(l)) internal_breach("fresh W-edge survived direct extension");
        if (l > s_) {
          absorb(e, l);
          changed = true;
          break;
        }
      }
    }
  }

  Matching tail_matching(int i, int excluded_label) const {
    Matching m;
    for (int t = i; t <= k_ - 1; ++t) {
      if (excluded_label != t) {
        m.push_back(edge(x_[t], y_[t]));
      } else {
        if (chainz_[t] < 0) internal_breach("tail matching needs a chain vertex that is absent");
        m.push_back(edge(y_[t], chainz_[t]));
        excluded_label = lab(y_[t], chainz_[t]);
      }
    }
    return m;
  }

  StepResult fire(const Dispatch& d) {
    switch (d.type) {
      case Dispatch::Type::Absorb: {
        Edge e = edge(d.u, d.w);
        int l = sigma_.forward(e.colour);
        if (!is_label(l)) {
          Matching m = current_m();
          m.push_back(e);
          return found(std::move(m), StepTag::DirectExtension);
        }
        absorb(e, l);
        return {Kind::Restart, {}, {}};
      }
      case Dispatch::Type::Cross:
        return cross_build(d.u, d.w, d.level);
      case Dispatch::Type::Base:
        return base_swap(d.j, d.w);
      case Dispatch::Type::None:
        break;
    }
    internal_breach("empty dispatch fired");
  }

  // {uw} + a twin-side matching on S\{u} + a tail matching on the pairs
  // from i up + the untouched middle pairs: an explicit size-k matching.
  StepResult cross_build(int u, int wv, int i) {
    Matching m;
    m.push_back(edge(u, wv));
    for (int t = 1; t <= s_; ++t) {
      if (u == x_[t] || u == y_[t])
        m.push_back(edge(z_[t], w_[t]));
      else
        m.push_back(edge(x_[t], y_[t]));
    }
    for (const auto& e : tail_matching(i, lab(u, wv))) m.push_back(e);
    for (int j = s_ + 1; j <= i - 1; ++j) m.push_back(edge(x_[j], y_[j]));
    return found(std::move(m), StepTag::CrossBuild);
  }

  // Rebases M to {pairs < j} + tail + {y_j z_j}, freeing x_j so the
  // offending edge from x_j either extends the rebased M or grows M'.
  StepResult base_swap(int j, int wv) {
    if (chainz_[j] < 0) internal_breach("base swap without a chain vertex");
    int old_xj = x_[j];
    Edge offend = edge(old_xj, wv);
    Edge chain_edge = edge(y_[j], chainz_[j]);
    Matching mpp = tail_matching(j + 1, lab(y_[j], chainz_[j]));

    Matching tail = mpp;
    tail.push_back(chain_edge);
    std::sort(tail.begin(), tail.end());
    for (int t = j; t <= k_ - 1; ++t) {
      const Edge& e = tail[t - j];
      sigma_.transpose(sigma_.forward(e.colour), t);
      x_[t] = e.u;
      y_[t] = e.v;
    }
    rebuild_membership();
    clear_chain();
    {
      auto check = check_rainbow_matching(g_, current_m());
      if (!check.ok) internal_breach("rebased matching is not rainbow: " + check.reason);
      for (int t = 1; t <= s_; ++t)
        if (mpair_[z_[t]] != 0 || mpair_[w_[t]] != 0)
          internal_breach("rebased matching collides with M'");
    }
    Matching step = tail;
    step.push_back(offend);
    record(StepTag::BaseSwap, std::move(step));

    int l = sigma_.forward(offend.colour);
    if (!is_label(l)) {
      Matching m = current_m();
      m.push_back(offend);
      return found(std::move(m), StepTag::DirectExtension);
    }
    absorb(offend, l);
    return {Kind::Restart, {}, {}};
  }

  StepResult build_chain() {
    for (int i = k_ - 1; i >= s_ + 1; --i) {
      auto r = attach_chain(i);
      if (r.kind != Kind::None) return r;
    }
    return {};
  }

  // Finds z_i in W_{i+1} joined to a relabelled y_i by an edge avoiding [i].
  // Any edge breaking the expected pattern is dispatched instead.
  StepResult attach_chain(int i) {
    std::vector<int> candidates;
    for (int v = 0; v < n_; ++v)
      if (in_w(v) && chain_at_[v] == 0) candidates.push_back(v);
    if (candidates.empty()) return stuck_no_vertex();

    Dispatch pending;
    for (int zv : candidates) {
      for (auto [u, c] : g_.neighbours(zv)) {
        int l = sigma_.forward(c);
        if (l >= 1 && l <= i) continue;
        int mp = mpair_[u];
        if (mp >= s_ + 1 && mp <= i) {
          swap_m_pairs(mp, i);
          if (u == x_[i]) std::swap(x_[i], y_[i]);
          mpair_[x_[i]] = i;
          mpair_[y_[i]] = i;
          chainz_[i] = zv;
          chain_at_[zv] = i;
          record(StepTag::ChainAttach, {edge(y_[i], zv)});
          return {};
        }
        if (pending.type != Dispatch::Type::None) continue;
        if (in_w(u)) {
          pending = {Dispatch::Type::Absorb, u, zv, 0, 0};
        } else if (mppair_[u] != 0 || (mp >= 1 && mp <= s_)) {
          pending = {Dispatch::Type::Cross, u, zv, i + 1, 0};
        } else if (mp >= i + 1 && u == x_[mp]) {
          pending = {Dispatch::Type::Base, -1, zv, 0, mp};
        }
        // u = y_j for j > i is the one tolerated pattern
      }
    }
    if (pending.type != Dispatch::Type::None) return fire(pending);
    for (int zv : candidates)
      if (g_.colour_degree(zv) < k_) return violated_vertex(zv);
    internal_breach("no chain extension although every candidate has full colour degree");
  }

  // Chain-saturated leftover vertices have colour degree <= k-1 unless
  // some edge escapes the pattern; escaping edges all make progress.
  StepResult exploit_low_colour_degree() {
    std::vector<int> candidates;
    for (int v = 0; v < n_; ++v)
      if (in_w(v) && chain_at_[v] == 0) candidates.push_back(v);
    if (candidates.empty()) return stuck_no_vertex();

    for (int wv : candidates) {
      for (auto [u, c] : g_.neighbours(wv)) {
        int l = sigma_.forward(c);
        if (l >= 1 && l <= s_) continue;
        int mp = mpair_[u];
        if (in_w(u)) return fire({Dispatch::Type::Absorb, u, wv, 0, 0});
        if (mppair_[u] != 0 || (mp >= 1 && mp <= s_))
          return fire({Dispatch::Type::Cross, u, wv, s_ + 1, 0});
        if (mp >= s_ + 1 && u == x_[mp]) return fire({Dispatch::Type::Base, -1, wv, 0, mp});
        // u = y_j: tolerated
      }
    }
    for (int wv : candidates)
      if (g_.colour_degree(wv) < k_) return violated_vertex(wv);
    internal_breach("pattern vertex with full colour degree in the exploit phase");
  }

  // s = k-1: either a spare vertex exists (n >= 4k-3) or the graph is exactly
  // the k-1 quadruples and the end-game applies.
  StepResult finalize_full_s() {
    clear_chain();
    std::vector<int> spare;
    for (int v = 0; v < n_; ++v)
      if (in_w(v)) spare.push_back(v);

    if (!spare.empty()) {
      for (int wv : spare) {
        for (auto [u, c] : g_.neighbours(wv)) {
          int l = sigma_.forward(c);
          if (is_label(l)) continue;
          if (mpair_[u] == 0) {
            Matching m = current_m();
            m.push_back(edge(u, wv));
            return found(std::move(m), StepTag::SpareVertexPatch);
          }
          int i = mpair_[u];
          Matching m;
          for (int j = 1; j <= k_ - 1; ++j)
            if (j != i) m.push_back(edge(x_[j], y_[j]));
          m.push_back(edge(z_[i], w_[i]));
          m.push_back(edge(u, wv));
          return found(std::move(m), StepTag::SpareVertexPatch);
        }
      }
      for (int wv : spare)
        if (g_.colour_degree(wv) < k_) return violated_vertex(wv);
      internal_breach("spare vertex with full colour degree but no fresh edge");
    }
    return quadruple_endgame();
  }

  int quad_of(int v) const {
    if (mpair_[v] != 0) return mpair_[v];
    if (mppair_[v] != 0) return mppair_[v];
    internal_breach("vertex outside all quadruples in the end-game");
  }

  bool fresh_edge(int a, int b) const {
    int c = oc(a, b);
    return c != 0 && !is_label(sigma_.forward(c));
  }

  StepResult cross_patch(int u, int i, int v, int q) {
    Matching m;
    m.push_back(edge(u, v));
    m.push_back(u == x_[i] || u == y_[i] ? edge(z_[i], w_[i]) : edge(x_[i], y_[i]));
    m.push_back(v == x_[q] || v == y_[q] ? edge(z_[q], w_[q]) : edge(x_[q], y_[q]));
    for (int j = 1; j <= k_ - 1; ++j)
      if (j != i && j != q) m.push_back(edge(x_[j], y_[j]));
    return found(std::move(m), StepTag::QuadrupleSaturation);
  }

  // n = 4k-4: every quadruple {x_i,y_i,z_i,w_i} must hold its own fresh
  // edges x_i z_i and y_i w_i after role swaps, else a patch succeeds.
  StepResult quadruple_endgame() {
    Matching recorded;
    for (int i = 1; i <= k_ - 1; ++i) {
      int quad[4] = {x_[i], y_[i], z_[i], w_[i]};
      for (int u : quad) {
        bool has_fresh = false;
        for (auto [v, c] : g_.neighbours(u)) {
          if (is_label(sigma_.forward(c))) continue;
          int q = quad_of(v);
          if (q != i) return cross_patch(u, i, v, q);
          has_fresh = true;
        }
        if (!has_fresh) return violated_vertex(u);
      }
      // all fresh edges stay inside the quadruple; fix roles
      bool assigned = false;
      int e1[2] = {x_[i], y_[i]};
      int e2[2] = {z_[i], w_[i]};
      for (int pair_swap = 0; pair_swap < 2 && !assigned; ++pair_swap) {
        int (&ab)[2] = pair_swap ? e2 : e1;
        int (&cd)[2] = pair_swap ? e1 : e2;
        for (int sa = 0; sa < 2 && !assigned; ++sa) {
          for (int sc = 0; sc < 2 && !assigned; ++sc) {
            int a = ab[sa], b = ab[1 - sa];
            int cc = cd[sc], dd = cd[1 - sc];
            if (fresh_edge(a, cc) && fresh_edge(b, dd)) {
              x_[i] = a;
              y_[i] = b;
              z_[i] = cc;
              w_[i] = dd;
              assigned = true;
            }
          }
        }
      }
      if (!assigned) internal_breach("no quadruple role assignment covers all vertices");
      rebuild_membership();
      recorded.push_back(edge(x_[i], z_[i]));
      recorded.push_back(edge(y_[i], w_[i]));
    }
    record(StepTag::QuadrupleSaturation, std::move(recorded));

    // x_1 must reach outside {y_1,z_1,w_1} avoiding colour 1 once k >= 4
    int x1 = x_[1];
    int best_v = -1;
    for (auto [v, c] : g_.neighbours(x1)) {
      if (v == y_[1] || v == z_[1] || v == w_[1]) continue;
      if (sigma_.forward(c) == 1) continue;
      best_v = v;
      break;
    }
    if (best_v < 0) {
      if (g_.colour_degree(x1) < top_k_) return violated_vertex(x1);
      return stuck_no_vertex();
    }
    int l = lab(x1, best_v);
    if (!is_label(l)) return cross_patch(x1, 1, best_v, quad_of(best_v));

    int m_idx = l;  // in [2, k-1]
    Matching res;
    res.push_back(edge(x1, best_v));
    res.push_back(edge(z_[1], w_[1]));
    if (best_v == x_[m_idx] || best_v == z_[m_idx])
      res.push_back(edge(y_[m_idx], w_[m_idx]));
    else
      res.push_back(edge(x_[m_idx], z_[m_idx]));
    for (int j = 2; j <= k_ - 1; ++j) {
      if (j == m_idx) continue;
      if (best_v == x_[j] || best_v == y_[j])
        res.push_back(edge(z_[j], w_[j]));
      else
        res.push_back(edge(x_[j], y_[j]));
    }
    return found(std::move(res), StepTag::FinalPatch);
  }

  const EdgeColouredGraph& g_;
  int n_;
  int k_;
  int top_k_;
  AugmentTrace& trace_;
  FinderStats& stats_;
  std::vector<int> colmat_;
  ColourRelabelling sigma_;
  std::vector<int> x_, y_, z_, w_;
  std::vector<int> chainz_;
  std::vector<int> mpair_, mppair_, chain_at_;
  int s_ = 0;
  int s_at_last_restart_ = -1;
};

}  // namespace

std::string to_string(StepTag tag) {
  switch (tag) {
    case StepTag::DirectExtension: return "direct-extension";
    case StepTag::TwinAbsorb: return "twin-absorb";
    case StepTag::ChainAttach: return "chain-attach";
    case StepTag::BaseSwap: return "base-swap";
    case StepTag::CrossBuild: return "cross-build";
    case StepTag::SpareVertexPatch: return "spare-vertex-patch";
    case StepTag::QuadrupleSaturation: return "quadruple-saturation";
    case StepTag::FinalPatch: return "final-patch";
  }
  return "unknown";
}

FinderResult find_rainbow_matching(const EdgeColouredGraph& g, int k) {
  if (!g.valid())
    throw std::invalid_argument("find_rainbow_matching: " + *g.validate());
  FinderResult res;
  res.stats.restarts_per_level.assign(std::max(k + 1, 1), 0);
  if (k <= 0) {
    res.outcome = Matching{};
    return res;
  }
  Matching m;
  for (int level = 1; level <= k; ++level) {
    if (level == 1) {
      if (g.edges().empty()) {
        if (g.order() == 0)
          res.outcome = HypothesisViolation{std::nullopt, k, "order"};
        else
          res.outcome = HypothesisViolation{0, k, "colour-degree"};
        return res;
      }
      m = {g.edges().front()};
      res.trace.steps.push_back({StepTag::DirectExtension, 1, 0, m, {}, {}});
      continue;
    }
    Augmenter aug(g, level, k, m, res.trace, res.stats);
    Outcome out = aug.run();
    if (auto* found = std::get_if<Matching>(&out)) {
      m = *found;
    } else {
      res.outcome = std::move(out);
      return res;
    }
  }
  res.outcome = std::move(m);
  return res;
}

nlohmann::json trace_to_json(const AugmentTrace& trace) {
  auto edges_json = [](const Matching& m) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : m) arr.push_back({e.u, e.v, e.colour});
    return arr;
  };
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& st : trace.steps) {
    steps.push_back({{"tag", to_string(st.tag)},
                     {"level", st.level},
                     {"s", st.s},
                     {"edges", edges_json(st.edges)},
                     {"m", edges_json(st.m)},
                     {"mprime", edges_json(st.mprime)}});
  }
  return {{"steps", std::move(steps)}};
}

bool replay_trace(const EdgeColouredGraph& g, int k, const FinderResult& result,
                  std::string* error) {
  auto fail = [&](const std::string& msg) {
    if (error) *error = msg;
    return false;
  };
  int last_level = 0;
  for (std::size_t si = 0; si < result.trace.steps.size(); ++si) {
    const TraceStep& st = result.trace.steps[si];
    if (st.level < last_level) return fail("levels decrease in the trace");
    last_level = st.level;
    for (const auto& e : st.edges) {
      auto c = g.edge_colour(e.u, e.v);
      if (!c || *c != e.colour) return fail("step edge not present in the graph");
    }
    auto cm = check_rainbow_matching(g, st.m);
    if (!cm.ok) return fail("recorded M is not a rainbow matching: " + cm.reason);
    if (static_cast<int>(st.m.size()) != st.level - 1)
      return fail("recorded M has the wrong size");
    auto cp = check_rainbow_matching(g, st.mprime);
    if (!cp.ok) return fail("recorded M' is not a rainbow matching: " + cp.reason);
    if (static_cast<int>(st.mprime.size()) != st.s)
      return fail("recorded M' does not match s");
    std::vector<char> used(g.order(), 0);
    for (const auto& e : st.m) used[e.u] = used[e.v] = 1;
    for (const auto& e : st.mprime)
      if (used[e.u] || used[e.v]) return fail("M and M' share a vertex");
    std::vector<int> mcols;
    for (const auto& e : st.m) mcols.push_back(e.colour);
    for (const auto& e : st.mprime)
      if (std::find(mcols.begin(), mcols.end(), e.colour) == mcols.end())
        return fail("M' uses a colour outside M's palette");
  }
  if (result.found()) {
    const Matching& m = result.matching();
    auto cm = check_rainbow_matching(g, m);
    if (!cm.ok || static_cast<int>(m.size()) != k)
      return fail("outcome matching is not a size-k rainbow matching");
    if (k > 0) {
      if (result.trace.steps.empty()) return fail("found outcome with an empty trace");
      Matching last = result.trace.steps.back().edges;
      std::sort(last.begin(), last.end());
      Matching sorted = m;
      std::sort(sorted.begin(), sorted.end());
      if (last != sorted) return fail("final step does not materialize the outcome");
    }
  } else {
    const auto& v = result.violation();
    if (v.reason == "colour-degree") {
      if (!v.vertex || g.colour_degree(*v.vertex) >= k)
        return fail("colour-degree witness does not check out");
    } else if (v.reason == "order") {
      int bound = k <= 3 ? 4 * k - 3 : 4 * k - 4;
      if (g.order() >= bound) return fail("order witness does not check out");
    } else {
      return fail("unknown violation reason");
    }
  }
  if (error) error->clear();
  return true;
}

}  // namespace rainbow
