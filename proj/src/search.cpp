#include "etm/search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace etm {

namespace {

using Id = GroupTable::Id;

// Conjugation action of H on G: inner, or by permutations normalizing G.
class ConjAction {
 public:
  ConjAction(const GroupTable& g, const std::vector<Permutation>& normalizer) : g_(g) {
    if (normalizer.empty()) return;
    if (!g.is_perm_group()) throw std::invalid_argument("normalizer needs a permutation group");
    PermGroupSpec spec{g.degree(), normalizer};
    for (Id s : g.generators()) spec.generators.push_back(g.perm(s));
    ambient_ = GroupTable::from_permutations(spec);
    for (Id s : g.generators())
      if (!ambient_->find(g.perm(s))) throw std::logic_error("ambient closure lost a generator");
    for (const auto& p : normalizer)
      for (Id s : g.generators())
        if (!g.find(conjugate(g.perm(s), p))) throw std::invalid_argument("normalizer element does not normalize G");
  }

  size_t size() const { return ambient_ ? ambient_->size() : g_.size(); }

  Id apply(Id x, Id h) const {
    if (!ambient_) return g_.conj(x, h);
    auto r = g_.find(conjugate(g_.perm(x), ambient_->perm(h)));
    return *r;
  }

  // Conjugation by each generator of H, as tables over G.
  std::vector<std::vector<Id>> generator_tables() const {
    std::vector<std::vector<Id>> out;
    const GroupTable& h = ambient_ ? *ambient_ : g_;
    for (Id s : h.generators()) {
      std::vector<Id> t(g_.size());
      for (Id x = 0; x < g_.size(); ++x) t[x] = apply(x, s);
      out.push_back(std::move(t));
    }
    return out;
  }

 private:
  const GroupTable& g_;
  std::optional<GroupTable> ambient_;
};

struct Task {
  size_t rep;  // index into the depth-0 representatives
  Id value;    // value at depth 1
};

struct TaskResult {
  std::vector<std::vector<Id>> witnesses;
  SearchCounts counts;
  bool done = false;
};

class Searcher {
 public:
  Searcher(EtClass rep, const GroupPtr& g, const SearchOptions& opts)
      : rep_(rep), g_(*g), gp_(g), opts_(opts), action_(*g, opts.normalizer) {
    const auto& inv = involutory_generators(rep);
    k_ = inv.size();
    if (rep == EtClass::C1) {
      order_ = {1, 0, 2};
    } else {
      for (size_t i = 0; i < k_; ++i)
        if (!inv[i]) order_.push_back(i);
      for (size_t i = 0; i < k_; ++i)
        if (inv[i]) order_.push_back(i);
    }
    if (!opts.parity.empty()) {
      if (opts.parity.size() != k_) throw std::invalid_argument("parity needs one sign per generator");
      if (!g_.is_perm_group()) throw std::invalid_argument("parity constraint needs a permutation group");
    }
    std::vector<int> signs;
    if (!opts.parity.empty()) {
      signs.resize(g_.size());
      for (Id x = 0; x < g_.size(); ++x) signs[x] = g_.sign(x);
    }
    std::vector<char> is_inv(g_.size(), 0);
    for (Id x = 0; x < g_.size(); ++x) is_inv[x] = g_.mul(x, x) == 0;
    cands_.resize(k_);
    for (size_t i = 0; i < k_; ++i)
      for (Id x = 0; x < g_.size(); ++x) {
        if (inv[i] && !is_inv[x]) continue;
        if (!opts.parity.empty() && signs[x] != opts.parity[i]) continue;
        cands_[i].push_back(x);
      }
    check_transitive_ = false;
    if (g_.is_perm_group()) {
      PermGroupSpec spec{g_.degree(), {}};
      for (Id s : g_.generators()) spec.generators.push_back(g_.perm(s));
      check_transitive_ = is_transitive(spec);
    }
    limit_ = opts.limit;
    if (!opts.exhaustive && limit_ == 0) limit_ = 1;
  }

  SearchResult run() {
    SearchResult res;
    res.cls = rep_;
    const std::vector<Id>& c0 = cands_[order_[0]];
    if (opts_.up_to_conjugacy) {
      reps_ = orbit_representatives(c0);
      for (Id r : reps_) stabilizers_.push_back(stabilizer(r));
    } else {
      reps_ = c0;
    }
    std::vector<Task> tasks;
    for (size_t ri = 0; ri < reps_.size(); ++ri)
      for (Id v : cands_[order_[1]]) {
        if (!allowed(1, v, partial_for(reps_[ri]))) continue;
        tasks.push_back({ri, v});
      }
    std::vector<TaskResult> results(tasks.size());
    std::atomic<size_t> next{0};
    std::atomic<bool> stop{false};
    std::mutex mu;
    auto worker = [&] {
      while (!stop.load()) {
        size_t t = next.fetch_add(1);
        if (t >= tasks.size()) break;
        TaskResult r = run_task(tasks[t], stop);
        std::lock_guard<std::mutex> lock(mu);
        results[t] = std::move(r);
        results[t].done = true;
        if (limit_) {
          uint64_t found = 0;
          for (size_t u = 0; u < results.size() && results[u].done; ++u) {
            found += results[u].witnesses.size();
            if (found >= limit_) {
              stop.store(true);
              break;
            }
          }
        }
      }
    };
    unsigned nt = std::max(1u, opts_.threads);
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < nt; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    for (auto& r : results) {
      if (!r.done) break;
      res.counts.tuples += r.counts.tuples;
      res.counts.generating += r.counts.generating;
      res.counts.forbidden_free += r.counts.forbidden_free;
      for (auto& w : r.witnesses) res.witnesses.push_back(std::move(w));
      if (limit_ && res.witnesses.size() >= limit_) {
        res.limit_hit = true;
        res.witnesses.resize(limit_);
        break;
      }
    }
    std::sort(res.witnesses.begin(), res.witnesses.end());
    res.proved_empty = res.witnesses.empty();
    return res;
  }

 private:
  std::vector<Id> partial_for(Id r) const {
    std::vector<Id> p(k_, UINT32_MAX);
    p[order_[0]] = r;
    return p;
  }

  std::vector<Id> orbit_representatives(const std::vector<Id>& cands) const {
    std::vector<char> in(g_.size(), 0), seen(g_.size(), 0);
    for (Id x : cands) in[x] = 1;
    auto tables = action_.generator_tables();
    std::vector<Id> reps;
    for (Id x : cands) {
      if (seen[x]) continue;
      reps.push_back(x);
      std::vector<Id> queue{x};
      seen[x] = 1;
      for (size_t q = 0; q < queue.size(); ++q)
        for (const auto& t : tables) {
          Id y = t[queue[q]];
          if (!in[y]) throw std::logic_error("candidate set not closed under conjugation");
          if (!seen[y]) {
            seen[y] = 1;
            queue.push_back(y);
          }
        }
    }
    return reps;
  }

  std::vector<Id> stabilizer(Id x) const {
    std::vector<Id> out;
    for (Id h = 0; h < action_.size(); ++h)
      if (action_.apply(x, h) == x) out.push_back(h);
    return out;
  }

  bool allowed(size_t depth, Id v, const std::vector<Id>& partial) const {
    size_t pos = order_[depth];
    if (rep_ == EtClass::C1 && pos == 2) {
      Id p = g_.mul(partial[0], v);
      return g_.mul(p, p) == 0;
    }
    return true;
  }

  TaskResult run_task(const Task& task, const std::atomic<bool>& stop) const {
    TaskResult out;
    std::vector<Id> partial = partial_for(reps_[task.rep]);
    std::vector<Id> active;
    if (opts_.up_to_conjugacy) {
      for (Id h : stabilizers_[task.rep]) {
        Id w = action_.apply(task.value, h);
        if (w < task.value) return out;
        if (w == task.value) active.push_back(h);
      }
    }
    partial[order_[1]] = task.value;
    recurse(2, partial, active, out, stop);
    return out;
  }

  void recurse(size_t depth, std::vector<Id>& partial, const std::vector<Id>& active, TaskResult& out,
               const std::atomic<bool>& stop) const {
    if (stop.load(std::memory_order_relaxed)) return;
    if (limit_ && out.witnesses.size() >= limit_) return;
    if (depth == k_) {
      leaf(partial, out);
      return;
    }
    size_t pos = order_[depth];
    std::vector<Id> next;
    for (Id v : cands_[pos]) {
      if (!allowed(depth, v, partial)) continue;
      next.clear();
      bool canonical = true;
      if (opts_.up_to_conjugacy) {
        for (Id h : active) {
          Id w = action_.apply(v, h);
          if (w < v) {
            canonical = false;
            break;
          }
          if (w == v) next.push_back(h);
        }
      }
      if (!canonical) continue;
      partial[pos] = v;
      recurse(depth + 1, partial, next, out, stop);
      partial[pos] = UINT32_MAX;
      if (limit_ && out.witnesses.size() >= limit_) return;
    }
  }

  void leaf(const std::vector<Id>& images, TaskResult& out) const {
    ++out.counts.tuples;
    if (check_transitive_ && !transitive(images)) return;
    if (!generates(g_, images)) return;
    ++out.counts.generating;
    EpimorphismSpec spec{rep_, gp_, images};
    if (has_forbidden_automorphism(spec)) return;
    ++out.counts.forbidden_free;
    out.witnesses.push_back(images);
  }

  bool transitive(const std::vector<Id>& images) const {
    const size_t n = g_.degree();
    std::vector<uint32_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](uint32_t a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    size_t parts = n;
    for (Id x : images) {
      Permutation p = g_.perm(x);
      for (size_t i = 0; i < n; ++i) {
        uint32_t a = find(uint32_t(i)), b = find(p.images()[i]);
        if (a != b) {
          parent[a] = b;
          --parts;
        }
      }
    }
    return parts == 1;
  }

  EtClass rep_;
  const GroupTable& g_;
  GroupPtr gp_;
  SearchOptions opts_;
  ConjAction action_;
  size_t k_ = 0;
  std::vector<size_t> order_;
  std::vector<std::vector<Id>> cands_;
  std::vector<Id> reps_;
  std::vector<std::vector<Id>> stabilizers_;
  bool check_transitive_ = false;
  uint64_t limit_ = 0;
};

}  // namespace

SearchResult search_epimorphisms(EtClass rep, const GroupPtr& g, const SearchOptions& opts) {
  if (!is_build_representative(rep)) throw std::invalid_argument("search needs a build representative class");
  if (!g) throw std::invalid_argument("no group");
  Searcher s(rep, g, opts);
  return s.run();
}

}  // namespace etm
