#include "twistalex/perm.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>

namespace twistalex {

Perm::Perm(std::vector<std::uint8_t> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (auto x : img_) {
    if (x >= img_.size() || seen[x]) throw InputError("not a permutation");
    seen[x] = true;
  }
}

Perm Perm::identity(int k) {
  std::vector<std::uint8_t> v(k);
  std::iota(v.begin(), v.end(), 0);
  Perm p;
  p.img_ = std::move(v);
  return p;
}

Perm Perm::from_cycles(int k, const std::vector<std::vector<int>>& cycles) {
  if (k < 1 || k > 255) throw InputError("permutation degree out of range");
  Perm p = identity(k);
  std::vector<bool> used(k, false);
  for (const auto& c : cycles) {
    for (int x : c) {
      if (x < 1 || x > k) throw InputError("cycle point " + std::to_string(x) + " out of range 1.." + std::to_string(k));
      if (used[x - 1]) throw InputError("cycle point " + std::to_string(x) + " repeated");
      used[x - 1] = true;
    }
    for (std::size_t i = 0; i < c.size(); ++i) p.img_[c[i] - 1] = static_cast<std::uint8_t>(c[(i + 1) % c.size()] - 1);
  }
  return p;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  Perm r = *this;
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<std::uint8_t>(i);
  return r;
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> c;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      c.push_back(static_cast<int>(j) + 1);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<int> Perm::cycle_type() const {
  std::vector<int> t;
  for (const auto& c : cycles()) t.push_back(static_cast<int>(c.size()));
  std::sort(t.begin(), t.end());
  return t;
}

std::string Perm::to_cycle_string() const {
  std::string s;
  for (const auto& c : cycles()) {
    if (c.size() < 2) continue;
    s += "(";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + std::to_string(c[i]);
    s += ")";
  }
  return s.empty() ? "()" : s;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("Perm: degree mismatch");
  Perm r = a;
  for (std::size_t i = 0; i < b.img_.size(); ++i) r.img_[i] = a.img_[b.img_[i]];
  return r;
}

Perm PermHom::evaluate(const Word& w) const {
  Perm r = Perm::identity(k);
  for (int x : w.letters()) r = r * (x > 0 ? images[x - 1] : images[-x - 1].inverse());
  return r;
}

bool PermHom::satisfies(const Presentation& p) const {
  if (static_cast<int>(images.size()) != p.num_generators()) return false;
  for (const auto& r : p.relators)
    if (!evaluate(r).is_identity()) return false;
  return true;
}

bool PermHom::transitive() const {
  std::vector<bool> seen(k, false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const auto& g : images) {
      int y = g(x);
      if (!seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Complete: return "complete";
    case SearchStatus::Stopped: return "stopped";
    case SearchStatus::BudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

namespace {

class Searcher {
 public:
  Searcher(const Presentation& p, int k, const SearchOptions& opts, const std::function<bool(const PermHom&)>& visit)
      : p_(p), k_(k), opts_(opts), visit_(visit), n_(p.num_generators()) {
    start_ = std::chrono::steady_clock::now();
    Perm cur = Perm::identity(k);
    std::vector<std::uint8_t> v = cur.images();
    std::map<std::vector<int>, int> ids;
    do {
      all_.emplace_back(v);
      auto [it, fresh] = ids.emplace(all_.back().cycle_type(), static_cast<int>(ids.size()));
      type_.push_back(it->second);
    } while (std::next_permutation(v.begin(), v.end()));
    if (opts.cycle_type) {
      auto it = ids.find(*opts.cycle_type);
      wanted_type_ = it == ids.end() ? -2 : it->second;
    }
    by_level_.resize(n_);
    for (const auto& r : p.relators) {
      if (r.empty()) continue;
      by_level_[r.max_generator() - 1].push_back(&r);
    }
    hom_.k = k;
    hom_.images.assign(n_, Perm::identity(k));
    inv_.assign(n_, Perm::identity(k));
  }

  SearchStatus run() {
    if (n_ == 0) {
      PermHom h{k_, {}};
      if (!opts_.skip_trivial && (!opts_.transitive_only || k_ == 1)) visit_(h);
      return SearchStatus::Complete;
    }
    std::vector<const Perm*> stab;
    std::vector<bool> class_seen(all_.size(), false);
    for (std::size_t gi = 0; gi < all_.size(); ++gi) {
      const Perm& g = all_[gi];
      if (stop_) break;
      if (wanted_type_ != -1 && type_[gi] != wanted_type_) continue;
      if (opts_.up_to_conjugacy) {
        // The first element of each cycle type in lexicographic order is the
        // class minimum; only it can start a conjugation-minimal tuple.
        if (class_seen[type_[gi]]) continue;
        class_seen[type_[gi]] = true;
        stab.clear();
        for (const auto& c : all_)
          if (c * g * c.inverse() == g) stab.push_back(&c);
      }
      first_type_ = type_[gi];
      assign(0, g);
      if (relators_hold(0)) descend(1, stab);
    }
    if (budget_hit_) return SearchStatus::BudgetExhausted;
    return stop_ ? SearchStatus::Stopped : SearchStatus::Complete;
  }

 private:
  void assign(int level, const Perm& g) {
    hom_.images[level] = g;
    inv_[level] = g.inverse();
  }

  bool relators_hold(int level) const {
    for (const Word* r : by_level_[level]) {
      const auto& l = r->letters();
      for (int x = 0; x < k_; ++x) {
        int y = x;
        for (auto it = l.rbegin(); it != l.rend(); ++it) y = *it > 0 ? hom_.images[*it - 1](y) : inv_[-*it - 1](y);
        if (y != x) return false;
      }
    }
    return true;
  }

  bool over_budget() {
    if (++nodes_ % 4096 != 0) return false;
    if (std::chrono::steady_clock::now() - start_ > opts_.budget) {
      budget_hit_ = true;
      stop_ = true;
    }
    return stop_;
  }

  void descend(int level, const std::vector<const Perm*>& stab) {
    if (stop_) return;
    if (level == n_) {
      emit();
      return;
    }
    std::vector<const Perm*> next;
    for (std::size_t gi = 0; gi < all_.size(); ++gi) {
      const Perm& g = all_[gi];
      if (stop_ || over_budget()) return;
      if (wanted_type_ != -1 && type_[gi] != wanted_type_) continue;
      if (opts_.meridional && type_[gi] != first_type_) continue;
      if (opts_.up_to_conjugacy) {
        next.clear();
        bool smaller = false;
        for (const Perm* c : stab) {
          Perm h = *c * g * c->inverse();
          if (h < g) {
            smaller = true;
            break;
          }
          if (h == g) next.push_back(c);
        }
        if (smaller) continue;
      }
      assign(level, g);
      if (!relators_hold(level)) continue;
      descend(level + 1, next);
    }
  }

  void emit() {
    if (opts_.transitive_only && !hom_.transitive()) return;
    if (opts_.skip_trivial &&
        std::all_of(hom_.images.begin(), hom_.images.end(), [](const Perm& g) { return g.is_identity(); }))
      return;
    if (!hom_.satisfies(p_)) throw std::logic_error("search_homs: emitted tuple violates a relator");
    if (!visit_(hom_)) stop_ = true;
  }

  const Presentation& p_;
  int k_;
  const SearchOptions& opts_;
  const std::function<bool(const PermHom&)>& visit_;
  int n_;
  std::vector<Perm> all_;
  std::vector<std::vector<const Word*>> by_level_;
  PermHom hom_;
  std::vector<Perm> inv_;
  std::vector<int> type_;
  int wanted_type_ = -1;
  int first_type_ = -1;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool stop_ = false;
  bool budget_hit_ = false;
};

}  // namespace

SearchStatus search_homs(const Presentation& p, int k, const SearchOptions& opts,
                         const std::function<bool(const PermHom&)>& visit) {
  if (k < 1 || k > 8) throw InputError("search_homs: k must be between 1 and 8");
  p.validate();
  Searcher s(p, k, opts, visit);
  return s.run();
}

HomList collect_homs(const Presentation& p, int k, const SearchOptions& opts, std::size_t limit) {
  HomList out;
  out.status = search_homs(p, k, opts, [&](const PermHom& h) {
    out.homs.push_back(h);
    return out.homs.size() < limit;
  });
  return out;
}

}  // namespace twistalex
