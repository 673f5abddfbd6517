#include <algorithm>
#include <deque>
#include <set>

#include "mfd/regular_group.hpp"

namespace mfd {

namespace {

constexpr std::int32_t kUndef = -1;

class CosetTable {
 public:
  CosetTable(GroupSpec const& spec, std::size_t limit)
      : ncols_(2 * spec.generators.size()), limit_(limit) {
    std::set<Word> seen;
    conjugates_.resize(ncols_);
    for (auto const& r0 : spec.relators) {
      Word r = cyclic_reduce(r0);
      if (r.empty()) continue;
      for (Word const& base : {r, invert(r)}) {
        for (std::size_t s = 0; s < base.size(); ++s) {
          Word rot(base.begin() + static_cast<std::ptrdiff_t>(s), base.end());
          rot.insert(rot.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(s));
          if (seen.insert(rot).second) conjugates_[rot.front()].push_back(rot);
        }
      }
      relators_.push_back(std::move(r));
    }
    new_coset();
  }

  void run(EnumerationStats* stats) {
    for (std::size_t c = 0; c < next_; ++c) {
      for (std::size_t x = 0; x < ncols_ && alive(c); ++x) {
        if (entry(c, x) != kUndef) continue;
        if (next_ >= limit_ && live_ < next_) c = compact(c);
        if (next_ >= limit_) {
          throw BudgetExceeded("coset enumeration exceeded " + std::to_string(limit_) +
                               " cosets");
        }
        auto d = new_coset();
        set_entry(c, x, d);
        process_deductions();
        if (stats) stats->max_live = std::max(stats->max_live, live_);
      }
    }
    if (stats) {
      stats->total_defined = total_defined_;
      stats->coincidences = coincidences_;
    }
  }

  RegularGroup standardize(std::vector<std::string> names) const {
    // Renumber live cosets breadth-first from coset 0 over columns in order.
    std::vector<std::int32_t> newid(next_, kUndef);
    std::vector<std::size_t> order;
    order.reserve(live_);
    std::vector<Word> words;
    newid[0] = 0;
    order.push_back(0);
    words.emplace_back();
    for (std::size_t i = 0; i < order.size(); ++i) {
      auto c = order[i];
      for (std::size_t x = 0; x < ncols_; ++x) {
        auto d = static_cast<std::size_t>(entry(c, x));
        if (newid[d] == kUndef) {
          newid[d] = static_cast<std::int32_t>(order.size());
          order.push_back(d);
          Word w = words[i];
          w.push_back(static_cast<Letter>(x));
          words.push_back(std::move(w));
        }
      }
    }
    RegularGroup g;
    g.order = order.size();
    g.generator_names = std::move(names);
    g.letter_perms.assign(ncols_, std::vector<Element>(g.order));
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t x = 0; x < ncols_; ++x) {
        g.letter_perms[x][i] = static_cast<Element>(newid[static_cast<std::size_t>(entry(order[i], x))]);
      }
    }
    g.def_words = std::move(words);
    return g;
  }

  // Every relator must fix every coset; a failure here means the enumeration
  // logic is broken, not that the input is bad.
  bool verify() const {
    for (std::size_t c = 0; c < next_; ++c) {
      if (!alive(c)) continue;
      for (auto const& r : relators_) {
        auto f = static_cast<std::int32_t>(c);
        for (Letter l : r) {
          f = entry(static_cast<std::size_t>(f), l);
          if (f == kUndef) return false;
        }
        if (static_cast<std::size_t>(f) != c) return false;
      }
    }
    return true;
  }

 private:
  std::size_t ncols_;
  std::size_t limit_;
  std::vector<Word> relators_;
  std::vector<std::vector<Word>> conjugates_;
  std::vector<std::int32_t> table_;
  std::vector<std::size_t> parent_;
  std::size_t next_ = 0;
  std::size_t live_ = 0;
  std::size_t total_defined_ = 0;
  std::size_t coincidences_ = 0;
  std::vector<std::pair<std::size_t, Letter>> deductions_;
  std::deque<std::size_t> queue_;

  std::int32_t entry(std::size_t c, std::size_t x) const { return table_[c * ncols_ + x]; }
  std::int32_t& entry_ref(std::size_t c, std::size_t x) { return table_[c * ncols_ + x]; }
  bool alive(std::size_t c) const { return parent_[c] == c; }

  std::size_t new_coset() {
    auto c = next_++;
    table_.resize(next_ * ncols_, kUndef);
    parent_.push_back(c);
    ++live_;
    ++total_defined_;
    return c;
  }

  void set_entry(std::size_t c, std::size_t x, std::size_t d) {
    entry_ref(c, x) = static_cast<std::int32_t>(d);
    entry_ref(d, x ^ 1U) = static_cast<std::int32_t>(c);
    deductions_.emplace_back(c, static_cast<Letter>(x));
  }

  std::size_t rep(std::size_t c) {
    auto r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      auto n = parent_[c];
      parent_[c] = r;
      c = n;
    }
    return r;
  }

  void merge(std::size_t a, std::size_t b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    --live_;
    queue_.push_back(b);
  }

  void coincidence(std::size_t a, std::size_t b) {
    ++coincidences_;
    merge(a, b);
    while (!queue_.empty()) {
      auto e = queue_.front();
      queue_.pop_front();
      for (std::size_t x = 0; x < ncols_; ++x) {
        auto d0 = entry(e, x);
        if (d0 == kUndef) continue;
        auto d = static_cast<std::size_t>(d0);
        if (entry(d, x ^ 1U) == static_cast<std::int32_t>(e)) entry_ref(d, x ^ 1U) = kUndef;
        auto mu = rep(e);
        auto nu = rep(d);
        if (entry(mu, x) != kUndef) {
          merge(nu, static_cast<std::size_t>(entry(mu, x)));
        } else if (entry(nu, x ^ 1U) != kUndef) {
          merge(mu, static_cast<std::size_t>(entry(nu, x ^ 1U)));
        } else {
          set_entry(mu, x, nu);
        }
      }
    }
  }

  void scan(std::size_t c, Word const& w) {
    std::size_t f = c, b = c;
    std::size_t i = 0, j = w.size();
    while (i < j && entry(f, w[i]) != kUndef) f = static_cast<std::size_t>(entry(f, w[i++]));
    if (i == j) {
      if (f != c) coincidence(f, c);
      return;
    }
    while (j > i && entry(b, inv_letter(w[j - 1])) != kUndef) {
      b = static_cast<std::size_t>(entry(b, inv_letter(w[j - 1])));
      --j;
    }
    if (j == i) {
      coincidence(f, b);
    } else if (j == i + 1) {
      set_entry(f, w[i], b);
    }
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      auto [c, x] = deductions_.back();
      deductions_.pop_back();
      if (!alive(c)) continue;
      for (auto const& w : conjugates_[x]) {
        scan(c, w);
        if (!alive(c)) break;
      }
    }
  }

  // Drops dead cosets and renumbers the survivors in place, returning the new
  // index of `cursor`. Only valid when no deductions or coincidences pend.
  std::size_t compact(std::size_t cursor) {
    std::vector<std::int32_t> newid(next_, kUndef);
    std::size_t n = 0;
    std::size_t new_cursor = 0;
    for (std::size_t c = 0; c < next_; ++c) {
      if (c == cursor) new_cursor = n;
      if (alive(c)) newid[c] = static_cast<std::int32_t>(n++);
    }
    std::vector<std::int32_t> table(n * ncols_, kUndef);
    for (std::size_t c = 0; c < next_; ++c) {
      if (!alive(c)) continue;
      for (std::size_t x = 0; x < ncols_; ++x) {
        auto d = entry(c, x);
        if (d != kUndef) {
          table[static_cast<std::size_t>(newid[c]) * ncols_ + x] = newid[static_cast<std::size_t>(d)];
        }
      }
    }
    table_ = std::move(table);
    next_ = n;
    parent_.resize(n);
    for (std::size_t c = 0; c < n; ++c) parent_[c] = c;
    return new_cursor;
  }
};

}  // namespace

RegularGroup enumerate_regular(GroupSpec const& spec, std::size_t limit,
                               EnumerationStats* stats) {
  CosetTable table(spec, std::max<std::size_t>(limit, 1));
  table.run(stats);
  if (!table.verify()) {
    throw std::logic_error("coset enumeration produced an inconsistent table");
  }
  return table.standardize(spec.generators);
}

}  // namespace mfd
