#include "profin/findex.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace profin {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument(msg);
}

std::vector<int> free_reduce(std::vector<int> word) {
  std::vector<int> out;
  for (int s : word) {
    if (!out.empty() && out.back() == -s)
      out.pop_back();
    else
      out.push_back(s);
  }
  return out;
}

}  // namespace

Presentation::Presentation(int rank_, std::vector<std::vector<int>> relators_)
    : rank(rank_), relators(std::move(relators_)) {
  if (rank < 1) fail("Presentation: need at least one generator");
  for (auto& w : relators) {
    for (int s : w)
      if (s == 0 || std::abs(s) > rank)
        fail("Presentation: relator letter out of range");
    w = free_reduce(std::move(w));
  }
  std::erase_if(relators, [](const std::vector<int>& w) { return w.empty(); });
}

Presentation Presentation::parse(const std::string& text) {
  const auto semi = text.find(';');
  const std::string gens = semi == std::string::npos ? text : text.substr(0, semi);
  std::vector<char> names;
  for (char c : gens) {
    if (c == ',' || c == ' ') continue;
    if (c < 'a' || c > 'z') fail("Presentation: generators are lowercase letters");
    names.push_back(c);
  }
  if (names.empty()) fail("Presentation: no generators");
  auto letter_index = [&](char lower) {
    auto it = std::find(names.begin(), names.end(), lower);
    if (it == names.end()) fail("Presentation: unknown letter in relator");
    return static_cast<int>(it - names.begin()) + 1;
  };
  std::vector<std::vector<int>> relators;
  if (semi != std::string::npos) {
    std::vector<int> word;
    for (std::size_t i = semi + 1; i <= text.size(); ++i) {
      const char c = i < text.size() ? text[i] : ',';
      if (c == ',' || c == ' ') {
        if (!word.empty()) relators.push_back(word);
        word.clear();
        continue;
      }
      if (c >= 'a' && c <= 'z')
        word.push_back(letter_index(c));
      else if (c >= 'A' && c <= 'Z')
        word.push_back(-letter_index(static_cast<char>(c - 'A' + 'a')));
      else
        fail("Presentation: bad relator character");
    }
  }
  return {static_cast<int>(names.size()), std::move(relators)};
}

std::string Presentation::to_string() const {
  std::string s;
  for (int g = 0; g < rank; ++g) s += std::string(s.empty() ? "" : ",") + char('a' + g);
  s += ";";
  for (std::size_t i = 0; i < relators.size(); ++i) {
    if (i) s += ",";
    for (int l : relators[i])
      s += static_cast<char>(l > 0 ? 'a' + l - 1 : 'A' - l - 1);
  }
  return s;
}

std::vector<int> SubgroupRecord::gen_perm(int gen) const {
  std::vector<int> p(index);
  for (int i = 0; i < index; ++i) p[i] = act(i, gen);
  return p;
}

namespace {

// Partial coset table backtracking. Entries of -1 are undefined; new
// cosets are introduced in scan order, so every completed table is in
// canonical (breadth-first minimal) labeling and appears exactly once.
class LowIndexSearch {
 public:
  LowIndexSearch(const Presentation& p, int n_max)
      : p_(p), n_max_(n_max), cols_(2 * p.rank) {
    table_.assign(static_cast<std::size_t>(n_max_) * cols_, -1);
    used_ = 1;
  }

  std::vector<SubgroupRecord> run() {
    dfs();
    return std::move(results_);
  }

 private:
  int col(int signed_gen) const {
    return signed_gen > 0 ? 2 * (signed_gen - 1) : 2 * (-signed_gen - 1) + 1;
  }
  int& at(int coset, int c) { return table_[coset * cols_ + c]; }
  int get(int coset, int c) const { return table_[coset * cols_ + c]; }

  bool relators_ok() const {
    for (const auto& rel : p_.relators) {
      for (int start = 0; start < used_; ++start) {
        int pos = start;
        bool complete = true;
        for (int s : rel) {
          pos = get(pos, col(s));
          if (pos < 0) {
            complete = false;
            break;
          }
        }
        if (complete && pos != start) return false;
      }
    }
    return true;
  }

  void dfs() {
    // First undefined slot in scan order.
    int coset = -1, c = -1;
    for (int i = 0; i < used_ && coset < 0; ++i)
      for (int j = 0; j < cols_; ++j)
        if (get(i, j) < 0) {
          coset = i;
          c = j;
          break;
        }
    if (coset < 0) {
      SubgroupRecord rec{used_, p_.rank,
                         {table_.begin(), table_.begin() + used_ * cols_}};
      results_.push_back(std::move(rec));
      return;
    }
    const int mirror = c ^ 1;  // inverse column of the same generator
    const int limit = std::min(used_ + 1, n_max_);
    for (int target = 0; target < limit; ++target) {
      if (get(coset, c) >= 0) break;  // defensive; slot chosen undefined
      if (target < used_ && get(target, mirror) >= 0) continue;
      const bool fresh = target == used_;
      at(coset, c) = target;
      at(target, mirror) = coset;
      if (fresh) ++used_;
      if (relators_ok()) dfs();
      at(coset, c) = -1;
      at(target, mirror) = -1;
      if (fresh) --used_;
    }
  }

  const Presentation& p_;
  int n_max_;
  int cols_;
  int used_;
  std::vector<int> table_;
  std::vector<SubgroupRecord> results_;
};

}  // namespace

std::vector<SubgroupRecord> low_index_subgroups(const Presentation& p,
                                                int n_max) {
  if (p.rank > kMaxPresentationRank)
    fail("low_index_subgroups: rank above " +
         std::to_string(kMaxPresentationRank));
  if (n_max < 1 || n_max > kMaxLowIndex)
    fail("low_index_subgroups: index bound above " +
         std::to_string(kMaxLowIndex));
  auto out = LowIndexSearch(p, n_max).run();
  std::sort(out.begin(), out.end(),
            [](const SubgroupRecord& a, const SubgroupRecord& b) {
              if (a.index != b.index) return a.index < b.index;
              return a.table < b.table;
            });
  for (const auto& rec : out)
    if (!verify_record(p, rec))
      throw std::logic_error("low_index_subgroups: invalid record produced");
  return out;
}

bool verify_record(const Presentation& p, const SubgroupRecord& rec) {
  const int n = rec.index;
  // Generator columns are permutations, consistent with their inverses.
  for (int g = 0; g < p.rank; ++g) {
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n; ++i) {
      int j = rec.act(i, g);
      if (j < 0 || j >= n || seen[j]) return false;
      seen[j] = 1;
      if (rec.act_inv(j, g) != i) return false;
    }
  }
  // Relators act trivially everywhere.
  for (const auto& rel : p.relators)
    for (int start = 0; start < n; ++start) {
      int pos = start;
      for (int s : rel)
        pos = s > 0 ? rec.act(pos, s - 1) : rec.act_inv(pos, -s - 1);
      if (pos != start) return false;
    }
  // Transitivity from coset 0.
  std::vector<char> reached(n, 0);
  std::vector<int> stack = {0};
  reached[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int g = 0; g < p.rank; ++g)
      for (int y : {rec.act(x, g), rec.act_inv(x, g)})
        if (!reached[y]) {
          reached[y] = 1;
          ++count;
          stack.push_back(y);
        }
  }
  return count == n;
}

std::vector<int> low_index_counts(const Presentation& p, int n_max) {
  std::vector<int> counts(n_max + 1, 0);
  for (const auto& rec : low_index_subgroups(p, n_max)) ++counts[rec.index];
  counts.erase(counts.begin());
  return counts;
}

CoreQuotient core_quotient(const Presentation& p, int n, long long cap) {
  auto records = low_index_subgroups(p, n);
  const int r = p.rank;
  // One permutation tuple per generator, acting on the disjoint union
  // of all coset spaces.
  int total = 0;
  for (const auto& rec : records) total += rec.index;
  std::vector<std::vector<int>> gens(r, std::vector<int>(total));
  {
    int off = 0;
    for (const auto& rec : records) {
      for (int g = 0; g < r; ++g)
        for (int i = 0; i < rec.index; ++i)
          gens[g][off + i] = off + rec.act(i, g);
      off += rec.index;
    }
  }
  auto compose = [&](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> c(total);
    for (int i = 0; i < total; ++i) c[i] = b[a[i]];
    return c;
  };
  std::vector<int> id(total);
  for (int i = 0; i < total; ++i) id[i] = i;

  std::map<std::vector<int>, Index> index_of;
  std::vector<std::vector<int>> elems = {id};
  index_of[id] = 0;
  std::size_t head = 0;
  while (head < elems.size()) {
    auto cur = elems[head++];
    for (int g = 0; g < r; ++g) {
      auto next = compose(cur, gens[g]);
      if (index_of.emplace(next, static_cast<Index>(elems.size())).second) {
        if (static_cast<long long>(elems.size()) + 1 > cap)
          throw CapExceeded("core_quotient: quotient exceeds table cap");
        elems.push_back(std::move(next));
      }
    }
  }
  const int order = static_cast<int>(elems.size());
  if (static_cast<long long>(order) > cap)
    throw CapExceeded("core_quotient: quotient exceeds table cap");
  std::vector<Index> table(static_cast<std::size_t>(order) * order);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j)
      table[static_cast<std::size_t>(i) * order + j] =
          index_of.at(compose(elems[i], elems[j]));
  auto g = make_group("core(" + p.to_string() + "," + std::to_string(n) + ")",
                      order, std::move(table));
  std::vector<Index> gen_imgs(r);
  for (int gi = 0; gi < r; ++gi) gen_imgs[gi] = index_of.at(gens[gi]);
  return {g, std::move(gen_imgs)};
}

}  // namespace profin
