#include "coprod/word.hpp"

#include <algorithm>
#include <stdexcept>

#include "coprod/order.hpp"

namespace coprod {

namespace {

// Sorts every maximal run of commuting letters in place.
void normalize_runs(std::vector<Letter>& letters) {
  auto it = letters.begin();
  while (it != letters.end()) {
    if (!it->commutes()) {
      ++it;
      continue;
    }
    auto end = std::find_if(it, letters.end(), [](Letter l) { return !l.commutes(); });
    std::sort(it, end);
    it = end;
  }
}

void append_block(std::vector<Letter>& out, const CommBlock& block) {
  for (const auto& [index, exp] : block.entries()) {
    out.insert(out.end(), exp, Letter::y(index));
  }
}

CommBlock block_of(std::span<const Letter> run) {
  std::vector<CommBlock::Entry> entries;
  for (Letter l : run) {
    if (!entries.empty() && entries.back().first == l.index()) {
      ++entries.back().second;
    } else {
      entries.emplace_back(l.index(), 1);
    }
  }
  return CommBlock::from_entries(std::move(entries));
}

}  // namespace

CommBlock CommBlock::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end());
  CommBlock block;
  for (const auto& [index, exp] : entries) {
    if (exp == 0) continue;
    if (!block.entries_.empty() && block.entries_.back().first == index) {
      block.entries_.back().second += exp;
    } else {
      block.entries_.emplace_back(index, exp);
    }
  }
  return block;
}

std::uint32_t CommBlock::exponent(std::uint16_t index) const noexcept {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{index, 0});
  return (it != entries_.end() && it->first == index) ? it->second : 0;
}

std::size_t CommBlock::size() const noexcept {
  std::size_t total = 0;
  for (const auto& e : entries_) total += e.second;
  return total;
}

Word CommBlock::to_word() const {
  std::vector<Letter> letters;
  append_block(letters, *this);
  return Word::from_letters(letters);
}

Word Word::from_letters(std::span<const Letter> letters) {
  std::vector<Letter> out(letters.begin(), letters.end());
  normalize_runs(out);
  return Word(std::move(out));
}

bool Word::is_pure() const noexcept {
  return std::all_of(letters_.begin(), letters_.end(), [](Letter l) { return l.commutes(); });
}

std::size_t Word::count(Letter letter) const noexcept {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), letter));
}

CommBlock Word::leading_block() const {
  auto end = std::find_if(letters_.begin(), letters_.end(), [](Letter l) { return !l.commutes(); });
  return block_of(std::span<const Letter>(letters_.begin(), end));
}

std::vector<std::pair<Letter, CommBlock>> Word::tail() const {
  std::vector<std::pair<Letter, CommBlock>> out;
  auto it = std::find_if(letters_.begin(), letters_.end(), [](Letter l) { return !l.commutes(); });
  while (it != letters_.end()) {
    Letter x = *it++;
    auto end = std::find_if(it, letters_.end(), [](Letter l) { return !l.commutes(); });
    out.emplace_back(x, block_of(std::span<const Letter>(it, end)));
    it = end;
  }
  return out;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Letter l : w.letters()) {
    std::size_t code = (static_cast<std::size_t>(l.kind()) << 16) | l.index();
    h ^= code + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Word concat(const Word& u, const Word& v) {
  std::vector<Letter> out;
  out.reserve(u.length() + v.length());
  out.insert(out.end(), u.letters_.begin(), u.letters_.end());
  auto boundary = out.size();
  out.insert(out.end(), v.letters_.begin(), v.letters_.end());
  // Only the run straddling the boundary can be out of order.
  auto first = out.begin() + static_cast<std::ptrdiff_t>(boundary);
  auto lo = first;
  while (lo != out.begin() && std::prev(lo)->commutes()) --lo;
  auto hi = first;
  while (hi != out.end() && hi->commutes()) ++hi;
  if (lo != first && hi != first) std::inplace_merge(lo, first, hi);
  return Word(std::move(out));
}

Word power(const Word& w, std::size_t k) {
  Word out;
  for (std::size_t i = 0; i < k; ++i) out = concat(out, w);
  return out;
}

bool fits(const Alphabet& alphabet, const Word& w) noexcept {
  return std::all_of(w.letters().begin(), w.letters().end(),
                     [&](Letter l) { return alphabet.contains(l); });
}

Word word_from_letters(const Alphabet& alphabet, std::span<const std::string> names) {
  std::vector<Letter> letters;
  letters.reserve(names.size());
  for (const auto& name : names) {
    auto letter = alphabet.find(name);
    if (!letter) throw std::invalid_argument("unknown variable '" + name + "'");
    letters.push_back(*letter);
  }
  return Word::from_letters(letters);
}

Decomposition decompose(const Word& w) {
  auto letters = w.letters();
  auto is_x = [](Letter l) { return !l.commutes(); };
  auto first = std::find_if(letters.begin(), letters.end(), is_x);
  if (first == letters.end()) {
    auto block = block_of(letters);
    return {block, std::nullopt, block, true};
  }
  auto last = std::find_if(letters.rbegin(), letters.rend(), is_x).base();
  Decomposition d;
  d.pure = false;
  d.prefix = block_of(std::span<const Letter>(letters.begin(), first));
  d.middle = Word::from_letters(std::span<const Letter>(first, last));
  d.suffix = block_of(std::span<const Letter>(last, letters.end()));
  return d;
}

Word prefix(const Word& w) { return decompose(w).prefix.to_word(); }
Word suffix(const Word& w) { return decompose(w).suffix.to_word(); }

EquivKey equiv_key(const Word& w) {
  auto d = decompose(w);
  EquivKey key;
  key.length = w.length();
  if (!d.pure) {
    key.prefix_length = d.prefix.size();
    key.suffix_length = d.suffix.size();
    key.middle = std::move(d.middle);
  }
  return key;
}

bool equivalent(const Word& u, const Word& v) { return equiv_key(u) == equiv_key(v); }

namespace {

// Exponent vectors f with 0 <= f <= bound (entrywise) and |f| = total, in
// lexicographic order.
void sub_multisets(const CommBlock& bound, std::size_t total,
                   const std::function<void(const CommBlock&)>& visit) {
  auto entries = bound.entries();
  std::vector<std::uint32_t> chosen(entries.size(), 0);
  std::vector<std::size_t> room(entries.size() + 1, 0);
  for (std::size_t i = entries.size(); i-- > 0;) room[i] = room[i + 1] + entries[i].second;

  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t left) {
    if (i == entries.size()) {
      if (left != 0) return;
      std::vector<CommBlock::Entry> picked;
      for (std::size_t j = 0; j < entries.size(); ++j) picked.emplace_back(entries[j].first, chosen[j]);
      visit(CommBlock::from_entries(std::move(picked)));
      return;
    }
    std::uint32_t hi = static_cast<std::uint32_t>(std::min<std::size_t>(entries[i].second, left));
    for (std::uint32_t e = 0; e <= hi; ++e) {
      if (left - e > room[i + 1]) continue;
      chosen[i] = e;
      rec(i + 1, left - e);
    }
  };
  rec(0, total);
}

CommBlock block_difference(const CommBlock& whole, const CommBlock& part) {
  std::vector<CommBlock::Entry> rest;
  for (const auto& [index, exp] : whole.entries()) rest.emplace_back(index, exp - part.exponent(index));
  return CommBlock::from_entries(std::move(rest));
}

}  // namespace

std::vector<std::pair<Word, Word>> left_factorizations(const Word& u, std::size_t n) {
  if (n > u.length()) throw std::out_of_range("split point exceeds word length");
  std::vector<std::pair<Word, Word>> out;

  // u = B0 a1 B1 ... ak Bk
  std::vector<CommBlock> blocks{u.leading_block()};
  std::vector<Letter> xs;
  for (auto& [x, block] : u.tail()) {
    xs.push_back(x);
    blocks.push_back(std::move(block));
  }

  auto emit = [&](std::size_t j, const CommBlock& head) {
    // v = B0 a1 ... aj head, w = (Bj - head) a_{j+1} ... ak Bk
    std::vector<Letter> left;
    std::vector<Letter> right;
    for (std::size_t i = 0; i < j; ++i) {
      append_block(left, blocks[i]);
      left.push_back(xs[i]);
    }
    append_block(left, head);
    append_block(right, block_difference(blocks[j], head));
    for (std::size_t i = j; i < xs.size(); ++i) {
      right.push_back(xs[i]);
      append_block(right, blocks[i + 1]);
    }
    out.emplace_back(Word::from_letters(left), Word::from_letters(right));
  };

  std::size_t before = 0;  // |B0| + ... + |B_{j-1}| + j
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    if (j > 0) before += blocks[j - 1].size() + 1;
    if (n < before || n - before > blocks[j].size()) continue;
    sub_multisets(blocks[j], n - before, [&](const CommBlock& head) { emit(j, head); });
  }
  return out;
}

namespace {

void extend_words(const Alphabet& alphabet, std::size_t n, std::vector<Letter>& current,
                  std::vector<Word>& out) {
  if (current.size() == n) {
    out.push_back(Word::from_letters(current));
    return;
  }
  for (Letter l : alphabet.letters()) {
    // Within a commuting run only nondecreasing letters, so each normal form
    // is produced once.
    if (l.commutes() && !current.empty() && current.back().commutes() && l < current.back()) continue;
    current.push_back(l);
    extend_words(alphabet, n, current, out);
    current.pop_back();
  }
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::vector<Word> enumerate_words(const Alphabet& alphabet, std::size_t n) {
  std::vector<Word> out;
  std::vector<Letter> current;
  extend_words(alphabet, n, current, out);
  sort_words(alphabet, out);
  std::reverse(out.begin(), out.end());
  return out;
}

std::size_t count_words(const Alphabet& alphabet, std::size_t n) {
  const std::size_t ny = alphabet.commuting_count();
  const std::size_t nx = alphabet.noncommuting_count();
  auto multisets = [&](std::size_t k) -> std::size_t {
    if (ny == 0) return k == 0 ? 1 : 0;
    return binomial(k + ny - 1, ny - 1);
  };
  // words[r]: all words of length r; starts[r]: identity or words beginning
  // with a noncommuting letter.
  std::vector<std::size_t> words(n + 1, 0);
  std::vector<std::size_t> starts(n + 1, 0);
  for (std::size_t r = 0; r <= n; ++r) {
    starts[r] = (r == 0 ? 1 : nx * words[r - 1]);
    for (std::size_t k = 0; k <= r; ++k) words[r] += multisets(k) * starts[r - k];
  }
  return words[n];
}

}  // namespace coprod
