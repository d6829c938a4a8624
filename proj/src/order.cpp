#include "coprod/order.hpp"

#include <algorithm>
#include <stdexcept>

namespace coprod {

ProjectionIndex ProjectionIndex::singleton(Letter a) { return ProjectionIndex(a, std::nullopt); }

ProjectionIndex ProjectionIndex::pair(Letter a, Letter b) {
  if (a == b) throw std::invalid_argument("projection pair needs two distinct letters");
  if (a.commutes() && b.commutes()) {
    throw std::invalid_argument("projection pair of two commuting letters is not a dependent pair");
  }
  if (b < a) std::swap(a, b);
  return ProjectionIndex(a, b);
}

Projection project(const Word& w, const ProjectionIndex& index) {
  if (!index.is_pair()) return w.count(index.first());
  const Letter a = index.first();
  const Letter b = *index.second();
  std::vector<Letter> sub;
  for (Letter l : w.letters()) {
    if (l == a || l == b) sub.push_back(l);
  }
  return sub;
}

std::vector<ProjectionIndex> projection_indices(const Alphabet& alphabet) {
  std::vector<ProjectionIndex> out;
  const auto letters = alphabet.letters();
  for (Letter l : letters) out.push_back(ProjectionIndex::singleton(l));
  for (std::size_t i = 0; i < alphabet.noncommuting_count(); ++i) {
    for (std::size_t j = i + 1; j < alphabet.noncommuting_count(); ++j) {
      out.push_back(ProjectionIndex::pair(Letter::x(static_cast<std::uint16_t>(i)),
                                          Letter::x(static_cast<std::uint16_t>(j))));
    }
  }
  for (std::size_t i = 0; i < alphabet.commuting_count(); ++i) {
    for (std::size_t j = 0; j < alphabet.noncommuting_count(); ++j) {
      out.push_back(ProjectionIndex::pair(Letter::y(static_cast<std::uint16_t>(i)),
                                          Letter::x(static_cast<std::uint16_t>(j))));
    }
  }
  for (std::size_t r = 0; r < out.size(); ++r) out[r].rank_ = r;
  return out;
}

namespace {

std::strong_ordering compare_pair(const Word& u, const Word& v, Letter a, Letter b) {
  auto next = [a, b](std::span<const Letter> s, std::size_t& i) -> const Letter* {
    while (i < s.size() && s[i] != a && s[i] != b) ++i;
    return i < s.size() ? &s[i++] : nullptr;
  };
  std::size_t i = 0;
  std::size_t j = 0;
  for (;;) {
    const Letter* p = next(u.letters(), i);
    const Letter* q = next(v.letters(), j);
    if (!p || !q) return (p != nullptr) <=> (q != nullptr);
    if (*p != *q) return *p <=> *q;
  }
}

}  // namespace

std::strong_ordering compare(const Word& u, const Word& v) {
  if (u.length() != v.length()) return u.length() <=> v.length();
  if (u == v) return std::strong_ordering::equal;

  std::vector<Letter> present(u.letters().begin(), u.letters().end());
  present.insert(present.end(), v.letters().begin(), v.letters().end());
  std::sort(present.begin(), present.end());
  present.erase(std::unique(present.begin(), present.end()), present.end());

  for (Letter l : present) {
    if (auto c = u.count(l) <=> v.count(l); c != 0) return c;
  }
  auto xs_begin = std::find_if(present.begin(), present.end(), [](Letter l) { return !l.commutes(); });
  for (auto a = xs_begin; a != present.end(); ++a) {
    for (auto b = std::next(a); b != present.end(); ++b) {
      if (auto c = compare_pair(u, v, *a, *b); c != 0) return c;
    }
  }
  for (auto a = present.begin(); a != xs_begin; ++a) {
    for (auto b = xs_begin; b != present.end(); ++b) {
      if (auto c = compare_pair(u, v, *a, *b); c != 0) return c;
    }
  }
  // Unreachable: distinct traces have distinct projection tuples.
  throw std::logic_error("distinct words with identical projections");
}

std::vector<std::uint16_t> order_key(const Alphabet& alphabet, const Word& w) {
  std::vector<std::uint16_t> key;
  key.push_back(static_cast<std::uint16_t>(w.length()));
  const auto indices = projection_indices(alphabet);
  for (const auto& index : indices) {
    auto value = project(w, index);
    if (const auto* count = std::get_if<std::size_t>(&value)) {
      key.push_back(static_cast<std::uint16_t>(*count));
    } else {
      for (Letter l : std::get<std::vector<Letter>>(value)) {
        key.push_back(l == index.first() ? 0 : 1);
      }
    }
  }
  return key;
}

void sort_words(const Alphabet& alphabet, std::vector<Word>& words) {
  std::vector<std::pair<std::vector<std::uint16_t>, Word>> keyed;
  keyed.reserve(words.size());
  for (auto& w : words) keyed.emplace_back(order_key(alphabet, w), std::move(w));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < words.size(); ++i) words[i] = std::move(keyed[i].second);
}

Word max_word(std::span<const Word> words) {
  if (words.empty()) throw std::invalid_argument("max_word of an empty set");
  const Word* best = &words.front();
  for (const auto& w : words.subspan(1)) {
    if (compare(*best, w) < 0) best = &w;
  }
  return *best;
}

}  // namespace coprod
