#include <deque>
#include <map>

#include "helpers.hpp"

using namespace testing;

namespace {

std::vector<std::string> names(std::initializer_list<const char*> list) { return {list.begin(), list.end()}; }

// Equivalence classes of letter sequences under swaps of adjacent commuting
// letters, by breadth-first search.
std::vector<std::vector<Letter>> swap_closure(const std::vector<Letter>& start) {
  std::set<std::vector<Letter>> seen{start};
  std::deque<std::vector<Letter>> queue{start};
  while (!queue.empty()) {
    auto s = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      if (!s[i].commutes() || !s[i + 1].commutes()) continue;
      auto t = s;
      std::swap(t[i], t[i + 1]);
      if (seen.insert(t).second) queue.push_back(t);
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

TEST_CASE("word_from_letters sorts commuting runs") {
  const auto a = std_alphabet();
  CHECK(word_from_letters(a, names({"y2", "y1", "x1"})) == W("y1*y2*x1"));
  CHECK(word_from_letters(a, {}) == Word{});
  CHECK(word_from_letters(a, names({"x1", "y2", "y1", "x1"})) == W("x1*y1*y2*x1"));
  CHECK(word_from_letters(a, names({"y2", "x1", "y1"})) != word_from_letters(a, names({"y1", "x1", "y2"})));
  CHECK_THROWS_AS(word_from_letters(a, names({"z"})), std::invalid_argument);
}

TEST_CASE("concat merges the boundary block") {
  CHECK(concat(W("x1*y1"), W("y2*x1")) == W("x1*y1*y2*x1"));
  CHECK(concat(Word{}, W("x1*y2")) == W("x1*y2"));
  CHECK(concat(W("y1"), W("y1")) == W("y1^2"));
  CHECK(concat(W("y2*x1"), W("y1")) == W("y2*x1*y1"));
  CHECK(power(W("y1*x1"), 3) == W("y1*x1*y1*x1*y1*x1"));
  CHECK(power(W("x2"), 0) == Word{});
}

TEST_CASE("length counts letters with multiplicity") {
  CHECK(Word{}.length() == 0);
  CHECK(W("x1*y1*y2*x1").length() == 4);
  CHECK(W("y1^3").length() == 3);
}

TEST_CASE("decompose reads off prefix, middle and suffix") {
  const auto d = decompose(W("y1*x1*y2*x1*y1*y2"));
  CHECK(d.prefix.to_word() == W("y1"));
  REQUIRE(d.middle.has_value());
  CHECK(*d.middle == W("x1*y2*x1"));
  CHECK(d.suffix.to_word() == W("y1*y2"));
  CHECK_FALSE(d.pure);

  const auto p = decompose(W("y1*y2"));
  CHECK(p.pure);
  CHECK_FALSE(p.middle.has_value());
  CHECK(p.prefix.to_word() == W("y1*y2"));
  CHECK(p.suffix.to_word() == W("y1*y2"));
  CHECK(prefix(W("y1*y2")) == W("y1*y2"));

  const auto x = decompose(W("x1"));
  CHECK(x.prefix.empty());
  CHECK(*x.middle == W("x1"));
  CHECK(x.suffix.empty());
}

TEST_CASE("decomposition lengths add up") {
  for (const auto& w : words_up_to(std_alphabet(), 4)) {
    const auto k = equiv_key(w);
    if (k.is_pure()) {
      CHECK(w.is_pure());
      continue;
    }
    CHECK(k.prefix_length + k.middle->length() + k.suffix_length == w.length());
    CHECK_FALSE(k.middle->letters().front().commutes());
    CHECK_FALSE(k.middle->letters().back().commutes());
  }
}

TEST_CASE("equivalence examples") {
  CHECK(equivalent(W("y1*x1*y2"), W("y2*x1*y1")));
  CHECK(equivalent(W("y1*y2"), W("y1^2")));
  CHECK_FALSE(equivalent(W("y1*x1"), W("x1*y1")));
  CHECK_FALSE(equivalent(W("x1*y1"), W("x2*y1")));
  CHECK_FALSE(equivalent(W("y1"), W("y1^2")));
}

TEST_CASE("left factorization examples") {
  using Pairs = std::vector<std::pair<Word, Word>>;
  auto as_set = [](const Pairs& p) { return std::set<std::pair<Word, Word>>(p.begin(), p.end()); };
  CHECK(as_set(left_factorizations(W("y1*y2*x1"), 1)) ==
        as_set({{W("y1"), W("y2*x1")}, {W("y2"), W("y1*x1")}}));
  CHECK(as_set(left_factorizations(W("x1*y1"), 1)) == as_set({{W("x1"), W("y1")}}));
  CHECK(as_set(left_factorizations(W("x1*y1*y2*x1"), 0)) == as_set({{Word{}, W("x1*y1*y2*x1")}}));
  CHECK(as_set(left_factorizations(W("x1*y1*y2*x1"), 2)) ==
        as_set({{W("x1*y1"), W("y2*x1")}, {W("x1*y2"), W("y1*x1")}}));
  CHECK(left_factorizations(W("y1*x1*y2"), 2).size() == 1);
  CHECK(left_factorizations(W("y1^2*y2"), 2).size() == 2);
  CHECK_THROWS_AS(left_factorizations(W("x1"), 2), std::out_of_range);
}

TEST_CASE("left factorizations match the brute-force oracle up to length 4") {
  const auto a = std_alphabet();
  std::map<std::size_t, std::vector<Word>> by_length;
  for (const auto& w : words_up_to(a, 4)) by_length[w.length()].push_back(w);
  for (const auto& [len, us] : by_length) {
    for (const auto& u : us) {
      for (std::size_t n = 0; n <= len; ++n) {
        std::set<std::pair<Word, Word>> oracle;
        for (const auto& v : by_length[n]) {
          for (const auto& w : by_length[len - n]) {
            if (concat(v, w) == u) oracle.emplace(v, w);
          }
        }
        const auto got = left_factorizations(u, n);
        CHECK(std::set<std::pair<Word, Word>>(got.begin(), got.end()) == oracle);
        CHECK(got.size() == oracle.size());
      }
    }
  }
}

TEST_CASE("normalization identifies exactly the swap-equivalent sequences") {
  const Alphabet a({"y1", "y2"}, {"x1"});
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto seqs = all_sequences(a.letters(), n);
    for (const auto& s : seqs) {
      const auto cls = swap_closure(s);
      const std::set<std::vector<Letter>> in_class(cls.begin(), cls.end());
      const auto ws = Word::from_letters(s);
      for (const auto& t : seqs) CHECK((Word::from_letters(t) == ws) == in_class.contains(t));
    }
  }
}

TEST_CASE("concat agrees with concatenating letter sequences") {
  std::mt19937_64 rng(7);
  const auto letters = std_alphabet().letters();
  for (int i = 0; i < 2000; ++i) {
    std::vector<Letter> s;
    std::vector<Letter> t;
    for (auto* v : {&s, &t}) {
      v->resize(rng() % 6);
      for (auto& l : *v) l = letters[rng() % letters.size()];
    }
    auto st = s;
    st.insert(st.end(), t.begin(), t.end());
    CHECK(concat(Word::from_letters(s), Word::from_letters(t)) == Word::from_letters(st));
  }
}

TEST_CASE("concat is associative with identity") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const auto u = random_word(rng, std_alphabet(), 4);
    const auto v = random_word(rng, std_alphabet(), 4);
    const auto w = random_word(rng, std_alphabet(), 4);
    CHECK(concat(concat(u, v), w) == concat(u, concat(v, w)));
    CHECK(concat(u, Word{}) == u);
    CHECK(concat(u, v).length() == u.length() + v.length());
  }
}

TEST_CASE("the monoid is cancellative on words of length at most 4") {
  const auto words = words_up_to(std_alphabet(), 4);
  REQUIRE(words.size() == 285);
  for (const auto& a : words) {
    std::set<Word> left;
    std::set<Word> right;
    for (const auto& b : words) {
      left.insert(concat(a, b));
      right.insert(concat(b, a));
    }
    CHECK(left.size() == words.size());
    CHECK(right.size() == words.size());
  }
}

TEST_CASE("enumerate_words") {
  CHECK(enumerate_words(std_alphabet(), 0) == std::vector<Word>{Word{}});
  CHECK(enumerate_words(std_alphabet(1, 1), 1) == std::vector<Word>{W("y1"), W("x1")});
  CHECK(enumerate_words(std_alphabet(), 2).size() == 15);

  for (auto [nx, ny] : {std::pair{2, 2}, {1, 3}, {3, 0}, {0, 2}}) {
    const auto a = std_alphabet(nx, ny);
    std::map<std::size_t, std::size_t> oracle;
    for (const auto& w : words_up_to(a, 4)) ++oracle[w.length()];
    for (std::size_t n = 0; n <= 4; ++n) {
      const auto ws = enumerate_words(a, n);
      CHECK(ws.size() == oracle[n]);
      CHECK(count_words(a, n) == oracle[n]);
      CHECK(std::set<Word>(ws.begin(), ws.end()).size() == ws.size());
      for (std::size_t i = 1; i < ws.size(); ++i) CHECK(compare(ws[i - 1], ws[i]) > 0);
    }
  }
}

TEST_CASE("alphabet validation") {
  CHECK_THROWS_AS(Alphabet({"a", "a"}, {}), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet({"a"}, {"a"}), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet({""}, {}), std::invalid_argument);
  const Alphabet a({"t"}, {"u", "v"});
  CHECK(a.find("v") == Letter::x(1));
  CHECK_FALSE(a.find("w").has_value());
  CHECK(a.name(Letter::y(0)) == "t");
  CHECK(fits(a, Word::from_letter(Letter::x(1))));
  CHECK_FALSE(fits(a, Word::from_letter(Letter::x(2))));
}
