#include "coprod/alphabet.hpp"

#include <limits>
#include <stdexcept>
#include <unordered_set>

namespace coprod {

Alphabet::Alphabet(std::vector<std::string> commuting, std::vector<std::string> noncommuting)
    : commuting_(std::move(commuting)), noncommuting_(std::move(noncommuting)) {
  constexpr auto kMax = std::numeric_limits<std::uint16_t>::max();
  if (commuting_.size() > kMax || noncommuting_.size() > kMax) {
    throw std::invalid_argument("alphabet too large");
  }
  std::unordered_set<std::string> seen;
  for (const auto* list : {&commuting_, &noncommuting_}) {
    for (const auto& name : *list) {
      if (name.empty()) throw std::invalid_argument("empty variable name");
      if (!seen.insert(name).second) {
        throw std::invalid_argument("duplicate variable name '" + name + "'");
      }
    }
  }
}

Alphabet Alphabet::standard(std::size_t nx, std::size_t ny) {
  std::vector<std::string> ys;
  std::vector<std::string> xs;
  for (std::size_t i = 1; i <= ny; ++i) ys.push_back("y" + std::to_string(i));
  for (std::size_t i = 1; i <= nx; ++i) xs.push_back("x" + std::to_string(i));
  return Alphabet(std::move(ys), std::move(xs));
}

bool Alphabet::contains(Letter letter) const noexcept {
  const auto& list = letter.commutes() ? commuting_ : noncommuting_;
  return letter.index() < list.size();
}

const std::string& Alphabet::name(Letter letter) const {
  if (!contains(letter)) throw std::out_of_range("letter not in alphabet");
  return letter.commutes() ? commuting_[letter.index()] : noncommuting_[letter.index()];
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < commuting_.size(); ++i) {
    if (commuting_[i] == name) return Letter::y(static_cast<std::uint16_t>(i));
  }
  for (std::size_t i = 0; i < noncommuting_.size(); ++i) {
    if (noncommuting_[i] == name) return Letter::x(static_cast<std::uint16_t>(i));
  }
  return std::nullopt;
}

std::vector<Letter> Alphabet::letters() const {
  std::vector<Letter> out;
  out.reserve(size());
  for (std::size_t i = 0; i < commuting_.size(); ++i) {
    out.push_back(Letter::y(static_cast<std::uint16_t>(i)));
  }
  for (std::size_t i = 0; i < noncommuting_.size(); ++i) {
    out.push_back(Letter::x(static_cast<std::uint16_t>(i)));
  }
  return out;
}

}  // namespace coprod
