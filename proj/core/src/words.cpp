#include <algorithm>

#include "pfshuffle/error.hpp"
#include "pfshuffle/parkfun.hpp"

namespace pfshuffle {

BinaryWord BinaryWord::parse(std::string_view text) {
  std::vector<CarSize> letters;
  letters.reserve(text.size());
  for (char c : text) {
    if (c == '1') {
      letters.push_back(CarSize::small);
    } else if (c == '2') {
      letters.push_back(CarSize::big);
    } else {
      throw ParseError(std::string("binary word letter must be 1 or 2, got '") + c + "'");
    }
  }
  return BinaryWord(std::move(letters));
}

int BinaryWord::ones() const {
  return static_cast<int>(std::count(letters_.begin(), letters_.end(), CarSize::small));
}

int BinaryWord::twos() const { return size() - ones(); }

std::string BinaryWord::to_text() const {
  std::string out;
  for (CarSize c : letters_) out += c == CarSize::small ? '1' : '2';
  return out;
}

int inv(const BinaryWord& w) {
  int twos_seen = 0;
  int count = 0;
  for (CarSize c : w.letters()) {
    if (c == CarSize::big) {
      ++twos_seen;
    } else {
      count += twos_seen;
    }
  }
  return count;
}

int coinv(const BinaryWord& w) {
  int ones_seen = 0;
  int count = 0;
  for (CarSize c : w.letters()) {
    if (c == CarSize::small) {
      ++ones_seen;
    } else {
      count += ones_seen;
    }
  }
  return count;
}

std::vector<BinaryWord> binary_words(int ones, int twos) {
  if (ones < 0 || twos < 0) return {};
  std::vector<CarSize> letters(static_cast<std::size_t>(ones), CarSize::small);
  letters.insert(letters.end(), static_cast<std::size_t>(twos), CarSize::big);
  std::vector<BinaryWord> out;
  do {
    out.emplace_back(letters);
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

}  // namespace pfshuffle
