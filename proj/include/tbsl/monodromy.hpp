#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tbsl/contfrac.hpp"
#include "tbsl/error.hpp"

namespace tbsl {

struct TwistLetter {
  std::size_t curve;  // 1-based index of the core curve gamma_i
  int exponent;       // +1 or -1
  friend bool operator==(const TwistLetter&, const TwistLetter&) = default;
};

/// Product of Dehn twists along the core curves of the plumbed Hopf bands:
/// all even-indexed (river) twists first, then the odd-indexed (bridge) ones.
class MonodromyWord {
 public:
  MonodromyWord() = default;
  explicit MonodromyWord(std::vector<TwistLetter> letters) : letters_(std::move(letters)) {}

  const std::vector<TwistLetter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }

  /// "t2 t1 t3^-1"
  std::string str() const {
    std::string out;
    for (const auto& l : letters_) {
      if (!out.empty()) out += ' ';
      out += "t" + std::to_string(l.curve);
      if (l.exponent < 0) out += "^-1";
    }
    return out;
  }

  friend bool operator==(const MonodromyWord&, const MonodromyWord&) = default;

 private:
  std::vector<TwistLetter> letters_;
};

inline MonodromyWord twist_word(const EvenExpansion& e) {
  if (!e.all_twos()) fail(ErrorKind::Argument, "twist_word: " + e.str() + " is not fibered");
  std::vector<TwistLetter> letters;
  for (std::size_t i = 2; i <= e.size(); i += 2)
    letters.push_back({i, e[i - 1] > 0 ? -1 : 1});
  for (std::size_t i = 1; i <= e.size(); i += 2)
    letters.push_back({i, e[i - 1] > 0 ? 1 : -1});
  return MonodromyWord(std::move(letters));
}

struct SignCensus {
  std::size_t pos_rivers = 0;
  std::size_t neg_rivers = 0;
  std::size_t pos_bridges = 0;
  std::size_t neg_bridges = 0;

  std::size_t total() const { return pos_rivers + neg_rivers + pos_bridges + neg_bridges; }

  SignCensus mirrored() const { return {neg_rivers, pos_rivers, neg_bridges, pos_bridges}; }

  friend bool operator==(const SignCensus&, const SignCensus&) = default;
};

inline SignCensus sign_census(const MonodromyWord& w) {
  SignCensus c;
  for (const auto& l : w.letters()) {
    bool river = l.curve % 2 == 0;
    if (river)
      ++(l.exponent > 0 ? c.pos_rivers : c.neg_rivers);
    else
      ++(l.exponent > 0 ? c.pos_bridges : c.neg_bridges);
  }
  return c;
}

}  // namespace tbsl
