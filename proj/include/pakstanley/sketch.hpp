#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pakstanley/arrangement.hpp"

namespace pakstanley {

// The letter alpha_index^level, standing for the value x_index + level.
struct Letter {
  int index = 0;
  int level = 0;

  auto operator<=>(const Letter&) const = default;
};

class SketchError : public std::invalid_argument {
public:
  enum class Kind {
    bad_shape,       // wrong length, letters out of range, missing or duplicate letters
    level_order,     // alpha_i^{s-1} does not precede alpha_i^s
    shuffle_order,   // the order of level s-1 letters is not repeated at level s
    bound_mismatch,  // sketch bound differs from the arrangement's m
  };

  SketchError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

// An (m,n)-sketch. Only constructible through validate_sketch (and the
// enumerators built on it), so every instance satisfies the sketch axioms.
class Sketch {
public:
  int m() const { return m_; }
  int n() const { return n_; }
  const std::vector<Letter>& word() const { return word_; }

  std::size_t position(Letter letter) const {
    return position_[(letter.index - 1) * (m_ + 1) + letter.level];
  }
  // a <_w b
  bool before(Letter a, Letter b) const { return position(a) < position(b); }

  bool operator==(const Sketch& other) const { return word_ == other.word_; }
  auto operator<=>(const Sketch& other) const { return word_ <=> other.word_; }

  friend Sketch validate_sketch(std::span<const Letter> word, int m, int n);

private:
  Sketch(int m, int n, std::vector<Letter> word, std::vector<std::size_t> position)
      : m_(m), n_(n), word_(std::move(word)), position_(std::move(position)) {}

  int m_ = 0;
  int n_ = 0;
  std::vector<Letter> word_;
  std::vector<std::size_t> position_;
};

Sketch validate_sketch(std::span<const Letter> word, int m, int n);

// Every (m,n)-sketch exactly once. A sketch is built left to right: either a
// fresh index starts (its level-0 letter), or the oldest started index with
// levels left emits its next level. Fresh starts are tried first, in
// increasing index order.
std::vector<Sketch> enumerate_sketches(int m, int n);
void for_each_sketch(int m, int n, const std::function<void(const Sketch&)>& visit);

// alpha_n^0 ... alpha_1^0 alpha_n^1 ... alpha_1^1 ... alpha_n^m ... alpha_1^m
Sketch fundamental_sketch(int m, int n);

// S-locally maximal: for each j, the largest s with alpha_j^s immediately
// followed by some alpha_i^0 has (i,j,s) in Triple_S.
bool in_l(const Sketch& w, const Arrangement& a);
// Every adjacency alpha_j^s alpha_i^0 has (i,j,s) in Triple_S.
bool in_m(const Sketch& w, const Arrangement& a);

// "a2^0 a3^0 a2^1 ..."
std::string to_string(Letter letter);
std::string to_string(const Sketch& w);
std::string to_string(std::span<const Letter> letters);
std::vector<Letter> parse_letters(std::string_view text);

struct SketchHash {
  std::size_t operator()(const Sketch& w) const noexcept;
};

}  // namespace pakstanley
