#include "pakstanley/sketch.hpp"

#include <charconv>
#include <deque>
#include <sstream>

namespace pakstanley {

namespace {

std::string letter_text(int index, int level) {
  return "a" + std::to_string(index) + "^" + std::to_string(level);
}

void check_bound(const Sketch& w, const Arrangement& a) {
  if (w.m() != a.m() || w.n() != a.n()) {
    throw SketchError(SketchError::Kind::bound_mismatch,
                      "sketch is an (" + std::to_string(w.m()) + "," + std::to_string(w.n()) +
                          ")-sketch but the arrangement has m=" + std::to_string(a.m()) +
                          ", n=" + std::to_string(a.n()));
  }
}

}  // namespace

Sketch validate_sketch(std::span<const Letter> word, int m, int n) {
  using Kind = SketchError::Kind;
  if (m < 0 || n < 1) {
    throw SketchError(Kind::bad_shape, "sketch bounds need m >= 0 and n >= 1");
  }
  const std::size_t letters = static_cast<std::size_t>(m + 1) * n;
  if (word.size() != letters) {
    throw SketchError(Kind::bad_shape, "an (" + std::to_string(m) + "," + std::to_string(n) +
                                           ")-sketch has " + std::to_string(letters) +
                                           " letters, got " + std::to_string(word.size()));
  }
  constexpr std::size_t unseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> position(letters, unseen);
  for (std::size_t r = 0; r < word.size(); ++r) {
    const auto [i, s] = word[r];
    if (i < 1 || i > n || s < 0 || s > m) {
      throw SketchError(Kind::bad_shape, "letter " + letter_text(i, s) + " is out of range");
    }
    auto& slot = position[(i - 1) * (m + 1) + s];
    if (slot != unseen) {
      throw SketchError(Kind::bad_shape, "letter " + letter_text(i, s) + " appears twice");
    }
    slot = r;
  }
  auto pos = [&](int i, int s) { return position[(i - 1) * (m + 1) + s]; };

  for (int i = 1; i <= n; ++i) {
    for (int s = 1; s <= m; ++s) {
      if (pos(i, s - 1) > pos(i, s)) {
        throw SketchError(Kind::level_order, letter_text(i, s - 1) + " must precede " +
                                                 letter_text(i, s));
      }
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int s = 1; s <= m; ++s) {
        for (int t = 1; t <= m; ++t) {
          if (pos(i, s - 1) < pos(j, t - 1) && pos(i, s) > pos(j, t)) {
            throw SketchError(Kind::shuffle_order,
                              letter_text(i, s - 1) + " precedes " + letter_text(j, t - 1) +
                                  " but " + letter_text(i, s) + " does not precede " +
                                  letter_text(j, t));
          }
        }
      }
    }
  }
  return Sketch(m, n, {word.begin(), word.end()}, std::move(position));
}

namespace {

struct Enumerator {
  int m;
  int n;
  const std::function<void(const Sketch&)>& visit;
  std::vector<Letter> word;
  std::vector<bool> started;
  std::deque<Letter> queue;  // next letter owed by each started index, FIFO

  void run() {
    if (word.size() == static_cast<std::size_t>(m + 1) * n) {
      visit(validate_sketch(word, m, n));
      return;
    }
    for (int i = 1; i <= n; ++i) {
      if (started[i - 1]) continue;
      started[i - 1] = true;
      word.push_back({i, 0});
      if (m > 0) queue.push_back({i, 1});
      run();
      if (m > 0) queue.pop_back();
      word.pop_back();
      started[i - 1] = false;
    }
    if (!queue.empty()) {
      const Letter next = queue.front();
      queue.pop_front();
      word.push_back(next);
      if (next.level < m) queue.push_back({next.index, next.level + 1});
      run();
      if (next.level < m) queue.pop_back();
      word.pop_back();
      queue.push_front(next);
    }
  }
};

}  // namespace

void for_each_sketch(int m, int n, const std::function<void(const Sketch&)>& visit) {
  if (m < 0 || n < 1) {
    throw SketchError(SketchError::Kind::bad_shape, "sketch bounds need m >= 0 and n >= 1");
  }
  Enumerator e{m, n, visit, {}, std::vector<bool>(n, false), {}};
  e.word.reserve(static_cast<std::size_t>(m + 1) * n);
  e.run();
}

std::vector<Sketch> enumerate_sketches(int m, int n) {
  std::vector<Sketch> out;
  for_each_sketch(m, n, [&](const Sketch& w) { out.push_back(w); });
  return out;
}

Sketch fundamental_sketch(int m, int n) {
  std::vector<Letter> word;
  for (int s = 0; s <= m; ++s) {
    for (int i = n; i >= 1; --i) word.push_back({i, s});
  }
  return validate_sketch(word, m, n);
}

bool in_l(const Sketch& w, const Arrangement& a) {
  check_bound(w, a);
  const auto& word = w.word();
  // For each j: the largest level s with alpha_j^s followed by some alpha_i^0.
  std::vector<int> best_level(w.n() + 1, -1);
  std::vector<int> follower(w.n() + 1, 0);
  for (std::size_t r = 0; r + 1 < word.size(); ++r) {
    if (word[r + 1].level != 0) continue;
    const auto [j, s] = word[r];
    if (s > best_level[j]) {
      best_level[j] = s;
      follower[j] = word[r + 1].index;
    }
  }
  for (int j = 1; j <= w.n(); ++j) {
    if (best_level[j] >= 0 && !in_triple(a, follower[j], j, best_level[j])) return false;
  }
  return true;
}

bool in_m(const Sketch& w, const Arrangement& a) {
  check_bound(w, a);
  const auto& word = w.word();
  for (std::size_t r = 0; r + 1 < word.size(); ++r) {
    if (word[r + 1].level != 0) continue;
    if (!in_triple(a, word[r + 1].index, word[r].index, word[r].level)) return false;
  }
  return true;
}

std::string to_string(Letter letter) {
  return letter_text(letter.index, letter.level);
}

std::string to_string(std::span<const Letter> letters) {
  std::string out;
  for (const auto& letter : letters) {
    if (!out.empty()) out += ' ';
    out += to_string(letter);
  }
  return out;
}

std::string to_string(const Sketch& w) {
  return to_string(std::span<const Letter>(w.word()));
}

std::vector<Letter> parse_letters(std::string_view text) {
  std::vector<Letter> out;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    const auto caret = token.find('^');
    if (token.size() < 4 || token[0] != 'a' || caret == std::string::npos) {
      throw SketchError(SketchError::Kind::bad_shape, "cannot parse letter '" + token + "'");
    }
    Letter letter;
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto r1 = std::from_chars(begin + 1, begin + caret, letter.index);
    auto r2 = std::from_chars(begin + caret + 1, end, letter.level);
    if (r1.ec != std::errc{} || r1.ptr != begin + caret || r2.ec != std::errc{} || r2.ptr != end) {
      throw SketchError(SketchError::Kind::bad_shape, "cannot parse letter '" + token + "'");
    }
    out.push_back(letter);
  }
  return out;
}

std::size_t SketchHash::operator()(const Sketch& w) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (const auto& [i, s] : w.word()) {
    h ^= static_cast<std::size_t>(i) * 131 + static_cast<std::size_t>(s);
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace pakstanley
