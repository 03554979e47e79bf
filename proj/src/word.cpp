#include "word.hpp"

#include <algorithm>
#include <stdexcept>

namespace cu2 {

void validate_word(const Word& w) {
  for (Letter l : w) {
    if (l != 1 && l != 2) {
      throw std::invalid_argument("word letters must be 1 or 2");
    }
  }
}

Word concat(const Word& u, const Word& w) {
  Word out;
  out.reserve(u.size() + w.size());
  out.insert(out.end(), u.begin(), u.end());
  out.insert(out.end(), w.begin(), w.end());
  return out;
}

Word reversed(const Word& w) {
  return Word(w.rbegin(), w.rend());
}

bool is_prefix(const Word& p, const Word& w) {
  return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

bool is_suffix(const Word& s, const Word& w) {
  return s.size() <= w.size() && std::equal(s.rbegin(), s.rend(), w.rbegin());
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) {
    return a.size() < b.size();
  }
  return a < b;
}

std::int64_t theta(const Word& w) {
  if (w.size() > 62) {
    throw std::overflow_error("theta: word longer than 62 letters");
  }
  const int alpha = static_cast<int>(w.size());
  std::int64_t value = 1 - (std::int64_t{1} << alpha);
  for (int l = 1; l <= alpha; ++l) {
    value += (std::int64_t{1} << (l - 1)) * w[static_cast<std::size_t>(l - 1)];
  }
  return value;
}

Word theta_inv(std::int64_t r, int alpha) {
  if (alpha < 0 || alpha > 62) {
    throw std::invalid_argument("theta_inv: alpha out of range");
  }
  if (r < 0 || r >= (std::int64_t{1} << alpha)) {
    throw std::invalid_argument("theta_inv: value out of [0, 2^alpha)");
  }
  Word w(static_cast<std::size_t>(alpha));
  for (int l = 0; l < alpha; ++l) {
    w[static_cast<std::size_t>(l)] = static_cast<Letter>(((r >> l) & 1) + 1);
  }
  return w;
}

SuffixSplit strip_common_suffix(const Word& u, const Word& w) {
  std::size_t k = 0;
  const std::size_t max_k = std::min(u.size(), w.size());
  while (k < max_k && u[u.size() - 1 - k] == w[w.size() - 1 - k]) {
    ++k;
  }
  SuffixSplit out;
  out.left = Word(u.begin(), u.end() - static_cast<std::ptrdiff_t>(k));
  out.right = Word(w.begin(), w.end() - static_cast<std::ptrdiff_t>(k));
  out.suffix = Word(u.end() - static_cast<std::ptrdiff_t>(k), u.end());
  return out;
}

std::vector<Word> enumerate_words(int alpha) {
  if (alpha < 0) {
    throw std::invalid_argument("enumerate_words: negative length");
  }
  if (alpha > 26) {
    throw std::invalid_argument("enumerate_words: length too large to materialize");
  }
  std::vector<Word> out;
  out.reserve(std::size_t{1} << alpha);
  Word w(static_cast<std::size_t>(alpha), Letter{1});
  while (true) {
    out.push_back(w);
    // odometer increment in lexicographic order, last position fastest
    int pos = alpha - 1;
    while (pos >= 0 && w[static_cast<std::size_t>(pos)] == 2) {
      w[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) {
      break;
    }
    w[static_cast<std::size_t>(pos)] = 2;
  }
  return out;
}

Word parse_word(const std::string& digits) {
  Word w;
  w.reserve(digits.size());
  for (char c : digits) {
    if (c == '1') {
      w.push_back(1);
    } else if (c == '2') {
      w.push_back(2);
    } else {
      throw std::invalid_argument("word digits must be 1 or 2");
    }
  }
  return w;
}

std::string word_digits(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (Letter l : w) {
    s.push_back(static_cast<char>('0' + l));
  }
  return s;
}

}  // namespace cu2
