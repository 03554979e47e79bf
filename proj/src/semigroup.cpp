#include "semigroup.hpp"

#include <stdexcept>

namespace cu2 {

CuElement CuElement::diamond() {
  CuElement t;
  t.diamond_ = true;
  return t;
}

CuElement CuElement::pair(Word i, Word j) {
  validate_word(i);
  validate_word(j);
  CuElement t;
  t.i_ = std::move(i);
  t.j_ = std::move(j);
  return t;
}

CuElement CuElement::gen(Letter k) {
  return pair(Word{k}, Word{});
}

CuElement CuElement::gen_star(Letter k) {
  return pair(Word{}, Word{k});
}

const Word& CuElement::left() const {
  if (diamond_) {
    throw std::invalid_argument("Diamond has no canonical words");
  }
  return i_;
}

const Word& CuElement::right() const {
  if (diamond_) {
    throw std::invalid_argument("Diamond has no canonical words");
  }
  return j_;
}

bool CuElement::operator<(const CuElement& o) const {
  if (diamond_ != o.diamond_) {
    return diamond_;
  }
  if (diamond_) {
    return false;
  }
  const std::size_t len = i_.size() + j_.size();
  const std::size_t olen = o.i_.size() + o.j_.size();
  if (len != olen) {
    return len < olen;
  }
  if (i_ != o.i_) {
    return shortlex_less(i_, o.i_);
  }
  return shortlex_less(j_, o.j_);
}

std::string CuElement::to_string() const {
  if (diamond_) {
    return "diamond";
  }
  if (i_.empty() && j_.empty()) {
    return "e";
  }
  auto word_part = [](const Word& w) {
    std::string s = "s(";
    for (std::size_t l = 0; l < w.size(); ++l) {
      if (l > 0) {
        s.push_back(',');
      }
      s.push_back(static_cast<char>('0' + w[l]));
    }
    s.push_back(')');
    return s;
  };
  std::string s;
  if (!i_.empty()) {
    s += word_part(i_);
  }
  if (!j_.empty()) {
    if (!s.empty()) {
      s.push_back(' ');
    }
    s += word_part(j_);
    s.push_back('*');
  }
  return s;
}

CuElement mul(const CuElement& u, const CuElement& v) {
  if (u.is_diamond() || v.is_diamond()) {
    return CuElement::diamond();
  }
  // u v = s_i (s_j* s_k) s_l*; the middle collapses iff one of j, k is a
  // prefix of the other.
  const Word& j = u.right();
  const Word& k = v.left();
  if (is_prefix(j, k)) {
    // k = j p: s_j* s_k = s_p
    Word p(k.begin() + static_cast<std::ptrdiff_t>(j.size()), k.end());
    return CuElement::pair(concat(u.left(), p), v.right());
  }
  if (is_prefix(k, j)) {
    // j = k p: s_j* s_k = s_p*
    Word p(j.begin() + static_cast<std::ptrdiff_t>(k.size()), j.end());
    return CuElement::pair(u.left(), concat(v.right(), p));
  }
  return CuElement::diamond();
}

CuElement star(const CuElement& u) {
  if (u.is_diamond()) {
    return CuElement::diamond();
  }
  return CuElement::pair(u.right(), u.left());
}

int length(const CuElement& t) {
  if (t.is_diamond()) {
    throw std::invalid_argument("length: Diamond rejected");
  }
  return static_cast<int>(t.left().size() + t.right().size());
}

std::pair<CuElement, Word> symmetric_core(const CuElement& t) {
  if (t.is_diamond()) {
    throw std::invalid_argument("symmetric_core: Diamond rejected");
  }
  SuffixSplit split = strip_common_suffix(t.left(), t.right());
  return {CuElement::pair(std::move(split.left), std::move(split.right)),
          std::move(split.suffix)};
}

bool is_without_symmetric_core(const CuElement& t) {
  return symmetric_core(t).second.empty();
}

std::vector<CuElement> expansions(const CuElement& v, int depth) {
  if (v.is_diamond()) {
    throw std::invalid_argument("expansions: Diamond rejected");
  }
  if (depth < 0) {
    throw std::invalid_argument("expansions: negative depth");
  }
  std::vector<CuElement> out;
  out.reserve((std::size_t{2} << depth) - 1);
  for (int l = 0; l <= depth; ++l) {
    for (const Word& k : enumerate_words(l)) {
      out.push_back(CuElement::pair(concat(v.left(), k), concat(v.right(), k)));
    }
  }
  return out;
}

std::vector<CuElement> enumerate_elements(int max_length) {
  if (max_length < 0) {
    throw std::invalid_argument("enumerate_elements: negative length");
  }
  std::vector<CuElement> out;
  for (int n = 0; n <= max_length; ++n) {
    for (int alpha = 0; alpha <= n; ++alpha) {
      for (const Word& i : enumerate_words(alpha)) {
        for (const Word& j : enumerate_words(n - alpha)) {
          out.push_back(CuElement::pair(i, j));
        }
      }
    }
  }
  return out;
}

}  // namespace cu2
