#ifndef CU2_WORD_HPP
#define CU2_WORD_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace cu2 {

using Letter = std::uint8_t;

/// A finite word over the alphabet {1,2}. The empty word stands for the
/// monoid identity; a word (i_1,...,i_n) indexes the monomial s_{i_1}...s_{i_n}.
using Word = std::vector<Letter>;

/// Throws std::invalid_argument unless every letter is 1 or 2.
void validate_word(const Word& w);

Word concat(const Word& u, const Word& w);
Word reversed(const Word& w);

bool is_prefix(const Word& p, const Word& w);
bool is_suffix(const Word& s, const Word& w);

/// Shortlex: by length, then lexicographically with 1 < 2.
bool shortlex_less(const Word& a, const Word& b);

/// Positional-arithmetic value 1 - 2^a + sum_l 2^(l-1) w_l, a = |w|.
/// Bijects words of length a onto {0,...,2^a-1}. Requires |w| <= 62.
std::int64_t theta(const Word& w);

/// Inverse of theta on words of fixed length alpha: the unique w with
/// |w| = alpha and theta(w) = r. Requires 0 <= r < 2^alpha.
Word theta_inv(std::int64_t r, int alpha);

struct SuffixSplit {
  Word left;    // u with the common suffix removed
  Word right;   // w with the common suffix removed
  Word suffix;  // longest common suffix of u and w
};

/// Splits off the longest common suffix, so u = left . suffix and
/// w = right . suffix, with left/right ending in different letters
/// (or at least one of them empty).
SuffixSplit strip_common_suffix(const Word& u, const Word& w);

/// All 2^alpha words of length alpha in lexicographic order (1 < 2).
std::vector<Word> enumerate_words(int alpha);

/// "121" -> (1,2,1); "" -> empty word. Rejects other characters.
Word parse_word(const std::string& digits);

/// (1,2,1) -> "121"; empty word -> "".
std::string word_digits(const Word& w);

}  // namespace cu2

#endif
