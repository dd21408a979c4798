#ifndef SALEMPARRY_EXPANSION_HPP
#define SALEMPARRY_EXPANSION_HPP

#include <string>
#include <vector>

#include "salemparry/polynomial.hpp"

namespace salem {

/// Eventually periodic word prefix (period)^inf.
struct PeriodicWord {
  std::vector<Integer> prefix;
  std::vector<Integer> period;  // nonempty

  std::size_t preperiod() const { return prefix.size(); }
  std::size_t period_length() const { return period.size(); }
  const Integer& at(std::size_t i) const;

  /// Minimal preperiod and period describing the same infinite word.
  PeriodicWord canonical() const;

  friend bool operator==(const PeriodicWord& a, const PeriodicWord& b) {
    return a.prefix == b.prefix && a.period == b.period;
  }
};

/// Lexicographic comparison of the infinite words: -1, 0 or +1.
int compare_words(const PeriodicWord& a, std::size_t shift_a, const PeriodicWord& b, std::size_t shift_b);

/// Shifts n = 1 .. m+p-1 of the word as given (not canonicalized) are
/// strictly below the word; later shifts repeat these, except shift m+p
/// of a purely periodic word, which is the word itself.
bool check_self_lex(const PeriodicWord& word);

/// Every shift of digits 0^inf is strictly below the expansion of one.
bool is_admissible(const std::vector<Integer>& digits, const PeriodicWord& one);

enum class ExpansionStatus { periodic, cap_exceeded };

struct ExpansionRecord {
  std::vector<Integer> digits;  // c_1 c_2 ... as computed
  std::size_t m = 0;            // preperiod
  std::size_t p = 0;            // period (0 when the cap was hit)
  ExpansionStatus status = ExpansionStatus::cap_exceeded;
  std::size_t states_visited = 0;

  /// The periodic word (requires status == periodic).
  PeriodicWord word() const;
};

/*
  Expansion of one in base beta, the largest real root of the monic
  polynomial p, with the left-limit convention: when beta * state is an
  integer k the digit is k - 1 and the state becomes 1. States are kept
  exactly in the power basis of Z[beta].
  Throws DomainError unless p is monic with a real root > 1.
*/
ExpansionRecord expand_one(const IntPolynomial& p, std::size_t cap);

/// State polynomials S_0 = 1, S_1, ..., S_n of the same orbit.
std::vector<IntPolynomial> expansion_states(const IntPolynomial& p, std::size_t n);

/// Checks x^N = sum c_i x^(N-i) + S_N modulo p, i.e.
/// 1 = sum_{i<=N} c_i beta^-i + beta^-N T^N(1).
bool conservation_holds(const IntPolynomial& p, const std::vector<Integer>& digits, const IntPolynomial& state_n);

std::string to_string(ExpansionStatus s);

}  // namespace salem

#endif
