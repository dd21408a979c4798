#include "salemparry/expansion.hpp"

#include <numeric>
#include <unordered_map>

#include "salemparry/real_algebraic.hpp"

namespace salem {

const Integer& PeriodicWord::at(std::size_t i) const {
  if (i < prefix.size()) return prefix[i];
  return period[(i - prefix.size()) % period.size()];
}

PeriodicWord PeriodicWord::canonical() const {
  if (period.empty()) throw DomainError("periodic word needs a nonempty period");
  PeriodicWord w = *this;
  const std::size_t n = w.period.size();
  for (std::size_t q = 1; q <= n; ++q) {
    if (n % q) continue;
    bool repeats = true;
    for (std::size_t i = q; i < n && repeats; ++i) repeats = w.period[i] == w.period[i - q];
    if (repeats) {
      w.period.resize(q);
      break;
    }
  }
  while (!w.prefix.empty() && w.prefix.back() == w.period.back()) {
    w.period.insert(w.period.begin(), w.period.back());
    w.period.pop_back();
    w.prefix.pop_back();
  }
  return w;
}

int compare_words(const PeriodicWord& a, std::size_t shift_a, const PeriodicWord& b, std::size_t shift_b) {
  // Both suffixes are eventually periodic; they agree everywhere once they
  // agree past both preperiods for a common multiple of the periods.
  std::size_t pa = a.period.size(), pb = b.period.size();
  std::size_t ma = a.prefix.size() > shift_a ? a.prefix.size() - shift_a : 0;
  std::size_t mb = b.prefix.size() > shift_b ? b.prefix.size() - shift_b : 0;
  std::size_t l = pa / std::gcd(pa, pb) * pb;
  std::size_t n = std::max(ma, mb) + l;
  for (std::size_t i = 0; i < n; ++i) {
    int c = cmp(a.at(shift_a + i), b.at(shift_b + i));
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

bool check_self_lex(const PeriodicWord& word) {
  const std::size_t n = word.prefix.size() + word.period.size();
  for (std::size_t s = 1; s < n; ++s)
    if (compare_words(word, s, word, 0) >= 0) return false;
  return true;
}

bool is_admissible(const std::vector<Integer>& digits, const PeriodicWord& one) {
  bool one_is_zero = true;
  for (std::size_t i = 0; i < one.prefix.size() + one.period.size() && one_is_zero; ++i) one_is_zero = one.at(i) == 0;
  for (std::size_t s = 0; s < digits.size(); ++s) {
    int c = 0;
    std::size_t i = 0;
    for (; s + i < digits.size(); ++i) {
      c = cmp(digits[s + i], one.at(i));
      if (c != 0) break;
    }
    if (c > 0) return false;
    if (c == 0) {
      // digits exhausted: compare 0^inf with the suffix of one from i.
      bool tail_zero = true;
      std::size_t n = (one.prefix.size() > i ? one.prefix.size() - i : 0) + one.period.size();
      for (std::size_t j = 0; j < n && tail_zero; ++j) tail_zero = one.at(i + j) == 0;
      if (tail_zero || one_is_zero) return false;
    }
  }
  return true;
}

PeriodicWord ExpansionRecord::word() const {
  if (status != ExpansionStatus::periodic) throw DomainError("expansion did not become periodic");
  PeriodicWord w;
  w.prefix.assign(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(m));
  w.period.assign(digits.begin() + static_cast<std::ptrdiff_t>(m), digits.begin() + static_cast<std::ptrdiff_t>(m + p));
  return w;
}

namespace {

struct VectorHash {
  std::size_t operator()(const std::vector<Integer>& v) const {
    std::size_t h = v.size();
    for (const auto& z : v) h = h * 1000003u ^ hash_value(z);
    return h;
  }
};

class Expander {
 public:
  explicit Expander(const IntPolynomial& p) : p_(p), beta_(largest_root(p)), d_(static_cast<std::size_t>(p.degree())) {}

  /// Advances the state, returning the emitted digit.
  Integer step(IntPolynomial& state) const {
    IntPolynomial shifted = remainder_monic(state.shifted(1), p_);
    Integer digit = alg_ceil(to_rational(shifted), beta_) - 1;
    state = shifted - IntPolynomial::constant(digit);
    return digit;
  }

  std::vector<Integer> key(const IntPolynomial& s) const {
    std::vector<Integer> k(d_);
    for (std::size_t i = 0; i < s.size(); ++i) k[i] = s.coeffs()[i];
    return k;
  }

 private:
  static RealAlgebraic largest_root(const IntPolynomial& p) {
    if (!p.is_monic() || p.degree() < 1) throw DomainError("expansion needs a monic polynomial");
    auto roots = isolate_real_roots(p);
    if (roots.empty() || compare(roots.back(), Rational(1)) <= 0) throw DomainError("polynomial has no real root > 1");
    return roots.back();
  }

  IntPolynomial p_;
  RealAlgebraic beta_;
  std::size_t d_;
};

}  // namespace

ExpansionRecord expand_one(const IntPolynomial& p, std::size_t cap) {
  Expander ex(p);
  ExpansionRecord rec;
  std::unordered_map<std::vector<Integer>, std::size_t, VectorHash> seen;
  IntPolynomial state = int_poly({1});
  seen.emplace(ex.key(state), 0);
  while (rec.states_visited < cap) {
    rec.digits.push_back(ex.step(state));
    ++rec.states_visited;
    auto [it, inserted] = seen.emplace(ex.key(state), rec.digits.size());
    if (!inserted) {
      rec.m = it->second;
      rec.p = rec.digits.size() - it->second;
      rec.status = ExpansionStatus::periodic;
      PeriodicWord w = rec.word().canonical();
      rec.m = w.prefix.size();
      rec.p = w.period.size();
      rec.digits.resize(rec.m + rec.p);
      return rec;
    }
  }
  return rec;
}

std::vector<IntPolynomial> expansion_states(const IntPolynomial& p, std::size_t n) {
  Expander ex(p);
  std::vector<IntPolynomial> states{int_poly({1})};
  IntPolynomial state = states.back();
  for (std::size_t i = 0; i < n; ++i) {
    ex.step(state);
    states.push_back(state);
  }
  return states;
}

bool conservation_holds(const IntPolynomial& p, const std::vector<Integer>& digits, const IntPolynomial& state_n) {
  const std::size_t n = digits.size();
  IntPolynomial lhs = IntPolynomial::monomial(Integer(1), n);
  for (std::size_t i = 1; i <= n; ++i) lhs -= IntPolynomial::monomial(digits[i - 1], n - i);
  lhs -= state_n;
  return remainder_monic(lhs, p).is_zero();
}

std::string to_string(ExpansionStatus s) { return s == ExpansionStatus::periodic ? "periodic" : "cap-exceeded"; }

}  // namespace salem
