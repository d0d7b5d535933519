#pragma once

#include <map>
#include <mutex>

#include "hopfkit/algebra.hpp"

namespace hopfkit
{

/// Hopf pairing between U_h(sl2) and Fun(SL_h(2)) from the generator
/// matrix T = ((a, b), (c, d)):
///   <J+, T> = E12, <J-, T> = E21, <J3, T> = diag(1, -1),
/// extended by <x, fg> = <Delta x, f (x) g> and <xy, f> = <x (x) y, Delta f>.
class PairingEngine
{
public:
  PairingEngine(const Algebra &enveloping, const Algebra &functions);

  const Algebra &enveloping() const noexcept { return u_; }
  const Algebra &functions() const noexcept { return f_; }

  /// Splits the function word at its first letter when it has length >= 2,
  /// otherwise the enveloping word at its first letter.  Memoized.
  Scalar pair(const Word &x, const Word &f) const;
  /// Same pairing, splitting at the last letter instead.
  Scalar pair_last(const Word &x, const Word &f) const;

  Scalar pair(const Element &x, const Element &f) const;
  Scalar pair_last(const Element &x, const Element &f) const;

  Rational base(Letter x, Letter f) const { return base_[x][f]; }

private:
  Scalar compute(const Word &x, const Word &f, bool last) const;

  const Algebra &u_;
  const Algebra &f_;
  std::vector<std::vector<Rational>> base_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<Word, Word>, Scalar> first_memo_;
  mutable std::map<std::pair<Word, Word>, Scalar> last_memo_;
};

/// P1: <x, r> = 0 for every relation residue r of the function algebra
/// (and r multiplied by a generator on either side) and every enveloping
/// word x up to degree_bound.  P2: the same with the roles exchanged.
/// P3: first- and last-letter splitting agree on all word pairs up to
/// degree_bound.
Report verify_pairing(int degree_bound = 3, const EngineConfig &config = {});

/// All words over `letters` generators with length <= max_len, shortlex.
std::vector<Word> words_up_to(int letters, int max_len);

} // namespace hopfkit
