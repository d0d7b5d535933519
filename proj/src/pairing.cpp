#include "hopfkit/pairing.hpp"

#include "hopfkit/hopf.hpp"

namespace hopfkit
{

std::vector<Word> words_up_to(int letters, int max_len)
{
  std::vector<Word> out{Word{}};
  std::size_t begin = 0;
  for (int len = 1; len <= max_len; ++len)
  {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (int l = 0; l < letters; ++l)
      {
        Word w = out[i];
        w.push_back(static_cast<Letter>(l));
        out.push_back(std::move(w));
      }
    begin = end;
  }
  return out;
}

PairingEngine::PairingEngine(const Algebra &enveloping, const Algebra &functions) : u_(enveloping), f_(functions)
{
  if (!u_.has_hopf() || !f_.has_hopf())
    throw Error(Errc::no_hopf_data, "the pairing needs Hopf data on both sides");
  if (u_.truncation().order != f_.truncation().order)
    throw Error(Errc::mixed_truncation, "paired algebras must share the truncation order");
  const std::map<std::pair<std::string, std::string>, int> table = {
      {{"J+", "b"}, 1}, {{"J-", "c"}, 1}, {{"J3", "a"}, 1}, {{"J3", "d"}, -1}};
  for (const char *g : {"J+", "J3", "J-"})
    u_.letter(g);
  for (const char *g : {"a", "b", "c", "d"})
    f_.letter(g);
  base_.assign(static_cast<std::size_t>(u_.size()), std::vector<Rational>(static_cast<std::size_t>(f_.size()), 0));
  for (const auto &[key, v] : table)
    base_[u_.letter(key.first)][f_.letter(key.second)] = v;
}

Scalar PairingEngine::compute(const Word &x, const Word &f, bool last) const
{
  const Truncation t = u_.truncation();
  if (x.empty())
    return f_.counit(f);
  if (f.empty())
    return u_.counit(x);
  if (x.size() == 1 && f.size() == 1)
    return Scalar(base_[x[0]][f[0]], t);

  auto &memo = last ? last_memo_ : first_memo_;
  const auto key = std::make_pair(x, f);
  {
    std::lock_guard lock(mutex_);
    if (auto it = memo.find(key); it != memo.end())
      return it->second;
  }

  Scalar out(t);
  if (f.size() >= 2)
  {
    // <x, f1 f2> = <Delta x, f1 (x) f2>
    const std::size_t cut = last ? f.size() - 1 : 1;
    const Word f1(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(cut));
    const Word f2(f.begin() + static_cast<std::ptrdiff_t>(cut), f.end());
    const Tensor dx = u_.coproduct(x);
    for (const auto &[slots, c] : dx.terms())
    {
      const Scalar left = compute(slots[0], f1, last);
      if (left.is_zero())
        continue;
      out += c * left * compute(slots[1], f2, last);
    }
  }
  else
  {
    // <x1 x2, f> = <x1 (x) x2, Delta f>
    const std::size_t cut = last ? x.size() - 1 : 1;
    const Word x1(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(cut));
    const Word x2(x.begin() + static_cast<std::ptrdiff_t>(cut), x.end());
    const Tensor df = f_.coproduct(f);
    for (const auto &[slots, c] : df.terms())
    {
      const Scalar left = compute(x1, slots[0], last);
      if (left.is_zero())
        continue;
      out += c * left * compute(x2, slots[1], last);
    }
  }

  std::lock_guard lock(mutex_);
  memo.emplace(key, out);
  return out;
}

Scalar PairingEngine::pair(const Word &x, const Word &f) const
{
  return compute(x, f, false);
}

Scalar PairingEngine::pair_last(const Word &x, const Word &f) const
{
  return compute(x, f, true);
}

Scalar PairingEngine::pair(const Element &x, const Element &f) const
{
  Scalar out(u_.truncation());
  for (const auto &[w, c] : x.terms())
    for (const auto &[v, d] : f.terms())
      out += c * d * pair(w, v);
  return out;
}

Scalar PairingEngine::pair_last(const Element &x, const Element &f) const
{
  Scalar out(u_.truncation());
  for (const auto &[w, c] : x.terms())
    for (const auto &[v, d] : f.terms())
      out += c * d * pair_last(w, v);
  return out;
}

Report verify_pairing(int degree_bound, const EngineConfig &config)
{
  const Algebra u(builtin("uh-sl2"), config);
  const Algebra f(builtin("fun-slh2"), config);
  const PairingEngine engine(u, f);
  const Truncation t = u.truncation();

  Report r;
  r.subject = "pairing uh-sl2 / fun-slh2";
  const auto u_words = words_up_to(u.size(), degree_bound);
  const auto f_words = words_up_to(f.size(), degree_bound);

  auto annihilates = [&](const std::string &id, const Algebra &side, const Residue &res, bool residue_is_function) {
    Check c{id, true, "", t.order, ""};
    std::vector<Element> variants{res.value};
    for (int g = 0; g < side.size(); ++g)
    {
      const Element x = side.generator(static_cast<Letter>(g));
      variants.push_back(multiply(x, res.value, config.degree_cap));
      variants.push_back(multiply(res.value, x, config.degree_cap));
    }
    const auto &others = residue_is_function ? u_words : f_words;
    for (const auto &v : variants)
    {
      for (const auto &w : others)
      {
        const Element other = Element::monomial(w, Scalar(1, t));
        const Scalar value = residue_is_function ? engine.pair(other, v) : engine.pair(v, other);
        if (!value.is_zero())
        {
          c.pass = false;
          c.witness = to_string(value);
          c.order = value.h_valuation();
          c.detail = "paired with " + render_word(w, residue_is_function ? u.names() : f.names()) + " against " +
                     side.render(v);
          break;
        }
      }
      if (!c.pass)
        break;
    }
    if (c.pass)
      c.detail = std::to_string(variants.size() * others.size()) + " pairs";
    r.add(std::move(c));
  };

  for (const auto &res : relation_residues(f))
    annihilates("P1[" + res.label + "]", f, res, true);
  for (const auto &res : relation_residues(u))
    annihilates("P2[" + res.label + "]", u, res, false);

  Check split{"P3.splitting", true, "", t.order, ""};
  for (const auto &x : u_words)
  {
    for (const auto &w : f_words)
    {
      const Scalar a = engine.pair(x, w);
      const Scalar b = engine.pair_last(x, w);
      if (!(a == b))
      {
        split.pass = false;
        split.witness = to_string(a - b);
        split.order = (a - b).h_valuation();
        split.detail = "<" + render_word(x, u.names()) + ", " + render_word(w, f.names()) + ">";
        break;
      }
    }
    if (!split.pass)
      break;
  }
  if (split.pass)
    split.detail = std::to_string(u_words.size() * f_words.size()) + " pairs";
  r.add(std::move(split));
  return r;
}

} // namespace hopfkit
