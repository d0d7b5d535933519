// Bridges between engine values and the oracle representations.
#pragma once

#include <stdexcept>

#include "hopfkit/algebra.hpp"
#include "oracle.hpp"

namespace support
{

inline oracle::NCPoly to_ncpoly(const hopfkit::Element &x, const hopfkit::NameTable &names)
{
  oracle::NCPoly p;
  for (const auto &[w, c] : x.terms())
  {
    oracle::NCPoly::Word sw;
    for (auto l : w)
      sw.push_back(names[l]);
    for (const auto &t : c.terms())
    {
      if (t.eps != 0)
        throw std::logic_error("eps term in an oracle comparison");
      p.add(sw, t.hpow, t.coeff);
    }
  }
  return p;
}

inline oracle::NCPoly word_poly(const oracle::NCPoly::Word &w)
{
  oracle::NCPoly p;
  p.add(w, 0, 1);
  return p;
}

inline oracle::HSeries to_series(const hopfkit::Scalar &c, int order)
{
  oracle::HSeries s(order);
  for (const auto &t : c.terms())
  {
    if (t.eps != 0)
      throw std::logic_error("eps term in an oracle comparison");
    if (t.hpow <= order)
      s.c[static_cast<std::size_t>(t.hpow)] += t.coeff;
  }
  return s;
}

/// Image of an element of uh-sl2 in the fundamental representation.
inline oracle::Mat represent(const hopfkit::Element &x, const hopfkit::NameTable &names, const oracle::Fundamental &rho)
{
  oracle::Mat m(2, rho.order);
  for (const auto &[w, c] : x.terms())
  {
    oracle::Mat t = oracle::Mat::identity(2, rho.order);
    for (auto l : w)
      t = t * rho.gen(names[l]);
    m = m + t.scaled(to_series(c, rho.order));
  }
  return m;
}

inline oracle::Mat represent(const hopfkit::Tensor &x, const hopfkit::NameTable &names, const oracle::Fundamental &rho)
{
  const int dim = 1 << x.slots();
  oracle::Mat m(dim, rho.order);
  for (const auto &[ws, c] : x.terms())
  {
    oracle::Mat t = oracle::Mat::identity(1, rho.order);
    for (const auto &w : ws)
    {
      oracle::Mat f = oracle::Mat::identity(2, rho.order);
      for (auto l : w)
        f = f * rho.gen(names[l]);
      t = oracle::kron(t, f);
    }
    m = m + t.scaled(to_series(c, rho.order));
  }
  return m;
}

inline oracle::NCPoly::Word random_word(oracle::Lcg &rng, const std::vector<std::string> &letters, int max_len)
{
  oracle::NCPoly::Word w;
  const int len = rng.below(max_len + 1);
  for (int i = 0; i < len; ++i)
    w.push_back(letters[static_cast<std::size_t>(rng.below(static_cast<int>(letters.size())))]);
  return w;
}

inline hopfkit::Word to_word(const hopfkit::Algebra &a, const oracle::NCPoly::Word &w)
{
  hopfkit::Word out;
  for (const auto &s : w)
    out.push_back(a.letter(s));
  return out;
}

inline hopfkit::Element word_element(const hopfkit::Algebra &a, const oracle::NCPoly::Word &w)
{
  return hopfkit::Element::monomial(to_word(a, w), hopfkit::Scalar(1, a.truncation()));
}

} // namespace support
