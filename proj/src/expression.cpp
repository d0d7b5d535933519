#include "hopfkit/expression.hpp"

#include <algorithm>
#include <cctype>

namespace hopfkit
{

int SymbolTable::index_of(std::string_view name) const
{
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i] == name)
      return static_cast<int>(i);
  if (auto it = aliases.find(std::string(name)); it != aliases.end())
    return index_of(it->second);
  return -1;
}

namespace
{

const std::vector<std::string> kFunctions = {"exp", "sinh", "cosh", "sinhc", "inv", "divh"};

bool is_function(std::string_view s)
{
  return std::find(kFunctions.begin(), kFunctions.end(), s) != kFunctions.end();
}

enum class Tok
{
  number,
  generator,
  ident,
  plus,
  minus,
  star,
  slash,
  caret,
  at,
  lparen,
  rparen,
  comma,
  end,
};

struct Token
{
  Tok kind;
  std::string text;
  int column;
};

class Lexer
{
public:
  Lexer(std::string_view src, const SymbolTable &symbols, int line, int column_offset)
      : src_(src), symbols_(symbols), line_(line), offset_(column_offset)
  {
  }

  std::vector<Token> run()
  {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src_.size())
    {
      const char ch = src_[i];
      const int col = static_cast<int>(i) + 1 + offset_;
      if (std::isspace(static_cast<unsigned char>(ch)))
      {
        ++i;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(ch)))
      {
        std::size_t j = i;
        while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j])))
          ++j;
        out.push_back({Tok::number, std::string(src_.substr(i, j - i)), col});
        i = j;
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_')
      {
        std::size_t ident = i;
        while (ident < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[ident])) || src_[ident] == '_'))
          ++ident;
        const std::size_t gen = longest_generator(i);
        if (gen > 0 && i + gen >= ident)
        {
          out.push_back({Tok::generator, std::string(src_.substr(i, gen)), col});
          i += gen;
        }
        else
        {
          out.push_back({Tok::ident, std::string(src_.substr(i, ident - i)), col});
          i = ident;
        }
        continue;
      }
      Tok kind;
      switch (ch)
      {
      case '+': kind = Tok::plus; break;
      case '-': kind = Tok::minus; break;
      case '*': kind = Tok::star; break;
      case '/': kind = Tok::slash; break;
      case '^': kind = Tok::caret; break;
      case '@': kind = Tok::at; break;
      case '(': kind = Tok::lparen; break;
      case ')': kind = Tok::rparen; break;
      case ',': kind = Tok::comma; break;
      default:
        throw ParseError(std::string("unexpected character '") + ch + "'", line_, col);
      }
      out.push_back({kind, std::string(1, ch), col});
      ++i;
    }
    out.push_back({Tok::end, "", static_cast<int>(src_.size()) + 1 + offset_});
    return out;
  }

private:
  std::size_t longest_generator(std::size_t at) const
  {
    std::size_t best = 0;
    auto consider = [&](const std::string &name) {
      if (name.size() > best && src_.substr(at, name.size()) == name)
        best = name.size();
    };
    for (const auto &g : symbols_.generators)
      consider(g);
    for (const auto &[alias, target] : symbols_.aliases)
      consider(alias);
    return best;
  }

  std::string_view src_;
  const SymbolTable &symbols_;
  int line_;
  int offset_;
};

Expr make(ExprNode::Kind kind, std::vector<Expr> args, int line, int col)
{
  auto n = std::make_shared<ExprNode>();
  n->kind = kind;
  n->args = std::move(args);
  n->line = line;
  n->column = col;
  return n;
}

class Parser
{
public:
  Parser(std::vector<Token> toks, const SymbolTable &symbols, int line)
      : toks_(std::move(toks)), symbols_(symbols), line_(line)
  {
  }

  Expr parse()
  {
    Expr e = expression(0);
    if (peek().kind != Tok::end)
      fail("expected end of expression", peek());
    return e;
  }

private:
  static int left_power(Tok t)
  {
    switch (t)
    {
    case Tok::plus:
    case Tok::minus: return 10;
    case Tok::at: return 30;
    case Tok::star:
    case Tok::slash: return 40;
    case Tok::caret: return 50;
    default: return 0;
    }
  }

  static bool starts_operand(Tok t)
  {
    return t == Tok::number || t == Tok::generator || t == Tok::ident || t == Tok::lparen;
  }

  const Token &peek() const { return toks_[pos_]; }
  const Token &next() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string &msg, const Token &at) const
  {
    throw ParseError(msg + (at.kind == Tok::end ? " at end of input" : " near '" + at.text + "'"), line_,
                     at.column);
  }

  void expect(Tok kind, const char *what)
  {
    if (peek().kind != kind)
      fail(std::string("expected ") + what, peek());
    ++pos_;
  }

  Expr expression(int rbp)
  {
    Expr left = prefix(next());
    for (;;)
    {
      const Token &t = peek();
      if (starts_operand(t.kind))
        fail("implicit multiplication is not allowed; write '*'", t);
      if (rbp >= left_power(t.kind))
        break;
      left = infix(next(), left);
    }
    return left;
  }

  Expr prefix(const Token &t)
  {
    switch (t.kind)
    {
    case Tok::number: {
      auto n = std::make_shared<ExprNode>();
      n->kind = ExprNode::Kind::number;
      n->number = Rational(mpz_class(t.text));
      n->line = line_;
      n->column = t.column;
      return n;
    }
    case Tok::generator: {
      auto n = std::make_shared<ExprNode>();
      n->kind = ExprNode::Kind::generator;
      const int idx = symbols_.index_of(t.text);
      n->name = symbols_.generators[idx];
      n->line = line_;
      n->column = t.column;
      return n;
    }
    case Tok::ident: return identifier(t);
    case Tok::lparen: {
      Expr e = expression(0);
      expect(Tok::rparen, "')'");
      return e;
    }
    case Tok::minus: return make(ExprNode::Kind::neg, {expression(20)}, line_, t.column);
    case Tok::plus: return expression(20);
    default: fail("expected an operand", t);
    }
  }

  Expr identifier(const Token &t)
  {
    if (t.text == "h")
      return make(ExprNode::Kind::param_h, {}, line_, t.column);
    if (t.text == "eps" || t.text == "e")
      return make(ExprNode::Kind::param_eps, {}, line_, t.column);
    if (!is_function(t.text))
      throw Error(Errc::unknown_symbol, "'" + t.text + "' at line " + std::to_string(line_) + ", column " +
                                            std::to_string(t.column));
    expect(Tok::lparen, "'(' after function name");
    std::vector<Expr> args{expression(0)};
    if (t.text == "divh")
    {
      expect(Tok::comma, "',' and a power of h in divh(expr, k)");
      const Token &k = next();
      if (k.kind != Tok::number || mpz_class(k.text) == 0)
        fail("divh needs a positive integer power", k);
      auto n = std::make_shared<ExprNode>();
      n->kind = ExprNode::Kind::number;
      n->number = Rational(mpz_class(k.text));
      n->line = line_;
      n->column = k.column;
      args.push_back(n);
    }
    expect(Tok::rparen, "')'");
    auto n = make(ExprNode::Kind::call, std::move(args), line_, t.column);
    std::const_pointer_cast<ExprNode>(n)->name = t.text;
    return n;
  }

  Expr infix(const Token &t, Expr left)
  {
    switch (t.kind)
    {
    case Tok::plus: return make(ExprNode::Kind::add, {left, expression(10)}, line_, t.column);
    case Tok::minus: return make(ExprNode::Kind::sub, {left, expression(10)}, line_, t.column);
    case Tok::at: return make(ExprNode::Kind::tensor, {left, expression(30)}, line_, t.column);
    case Tok::star: return make(ExprNode::Kind::mul, {left, expression(40)}, line_, t.column);
    case Tok::slash: return make(ExprNode::Kind::div, {left, expression(40)}, line_, t.column);
    case Tok::caret: {
      bool negative = false;
      if (peek().kind == Tok::minus)
      {
        negative = true;
        ++pos_;
      }
      const Token &k = next();
      if (k.kind != Tok::number)
        fail("expected an integer exponent", k);
      auto n = std::const_pointer_cast<ExprNode>(make(ExprNode::Kind::pow, {left}, line_, t.column));
      n->exponent = static_cast<int>(mpz_class(k.text).get_si()) * (negative ? -1 : 1);
      return n;
    }
    default: fail("unexpected token", t);
    }
  }

  std::vector<Token> toks_;
  const SymbolTable &symbols_;
  int line_;
  std::size_t pos_ = 0;
};

int precedence(const Expr &e)
{
  switch (e->kind)
  {
  case ExprNode::Kind::add:
  case ExprNode::Kind::sub: return 10;
  case ExprNode::Kind::neg: return 20;
  case ExprNode::Kind::tensor: return 30;
  case ExprNode::Kind::mul:
  case ExprNode::Kind::div: return 40;
  case ExprNode::Kind::pow: return 50;
  default: return 60;
  }
}

std::string wrap(const Expr &e, bool paren)
{
  return paren ? "(" + to_string(e) + ")" : to_string(e);
}

} // namespace

Expr parse_expr(std::string_view src, const SymbolTable &symbols, int line, int column_offset)
{
  Lexer lex(src, symbols, line, column_offset);
  Parser p(lex.run(), symbols, line);
  return p.parse();
}

std::string to_string(const Expr &e)
{
  using K = ExprNode::Kind;
  const int prec = precedence(e);
  switch (e->kind)
  {
  case K::number: return e->number.get_str();
  case K::param_h: return "h";
  case K::param_eps: return "eps";
  case K::generator: return e->name;
  case K::neg: return "-" + wrap(e->args[0], precedence(e->args[0]) < 20);
  case K::add:
  case K::sub: {
    const Expr &r = e->args[1];
    return to_string(e->args[0]) + (e->kind == K::add ? " + " : " - ") + wrap(r, precedence(r) <= 10);
  }
  case K::tensor:
    return wrap(e->args[0], precedence(e->args[0]) < prec) + " @ " +
           wrap(e->args[1], precedence(e->args[1]) <= prec);
  case K::mul:
  case K::div:
    return wrap(e->args[0], precedence(e->args[0]) < prec) + (e->kind == K::mul ? "*" : "/") +
           wrap(e->args[1], precedence(e->args[1]) <= prec);
  case K::pow: return wrap(e->args[0], precedence(e->args[0]) < 60) + "^" + std::to_string(e->exponent);
  case K::call: {
    std::string out = e->name + "(" + to_string(e->args[0]);
    for (std::size_t i = 1; i < e->args.size(); ++i)
      out += ", " + to_string(e->args[i]);
    return out + ")";
  }
  }
  return "?";
}

bool same_expr(const Expr &a, const Expr &b)
{
  if (!a || !b)
    return !a && !b;
  return to_string(a) == to_string(b);
}

std::vector<std::pair<bool, Expr>> summands(const Expr &e)
{
  using K = ExprNode::Kind;
  std::vector<std::pair<bool, Expr>> out;
  auto walk = [&](auto &&self, const Expr &x, bool positive) -> void {
    if (x->kind == K::add || x->kind == K::sub)
    {
      self(self, x->args[0], positive);
      self(self, x->args[1], x->kind == K::add ? positive : !positive);
    }
    else if (x->kind == K::neg)
      self(self, x->args[0], !positive);
    else
      out.emplace_back(positive, x);
  };
  walk(walk, e, true);
  return out;
}

Expr rebuild_sum(const std::vector<std::pair<bool, Expr>> &terms)
{
  using K = ExprNode::Kind;
  if (terms.empty())
  {
    auto n = std::make_shared<ExprNode>();
    n->kind = K::number;
    n->number = 0;
    return n;
  }
  Expr acc = terms[0].first ? terms[0].second : make(K::neg, {terms[0].second}, 1, 1);
  for (std::size_t i = 1; i < terms.size(); ++i)
    acc = make(terms[i].first ? K::add : K::sub, {acc, terms[i].second}, 1, 1);
  return acc;
}

Element as_element(const Value &v, Truncation t)
{
  if (auto s = std::get_if<Scalar>(&v))
    return Element::scalar(s->is_unset() ? Scalar(t) : *s);
  if (auto e = std::get_if<Element>(&v))
    return *e;
  throw Error(Errc::slot_mismatch, "expected an algebra element, got a tensor");
}

Tensor as_tensor(const Value &v, int slots, Truncation t)
{
  if (auto s = std::get_if<Scalar>(&v))
  {
    Tensor r(slots, t);
    r.add_term(std::vector<Word>(slots), s->is_unset() ? Scalar(t) : *s);
    return r;
  }
  if (auto x = std::get_if<Tensor>(&v))
  {
    if (x->slots() != slots)
      throw Error(Errc::slot_mismatch, "expected " + std::to_string(slots) + " slots, got " +
                                           std::to_string(x->slots()));
    return *x;
  }
  throw Error(Errc::slot_mismatch, "expected a tensor, got an algebra element");
}

Scalar as_scalar(const Value &v)
{
  if (auto s = std::get_if<Scalar>(&v))
    return *s;
  throw Error(Errc::slot_mismatch, "expected a scalar");
}

namespace
{

class Evaluator
{
public:
  Evaluator(const SymbolTable &symbols, int degree_cap) : symbols_(symbols), cap_(degree_cap) {}

  Value eval(const Expr &e, Truncation t)
  {
    using K = ExprNode::Kind;
    switch (e->kind)
    {
    case K::number: return Scalar(e->number, t);
    case K::param_h: return Scalar::h(t);
    case K::param_eps: return Scalar::monomial(1, 0, 1, t);
    case K::generator: {
      const int idx = symbols_.index_of(e->name);
      if (idx < 0)
        throw Error(Errc::unknown_symbol, "'" + e->name + "' at line " + std::to_string(e->line) + ", column " +
                                              std::to_string(e->column));
      return Element::generator(static_cast<Letter>(idx), t);
    }
    case K::neg: return negate(eval(e->args[0], t));
    case K::add: return add(eval(e->args[0], t), eval(e->args[1], t), false);
    case K::sub: return add(eval(e->args[0], t), eval(e->args[1], t), true);
    case K::mul: return mul(eval(e->args[0], t), eval(e->args[1], t));
    case K::div: return divide(e, eval(e->args[0], t), eval(e->args[1], t));
    case K::tensor: return join(eval(e->args[0], t), eval(e->args[1], t));
    case K::pow: return power(e, t);
    case K::call: return call(e, t);
    }
    throw Error(Errc::parse_error, "unknown node");
  }

private:
  static Value negate(Value v)
  {
    return std::visit([](auto &x) -> Value { return -x; }, v);
  }

  static int slots_of(const Value &v)
  {
    if (auto x = std::get_if<Tensor>(&v))
      return x->slots();
    return std::holds_alternative<Element>(v) ? 1 : 0;
  }

  static Truncation trunc_of(const Value &v)
  {
    return std::visit([](const auto &x) { return x.truncation(); }, v);
  }

  Value add(const Value &a, const Value &b, bool subtract)
  {
    const int sa = slots_of(a);
    const int sb = slots_of(b);
    const Truncation t = trunc_of(a);
    const int s = std::max(sa, sb);
    if (sa != 0 && sb != 0 && sa != sb)
      throw Error(Errc::slot_mismatch, "cannot add values with " + std::to_string(sa) + " and " +
                                           std::to_string(sb) + " slots");
    if (s == 0)
      return subtract ? as_scalar(a) - as_scalar(b) : as_scalar(a) + as_scalar(b);
    if (s == 1)
      return subtract ? as_element(a, t) - as_element(b, t) : as_element(a, t) + as_element(b, t);
    return subtract ? as_tensor(a, s, t) - as_tensor(b, s, t) : as_tensor(a, s, t) + as_tensor(b, s, t);
  }

  Value mul(const Value &a, const Value &b)
  {
    if (auto s = std::get_if<Scalar>(&a))
      return std::visit([&](auto x) -> Value { return *s * x; }, b);
    if (auto s = std::get_if<Scalar>(&b))
      return std::visit([&](auto x) -> Value { return x * *s; }, a);
    if (slots_of(a) != slots_of(b))
      throw Error(Errc::slot_mismatch, "cannot multiply an element with a tensor");
    if (auto x = std::get_if<Element>(&a))
      return multiply(*x, std::get<Element>(b), cap_);
    return multiply(std::get<Tensor>(a), std::get<Tensor>(b), cap_);
  }

  static Value divide(const Expr &node, const Value &a, const Value &b)
  {
    const Scalar *d = std::get_if<Scalar>(&b);
    if (d == nullptr || d->has_eps() || d->h_valuation() != 0 || !d->is_rational() || d->is_zero())
      throw ParseError("only division by a nonzero rational constant is allowed; "
                       "divide by h with divh(expr, k), e.g. divh(sinh(h*Jp),1)*Jm",
                       node->line, node->column);
    const Rational q = 1 / d->constant_term();
    return std::visit([&](auto x) -> Value { return x * q; }, a);
  }

  static Value join(const Value &a, const Value &b)
  {
    const Truncation t = trunc_of(a);
    auto pieces = [&](const Value &v) -> Tensor {
      if (auto x = std::get_if<Tensor>(&v))
        return *x;
      return embed(as_element(v, t), 0, 1);
    };
    const Tensor x = pieces(a);
    const Tensor y = pieces(b);
    Tensor r(x.slots() + y.slots(), t);
    for (const auto &[kx, cx] : x.terms())
      for (const auto &[ky, cy] : y.terms())
      {
        auto key = kx;
        key.insert(key.end(), ky.begin(), ky.end());
        r.add_term(std::move(key), cx * cy);
      }
    return r;
  }

  Value power(const Expr &e, Truncation t)
  {
    const Value base = eval(e->args[0], t);
    const int n = e->exponent;
    if (n < 0)
    {
      const Scalar *s = std::get_if<Scalar>(&base);
      if (s == nullptr || s->terms().size() != 1 || s->terms()[0].hpow != 0 || s->terms()[0].coeff != 1)
        throw ParseError("negative exponents are only allowed on eps", e->line, e->column);
      return Scalar::monomial(1, 0, s->terms()[0].eps * n, t);
    }
    Value acc = Scalar(1, t);
    for (int i = 0; i < n; ++i)
      acc = mul(acc, base);
    return acc;
  }

  Value call(const Expr &e, Truncation t)
  {
    const std::string &f = e->name;
    if (f == "divh")
    {
      const int k = static_cast<int>(e->args[1]->number.get_num().get_si());
      const Value inner = eval(e->args[0], {t.order + k, t.eps_bound});
      return std::visit(
          [&](const auto &x) -> Value {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Scalar>)
              return exact_divide_h(x, k).truncated_to(t.order);
            else
              return with_truncation(exact_divide_h(x, k), t);
          },
          inner);
    }
    const Value arg = eval(e->args[0], t);
    if (f == "inv")
      return std::visit(
          [&](const auto &x) -> Value {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Scalar>)
              return series_inverse(x);
            else
              return series_inverse(x, cap_);
          },
          arg);
    SeriesKind kind = SeriesKind::exp;
    if (f == "sinh")
      kind = SeriesKind::sinh;
    else if (f == "cosh")
      kind = SeriesKind::cosh;
    else if (f == "sinhc")
      kind = SeriesKind::sinhc;
    return std::visit(
        [&](const auto &x) -> Value {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, Scalar>)
            return apply_series(kind, x);
          else
            return apply_series(kind, x, cap_);
        },
        arg);
  }

  const SymbolTable &symbols_;
  int cap_;
};

} // namespace

Value evaluate(const Expr &e, const SymbolTable &symbols, const EvalOptions &opts)
{
  Evaluator ev(symbols, opts.degree_cap);
  return ev.eval(e, opts.truncation);
}

} // namespace hopfkit
